"""Worklist-driven partition refinement over fuzzy labeled graphs.

Both engines split blocks by per-vertex signatures computed against the
current partition.  When a block splits, only the blocks of predecessors of
its members can have stale signatures, so those are re-queued; the total
number of splits is bounded by the number of vertices.
"""
from __future__ import annotations

from typing import Callable, Dict, List, Set

from .graph import Flg, Vertex


class RefinableMap:
    """A mutable vertex -> block-id map with block extents and a dirty queue."""

    def __init__(self, vertices: List[Vertex], preds: Dict[Vertex, list]):
        self.assignment: Dict[Vertex, int] = {v: 0 for v in vertices}
        self.blocks: Dict[int, Set[Vertex]] = {0: set(vertices)}
        self.preds = preds
        self.dirty: Set[int] = set()
        self._next = 1

    def block_count(self) -> int:
        return len(self.blocks)

    def mark_all_dirty(self):
        self.dirty.update(self.blocks)

    def _mark_preds(self, members):
        for v in members:
            for p in self.preds[v]:
                self.dirty.add(self.assignment[p])

    def split_block(self, bid: int, key_of: Callable[[Vertex], object]) -> bool:
        """Split one block by a key function; returns True when it split."""
        members = self.blocks[bid]
        if len(members) == 1:
            return False
        groups: Dict[object, list] = {}
        for v in members:
            groups.setdefault(key_of(v), []).append(v)
        if len(groups) == 1:
            return False
        # Keep the largest group under the old id to minimize reassignment.
        ordered = sorted(groups.values(), key=len, reverse=True)
        for group in ordered[1:]:
            new_bid = self._next
            self._next += 1
            self.blocks[new_bid] = set(group)
            for v in group:
                self.assignment[v] = new_bid
            members.difference_update(group)
            self.dirty.add(new_bid)
        self.dirty.add(bid)
        self._mark_preds(self.blocks[bid] | {v for g in ordered[1:] for v in g})
        return True

    def split_all(self, key_of: Callable[[Vertex], object]) -> int:
        """Split every block by a key function (used for static label keys)."""
        splits = 0
        for bid in list(self.blocks):
            if self.split_block(bid, key_of):
                splits += 1
        return splits

    def refine(self, signature_of: Callable[[Vertex], object], trace=None):
        """Run signature splitting to a fixpoint, starting from the dirty set."""
        self.mark_all_dirty()
        while self.dirty:
            bid = self.dirty.pop()
            if self.split_block(bid, signature_of) and trace is not None:
                trace(f"block {bid} split; {self.block_count()} blocks now")

    def snapshot(self) -> Dict[Vertex, int]:
        return dict(self.assignment)


def adjacency(g: Flg):
    """(sorted vertices, out-edge lists, predecessor lists) for refinement runs."""
    vertices = sorted(g.vertices)
    out = {v: list(g.out_edges(v)) for v in vertices}
    preds = {v: g.predecessors(v) for v in vertices}
    return vertices, out, preds
