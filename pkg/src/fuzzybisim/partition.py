"""Crisp partitions and compact fuzzy partitions.

A compact fuzzy partition represents a fuzzy equivalence relation (under the
Goedel semantics) as a degree-annotated tree in linear space: the degree of a
pair of elements is the degree stored at the lowest common ancestor of their
leaves.  Queries use an Euler tour plus a sparse table, so a single degree
lookup costs O(log n) at worst and O(1) after the tour is built.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Tuple

from .degrees import Degree, ZERO, ONE, format_degree, parse_degree
from .relations import FuzzyRelation, CrispRelation, relation_laws


class NotAnEquivalenceError(ValueError):
    """Raised when a relation misses one of the fuzzy equivalence laws."""

    def __init__(self, laws: list, witnesses: dict):
        self.laws = laws
        self.witnesses = witnesses
        detail = "; ".join(f"{law} fails at {witnesses.get(law)}" for law in laws)
        super().__init__(f"not a fuzzy equivalence relation: {detail}")


class CrispPartition:
    """Disjoint non-empty blocks covering a finite universe, canonically ordered."""

    def __init__(self, blocks: Iterable[Iterable]):
        canonical = []
        seen = set()
        for block in blocks:
            block = tuple(sorted(set(block)))
            if not block:
                raise ValueError("empty block in partition")
            if seen & set(block):
                raise ValueError("overlapping blocks in partition")
            seen.update(block)
            canonical.append(block)
        canonical.sort(key=lambda b: b[0])
        self.blocks: Tuple[tuple, ...] = tuple(canonical)
        self.universe = frozenset(seen)
        self._block_of = {x: i for i, block in enumerate(self.blocks) for x in block}

    @classmethod
    def from_assignment(cls, assignment: Dict) -> "CrispPartition":
        grouped: Dict[object, list] = {}
        for element, key in assignment.items():
            grouped.setdefault(key, []).append(element)
        return cls(grouped.values())

    @classmethod
    def from_relation(cls, relation: CrispRelation) -> "CrispPartition":
        """Blocks of an equivalence relation given as a set of pairs."""
        assignment = {}
        for x in relation.left:
            assignment[x] = frozenset(relation.forward(x))
        return cls.from_assignment(assignment)

    def block_of(self, x) -> tuple:
        return self.blocks[self._block_of[x]]

    def same_block(self, x, y) -> bool:
        return self._block_of[x] == self._block_of[y]

    def to_relation(self) -> CrispRelation:
        pairs = {(x, y) for block in self.blocks for x in block for y in block}
        return CrispRelation(self.universe, self.universe, pairs)

    def restrict(self, universe: Iterable) -> "CrispPartition":
        universe = frozenset(universe)
        kept = [[x for x in block if x in universe] for block in self.blocks]
        return CrispPartition(b for b in kept if b)

    def refines(self, coarser: "CrispPartition") -> bool:
        """True when every block here lies inside one block of `coarser`."""
        return all(
            len({coarser._block_of[x] for x in block}) == 1 for block in self.blocks
        )

    def text(self, name=str) -> str:
        inner = ",".join("{" + ",".join(name(x) for x in block) + "}" for block in self.blocks)
        return "{" + inner + "}"

    def __eq__(self, other) -> bool:
        return isinstance(other, CrispPartition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __repr__(self) -> str:
        return self.text()


class Block:
    """A node of a compact fuzzy partition tree.

    A crisp block stores its elements and has degree 1; a fuzzy block stores
    at least two subblocks and a degree strictly below all of theirs.
    """

    __slots__ = ("degree", "elements", "subblocks", "parent", "least")

    def __init__(self, degree: Degree, elements: Optional[frozenset] = None, subblocks: Tuple["Block", ...] = ()):
        self.degree = degree
        self.elements = elements
        self.subblocks = subblocks
        self.parent: Optional[Block] = None
        self.least = None

    @property
    def is_crisp(self) -> bool:
        return self.elements is not None

    def any_element(self):
        block = self
        while not block.is_crisp:
            block = block.subblocks[0]
        return next(iter(block.elements))

    def all_elements(self) -> set:
        if self.is_crisp:
            return set(self.elements)
        out = set()
        for child in self.subblocks:
            out |= child.all_elements()
        return out

    def __repr__(self) -> str:
        return cfp_text_of_block(self)


def crisp_block(elements: Iterable) -> Block:
    elements = frozenset(elements)
    if not elements:
        raise ValueError("crisp block must be non-empty")
    return Block(ONE, elements=elements)


def fuzzy_block(degree: Degree, subblocks: Iterable[Block]) -> Block:
    subblocks = tuple(subblocks)
    if len(subblocks) < 2:
        raise ValueError("fuzzy block needs at least two subblocks")
    if not ZERO <= degree < ONE:
        raise ValueError("fuzzy block degree must lie in [0, 1)")
    return Block(degree, subblocks=subblocks)


def cfp_text_of_block(block: Block, name=str) -> str:
    if block.is_crisp:
        inner = ",".join(name(x) for x in sorted(block.elements))
    else:
        inner = ",".join(cfp_text_of_block(child, name) for child in block.subblocks)
    return "{" + inner + "}:" + format_degree(block.degree)


class CompactFuzzyPartition:
    """A validated, canonically ordered compact fuzzy partition with LCA queries."""

    def __init__(self, root: Block):
        self.root = _canonicalize(root)
        self._nodes: List[Block] = []
        self._leaf_of: Dict[object, int] = {}
        self._validate()
        self._build_lca()
        self.universe = frozenset(self._leaf_of)

    # -- structure ----------------------------------------------------

    def _validate(self):
        seen = set()
        stack = [(self.root, None)]
        while stack:
            block, parent = stack.pop()
            block.parent = parent
            if block.is_crisp:
                if block.degree != ONE:
                    raise ValueError("crisp block must have degree 1")
                overlap = seen & block.elements
                if overlap:
                    raise ValueError(f"element {next(iter(overlap))!r} appears in two leaves")
                seen.update(block.elements)
            else:
                if len(block.subblocks) < 2:
                    raise ValueError("fuzzy block needs at least two subblocks")
                for child in block.subblocks:
                    if child.degree <= block.degree:
                        raise ValueError("degrees must strictly increase towards the leaves")
                    stack.append((child, block))

    def _build_lca(self):
        # Iterative Euler tour; depth of a CFP tree is bounded by the number
        # of distinct degrees, but large universes make iteration safer.
        index_of: Dict[int, int] = {}
        euler: List[int] = []
        depth: List[int] = []
        first: List[int] = []
        stack: List[tuple] = [(self.root, 0, iter(self.root.subblocks))]
        self._register(self.root, index_of, first, euler, depth, 0)
        while stack:
            node, d, children = stack[-1]
            child = next(children, None)
            if child is None:
                stack.pop()
                if stack:
                    parent, pd, _ = stack[-1]
                    euler.append(index_of[id(parent)])
                    depth.append(pd)
                continue
            self._register(child, index_of, first, euler, depth, d + 1)
            stack.append((child, d + 1, iter(child.subblocks)))
        self._euler = euler
        self._depth = depth
        self._first = first
        size = len(euler)
        logs = [0] * (size + 1)
        for i in range(2, size + 1):
            logs[i] = logs[i >> 1] + 1
        self._logs = logs
        table = [list(range(size))]
        k = 1
        while (1 << k) <= size:
            prev = table[k - 1]
            row = []
            half = 1 << (k - 1)
            for i in range(size - (1 << k) + 1):
                a, b = prev[i], prev[i + half]
                row.append(a if depth[a] <= depth[b] else b)
            table.append(row)
            k += 1
        self._table = table

    def _register(self, block: Block, index_of, first, euler, depth, d):
        idx = len(self._nodes)
        index_of[id(block)] = idx
        self._nodes.append(block)
        first.append(len(euler))
        euler.append(idx)
        depth.append(d)
        if block.is_crisp:
            for x in block.elements:
                self._leaf_of[x] = idx

    # -- queries ------------------------------------------------------

    def degree_of(self, x, y) -> Degree:
        """The degree of the lowest common ancestor of the leaves holding x and y."""
        try:
            i = self._first[self._leaf_of[x]]
            j = self._first[self._leaf_of[y]]
        except KeyError as exc:
            raise KeyError(f"element {exc.args[0]!r} not in the partition") from exc
        if i > j:
            i, j = j, i
        k = self._logs[j - i + 1]
        a = self._table[k][i]
        b = self._table[k][j - (1 << k) + 1]
        depth = self._depth
        return self._nodes[self._euler[a if depth[a] <= depth[b] else b]].degree

    def to_relation(self) -> FuzzyRelation:
        """The fuzzy equivalence relation this tree encodes (quadratic output)."""
        entries: Dict[tuple, Degree] = {}

        def walk(block: Block) -> list:
            if block.is_crisp:
                members = list(block.elements)
                for x in members:
                    for y in members:
                        entries[(x, y)] = ONE
                return members
            groups = [walk(child) for child in block.subblocks]
            if block.degree > ZERO:
                for i, left in enumerate(groups):
                    for right in groups[i + 1 :]:
                        for x in left:
                            for y in right:
                                entries[(x, y)] = block.degree
                                entries[(y, x)] = block.degree
            return [x for group in groups for x in group]

        walk(self.root)
        return FuzzyRelation(self.universe, self.universe, entries)

    def top_blocks(self) -> Tuple[Block, ...]:
        """Subblocks of the root (or the root itself when it is crisp)."""
        if self.root.is_crisp:
            return (self.root,)
        return self.root.subblocks

    def leaf_partition(self) -> CrispPartition:
        return CrispPartition(b.elements for b in self._nodes if b.is_crisp)

    def text(self, name=str) -> str:
        return cfp_text_of_block(self.root, name)

    def to_json(self, name=str) -> dict:
        def encode(block: Block) -> dict:
            if block.is_crisp:
                return {"degree": format_degree(block.degree), "elements": sorted(name(x) for x in block.elements)}
            return {"degree": format_degree(block.degree), "subblocks": [encode(c) for c in block.subblocks]}

        return encode(self.root)

    @classmethod
    def from_json(cls, data: dict) -> "CompactFuzzyPartition":
        def decode(node: dict) -> Block:
            degree = parse_degree(node["degree"])
            if "elements" in node:
                return Block(degree, elements=frozenset(node["elements"]))
            return Block(degree, subblocks=tuple(decode(c) for c in node["subblocks"]))

        return cls(decode(data))

    def structurally_equal(self, other: "CompactFuzzyPartition") -> bool:
        def eq(a: Block, b: Block) -> bool:
            if a.degree != b.degree or a.is_crisp != b.is_crisp:
                return False
            if a.is_crisp:
                return a.elements == b.elements
            return len(a.subblocks) == len(b.subblocks) and all(
                eq(x, y) for x, y in zip(a.subblocks, b.subblocks)
            )

        return eq(self.root, other.root)

    def __eq__(self, other) -> bool:
        return isinstance(other, CompactFuzzyPartition) and self.structurally_equal(other)

    def __hash__(self) -> int:
        return hash(self.text())

    def __repr__(self) -> str:
        return self.text()


def _canonicalize(block: Block) -> Block:
    """Order subblocks by their least element so serialized output is stable."""
    if block.is_crisp:
        copy = Block(block.degree, elements=block.elements)
        copy.least = min(block.elements)
        return copy
    children = [_canonicalize(child) for child in block.subblocks]
    children.sort(key=lambda c: c.least)
    copy = Block(block.degree, subblocks=tuple(children))
    copy.least = children[0].least
    return copy


def cfp_from_relation(r: FuzzyRelation) -> CompactFuzzyPartition:
    """Build the compact fuzzy partition of a fuzzy equivalence relation.

    The relation is checked first; a violation raises NotAnEquivalenceError
    naming the broken law and a witness tuple.
    """
    report = relation_laws(r)
    if not report.is_equivalence:
        raise NotAnEquivalenceError(report.violated(), report.witnesses)
    return CompactFuzzyPartition(_build_block(sorted(r.left), r))


def _build_block(elements: list, r: FuzzyRelation) -> Block:
    degree = min(
        (r(x, y) for i, x in enumerate(elements) for y in elements[i + 1 :]),
        default=ONE,
    )
    if degree == ONE:
        return Block(ONE, elements=frozenset(elements))
    # Classes of x ~ y iff r(x, y) > degree; transitivity makes one scan enough.
    classes: List[list] = []
    for x in elements:
        for group in classes:
            if r(group[0], x) > degree:
                group.append(x)
                break
        else:
            classes.append([x])
    return Block(degree, subblocks=tuple(_build_block(group, r) for group in classes))


def degree_query(cfp: CompactFuzzyPartition, x, y) -> Degree:
    """Pointwise degree of the encoded relation; equals cfp.to_relation()(x, y)."""
    return cfp.degree_of(x, y)
