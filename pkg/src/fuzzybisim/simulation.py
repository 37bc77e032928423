"""Greatest crisp/fuzzy simulations between two graphs or systems, and
between-system bisimulations via disjoint union.

Both simulation engines run chaotic-iteration decreasing fixpoints with a
worklist keyed by changed pairs; termination is guaranteed because degrees
live in the finite pool closed under the Goedel operators.
"""
from __future__ import annotations

from collections import deque
from typing import Dict

from .degrees import Degree, ZERO, ONE, residuum, sup, inf
from .graph import Flg, to_flg, as_nflts, disjoint_union, ModelError
from .model import Nfts, Nflts
from .relations import CrispRelation, FuzzyRelation
from .crisp_engine import crisp_partition_system, CrispEngineConfig
from .fuzzy_engine import fuzzy_partition_system, FuzzyEngineConfig


def _require_signature(g: Flg, g_prime: Flg):
    if not g.same_signature(g_prime):
        raise ModelError("graphs must share vertex and edge alphabets")


def _require_alphabets(a: Nflts, b: Nflts):
    if a.actions != b.actions:
        raise ModelError("systems must share the action alphabet")
    if a.label_alphabet != b.label_alphabet:
        raise ModelError("systems must share the label alphabet")


def greatest_crisp_simulation_flg(g: Flg, g_prime: Flg) -> CrispRelation:
    """Greatest Z with label dominance and forward edge matching; may be empty."""
    _require_signature(g, g_prime)
    pairs = {
        (x, y)
        for x in g.vertices
        for y in g_prime.vertices
        if g.labels[x] <= g_prime.labels[y]
    }

    def satisfied(x, x_prime) -> bool:
        for r, y, degree in g.out_edges(x):
            if not any(
                (y, y_prime) in pairs and degree <= d2
                for r2, y_prime, d2 in g_prime.out_edges(x_prime)
                if r2 == r
            ):
                return False
        return True

    pending = deque(pairs)
    while pending:
        pair = pending.popleft()
        if pair not in pairs or satisfied(*pair):
            continue
        pairs.discard(pair)
        x, x_prime = pair
        for p in g.predecessors(x):
            for q in g_prime.predecessors(x_prime):
                if (p, q) in pairs:
                    pending.append((p, q))
    return CrispRelation(g.vertices, g_prime.vertices, pairs)


def greatest_fuzzy_simulation_flg(g: Flg, g_prime: Flg) -> FuzzyRelation:
    """Greatest fuzzy Z under the label residuum bound and the edge clause.

    Updates use the Goedel adjunction: Z(x, x') is capped, per positive edge
    (x, r, y), by the best residuum(E(x,r,y), min(E'(x',r,y'), Z(y, y'))).
    """
    _require_signature(g, g_prime)
    values: Dict[tuple, Degree] = {}
    for x in g.vertices:
        for y in g_prime.vertices:
            values[(x, y)] = inf(
                residuum(d, g_prime.labels[y](p)) for p, d in g.labels[x].items()
            )

    def bound(x, x_prime) -> Degree:
        out = ONE
        for r, y, degree in g.out_edges(x):
            best = sup(
                residuum(degree, min(d2, values[(y, y_prime)]))
                for r2, y_prime, d2 in g_prime.out_edges(x_prime)
                if r2 == r
            )
            out = min(out, best)
        return out

    pending = deque(values)
    while pending:
        pair = pending.popleft()
        if values[pair] == ZERO:
            continue
        new = min(values[pair], bound(*pair))
        if new < values[pair]:
            values[pair] = new
            x, x_prime = pair
            for p in g.predecessors(x):
                for q in g_prime.predecessors(x_prime):
                    if values[(p, q)] > ZERO:
                        pending.append((p, q))
    return FuzzyRelation(g.vertices, g_prime.vertices, values)


def _state_restrict_crisp(Z: CrispRelation, a: Nflts, b: Nflts) -> CrispRelation:
    kept = {
        (x.key, y.key) for x, y in Z.pairs if x.is_state and y.is_state
    }
    return CrispRelation(a.states, b.states, kept)


def crisp_simulation_nflts(a: Nfts, b: Nfts) -> CrispRelation:
    """Greatest crisp simulation between two systems, over S x S'."""
    a, b = as_nflts(a), as_nflts(b)
    _require_alphabets(a, b)
    Z = greatest_crisp_simulation_flg(to_flg(a), to_flg(b))
    return _state_restrict_crisp(Z, a, b)


def fuzzy_simulation_nflts(a: Nfts, b: Nfts) -> FuzzyRelation:
    """Greatest fuzzy simulation between two systems, over S x S'."""
    a, b = as_nflts(a), as_nflts(b)
    _require_alphabets(a, b)
    Z = greatest_fuzzy_simulation_flg(to_flg(a), to_flg(b))
    kept = {
        (x.key, y.key): d
        for (x, y), d in Z.entries.items()
        if x.is_state and y.is_state
    }
    return FuzzyRelation(a.states, b.states, kept)


def bisimulation_between_nflts(a: Nfts, b: Nfts, mode: str = "crisp", verbose: bool = False):
    """Greatest crisp/fuzzy bisimulation between two systems.

    Reduced to the auto-bisimulation of the disjoint union; the cross pairs
    are read off through the injections.
    """
    a, b = as_nflts(a), as_nflts(b)
    _require_alphabets(a, b)
    union, inject_a, inject_b = disjoint_union(a, b)
    if mode == "crisp":
        partition = crisp_partition_system(union, CrispEngineConfig(verbose=verbose))
        pairs = {
            (s, t)
            for s in a.states
            for t in b.states
            if partition.same_block(inject_a[s], inject_b[t])
        }
        return CrispRelation(a.states, b.states, pairs)
    if mode == "fuzzy":
        cfp = fuzzy_partition_system(union, FuzzyEngineConfig(verbose=verbose))
        entries = {
            (s, t): cfp.degree_of(inject_a[s], inject_b[t])
            for s in a.states
            for t in b.states
        }
        return FuzzyRelation(a.states, b.states, entries)
    raise ValueError(f"unknown mode {mode!r}")
