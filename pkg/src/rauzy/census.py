r"""Exhaustive ground truth: BFS class closures, a census of the
non-labeled classes at a given size, and switch-graph connectivity.

The closure of a pair under right moves (or all four moves) is computed by
plain breadth-first search with labeled deduplication.  The census
partitions all irreducible one-row permutations by their monodromy images
under the closure, so classes are disjoint and cover everything by
construction.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations

from .core import Pair, format_pair, from_one_row, is_irreducible, monodromy
from .invariants import Signature, signature
from .moves import L0, L1, R0, R1, apply_move, is_standard
from .switches import inner_switch, outer_switch

__all__ = [
    "enumerate_class",
    "ClassRecord",
    "class_census",
    "census_jsonl",
    "switch_graph_connected",
    "irreducible_count",
]


def _generators(scope: str):
    if scope == "class":
        return (R0, R1)
    if scope == "extended":
        return (R0, R1, L0, L1)
    raise ValueError("scope must be 'class' or 'extended'")


def enumerate_class(p: Pair, scope: str = "class") -> frozenset:
    """The labeled closure of irreducible ``p`` under right moves (class
    scope) or all four moves (extended scope)."""
    if not is_irreducible(p):
        raise ValueError("enumeration starts from an irreducible pair")
    gens = _generators(scope)
    seen = {p}
    frontier = deque([p])
    while frontier:
        cur = frontier.popleft()
        for g in gens:
            nxt = apply_move(cur, g)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


@dataclass(frozen=True)
class ClassRecord:
    """One non-labeled class of the census."""

    representative: Pair
    size: int  # one-row permutations (monodromy images) in the class
    standard_count: int
    signature: Signature

    def __post_init__(self):
        assert self.size >= 1 and self.standard_count >= 1


def class_census(n: int, scope: str = "class", max_n: int = 8):
    """All non-labeled (or extended) classes on n letters, sorted by
    (size, signature)."""
    if not 2 <= n <= max_n:
        raise ValueError("n must be between 2 and %d" % max_n)
    assigned = set()
    records = []
    for perm in permutations(range(1, n + 1)):
        if perm in assigned:
            continue
        p = from_one_row(perm)
        if not is_irreducible(p):
            continue
        closure = enumerate_class(p, scope)
        images = {monodromy(q) for q in closure}
        assert perm in images and not (images & assigned)
        assigned |= images
        standard = sum(
            1 for img in images if img[0] == n and img[-1] == 1
        )
        records.append(
            ClassRecord(p, len(images), standard, signature(p, scope))
        )
    assert len(assigned) == irreducible_count(n)
    records.sort(
        key=lambda r: (r.size, r.signature.type_tag, r.signature.p, r.signature.m or 0)
    )
    return records


def irreducible_count(n: int) -> int:
    """Brute-force count of irreducible (indecomposable) one-row
    permutations of size n: no proper prefix maps onto itself."""
    count = 0
    for perm in permutations(range(1, n + 1)):
        if all(max(perm[:k]) > k for k in range(1, n)):
            count += 1
    return count


def census_jsonl(records, n: int, scope: str):
    """One JSON line per record, in census order."""
    for r in records:
        yield json.dumps(
            {
                "n": n,
                "scope": scope,
                "rep": format_pair(r.representative),
                "size": r.size,
                "standard": r.standard_count,
                "type": r.signature.type_tag,
                "p": list(r.signature.p),
                "m": r.signature.m,
            },
            sort_keys=False,
        )


def switch_graph_connected(members, scope: str = "class") -> bool:
    """Connectivity of the switch graph on the standard pairs of a full
    class closure: edges are single inner switches (class scope), plus
    outer switches in extended scope."""
    members = frozenset(members)
    gens = _generators(scope)
    for q in members:
        if any(apply_move(q, g) not in members for g in gens):
            raise ValueError("input is not closed under the class moves")
    nodes = [q for q in members if is_standard(q)]
    if not nodes:
        raise ValueError("a class closure always holds a standard pair")
    index = {q: i for i, q in enumerate(nodes)}
    seen = {nodes[0]}
    frontier = deque([nodes[0]])
    while frontier:
        cur = frontier.popleft()
        boundary = (cur.top[0], cur.bottom[0])
        interior = cur.top[1:-1]
        for b, c in combinations(interior, 2):
            try:
                nxt, _ = inner_switch(cur, b, c)
            except ValueError:
                continue
            if nxt in index and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
        if scope == "extended":
            for b in interior:
                for y in boundary:
                    try:
                        nxt, _ = outer_switch(cur, b, y)
                    except ValueError:
                        continue
                    if nxt in index and nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
    return len(seen) == len(nodes)
