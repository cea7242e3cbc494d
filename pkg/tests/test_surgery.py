r"""Prefix extensions/restrictions, path extension and STAR pairs."""
import random
from itertools import combinations

import pytest

from rauzy.core import parse_pair, is_irreducible
from rauzy.moves import R0, R1, Move, Path, apply_path, is_standard, cycle_distance, to_standard
from rauzy.surgery import (
    ExtensionSpec,
    identity_extension,
    restrict,
    extend,
    implicit_extension,
    extension_preserves_irreducibility,
    extend_path,
    path_respects_restriction,
    is_star,
    star_pair,
    star_to_standard,
)
from rauzy.census import enumerate_class
from test_core import irreducible_pairs


def test_restrict():
    p = parse_pair("a b c / c b a")
    assert restrict(p, {"a", "c"}) == parse_pair("a c / c a")
    q = parse_pair("a b c z / z c b a")
    assert restrict(q, {"a", "b", "z"}) == parse_pair("a b z / z b a")
    with pytest.raises(ValueError):
        restrict(p, {"a", "b"})  # c is last in a row


def test_extend():
    p = parse_pair("a b / b a")
    omega = ExtensionSpec(
        frozenset("ab"),
        ({"a": ("a",), "b": ("x", "b")}, {"a": ("a",), "b": ("x", "b")}),
    )
    q = extend(p, omega)
    assert q == parse_pair("a x b / x b a")
    assert restrict(q, {"a", "b"}) == p
    assert extend(p, identity_extension(p)) == p


def test_restrict_extend_round_trip():
    for n in range(3, 6):
        for p in irreducible_pairs(n):
            for keep in combinations(p.top, n - 1):
                sub = set(keep)
                if p.top[-1] not in sub or p.bottom[-1] not in sub:
                    continue
                omega = implicit_extension(p, sub)
                assert extend(restrict(p, sub), omega) == p


def test_extension_preserves_irreducibility():
    p = parse_pair("a b / b a")
    omega = ExtensionSpec(
        frozenset("ab"),
        ({"a": ("a",), "b": ("x", "b")}, {"a": ("a",), "b": ("x", "b")}),
    )
    assert extension_preserves_irreducibility(p, omega)
    assert is_irreducible(extend(p, omega))
    # both row heads get the same one-letter prefix: reducible extension
    bad = ExtensionSpec(
        frozenset("ab"),
        ({"a": ("x", "a"), "b": ("b",)}, {"a": ("a",), "b": ("x", "b")}),
    )
    assert not extension_preserves_irreducibility(p, bad)
    assert not is_irreducible(extend(p, bad))
    assert extension_preserves_irreducibility(p, identity_extension(p))


def test_extend_path_empty():
    p = parse_pair("a b / b a")
    assert len(extend_path(p, Path.from_moves([]), identity_extension(p))) == 0


def test_extend_path_commuting_square():
    rng = random.Random(7)
    for n in range(3, 6):
        for p in irreducible_pairs(n):
            if rng.random() < 0.8:
                continue
            for keep in combinations(p.top, n - 1):
                sub = set(keep)
                if p.top[-1] not in sub or p.bottom[-1] not in sub:
                    continue
                small = restrict(p, sub)
                if not is_irreducible(small):
                    continue
                omega = implicit_extension(p, sub)
                gamma = Path.from_moves(
                    [rng.choice((R0, R1)) for _ in range(rng.randrange(1, 5))]
                )
                lifted = extend_path(small, gamma, omega)
                assert apply_path(p, lifted) == extend(apply_path(small, gamma), omega)
                assert path_respects_restriction(p, lifted, sub)


def test_star_pair():
    p = parse_pair("a b c d / c a d b")
    w = is_star(p)
    assert w is not None and w.epsilon == 0
    assert is_star(parse_pair("a b c z / z c b a")) is None
    assert is_star(parse_pair("a z / z a")) is not None
    for n in range(2, 7):
        for eps in (0, 1):
            q = star_pair(n, eps)
            assert is_star(q) is not None


def test_star_to_standard():
    for n in range(3, 7):
        for eps in (0, 1):
            p = star_pair(n, eps)
            q, path = star_to_standard(p)
            assert is_standard(q)
            assert apply_path(p, path) == q
            pos0, pos1 = q.pos(0), q.pos(1)
            assert all(pos0[b] + pos1[b] == n + 1 for b in q.top)


def test_star_distance():
    # STAR pairs sit at the maximal cycle distance n-2 from standard pairs
    for n in (4, 5):
        p = star_pair(n, 0)
        closure = enumerate_class(p, "class")
        dist = min(cycle_distance(p, q) for q in closure if is_standard(q))
        assert dist == n - 2
