r"""Pairs, parsing, monodromy and the basic symmetries."""
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from rauzy.core import (
    Pair,
    parse_pair,
    format_pair,
    is_irreducible,
    monodromy,
    from_one_row,
    inverse,
    h_map,
    rename,
    canonical_alphabet,
)


def all_pairs(n):
    top = canonical_alphabet(n)
    for bot in permutations(top):
        yield Pair(top, tuple(bot))


def irreducible_pairs(n):
    return (p for p in all_pairs(n) if is_irreducible(p))


def test_parse_format_round_trip():
    for text in ("a b c / c b a", "1 2 / 2 1", "a b c d / b d a c"):
        p = parse_pair(text)
        assert format_pair(p) == text
        assert parse_pair(format_pair(p)) == p


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_pair("a b / a")
    with pytest.raises(ValueError):
        parse_pair("a a / a a")
    with pytest.raises(ValueError):
        parse_pair("a b / a c")
    with pytest.raises(ValueError):
        parse_pair("a / a")


def test_is_irreducible():
    assert is_irreducible(parse_pair("a b c / c b a"))
    assert not is_irreducible(parse_pair("a b c / a c b"))
    assert is_irreducible(parse_pair("a b c d / b d a c"))


def test_monodromy():
    assert monodromy(parse_pair("a b c / c b a")) == (3, 2, 1)
    assert monodromy(parse_pair("a b / b a")) == (2, 1)
    assert monodromy(parse_pair("a b c d / d a c b")) == (2, 4, 3, 1)


def test_from_one_row_round_trip():
    for n in range(2, 7):
        for perm in permutations(range(1, n + 1)):
            assert monodromy(from_one_row(perm)) == perm


def test_inverse():
    p = parse_pair("a b c / c a b")
    assert inverse(p) == parse_pair("c a b / a b c")
    assert inverse(inverse(p)) == p


def test_inverse_monodromy():
    for n in range(2, 6):
        for p in all_pairs(n):
            img = monodromy(p)
            inv = monodromy(inverse(p))
            assert all(inv[img[i] - 1] == i + 1 for i in range(n))


def test_h_map():
    p = parse_pair("a b c / c a b")
    assert h_map(p) == parse_pair("c b a / b a c")
    assert h_map(h_map(p)) == p


def test_rename():
    p = parse_pair("a b / b a")
    assert rename(p, {"a": "x", "b": "y"}) == parse_pair("x y / y x")
    assert rename(p, {"a": "a", "b": "b"}) == p
    with pytest.raises(ValueError):
        rename(p, {"a": "x", "b": "x"})


@given(st.permutations(list(range(1, 7))))
def test_rename_preserves_monodromy_and_irreducibility(perm):
    p = from_one_row(tuple(perm))
    tau = {b: b + b for b in p.top}
    q = rename(p, tau)
    assert monodromy(q) == monodromy(p)
    assert is_irreducible(q) == is_irreducible(p)
