r"""Type detection, normalization, canonical forms and the structural
predicates."""
from itertools import combinations

import pytest

from rauzy.core import Pair, parse_pair, rename, from_one_row
from rauzy.moves import is_standard
from rauzy.invariants import p_list, m_value, s_map, arf_count
from rauzy.switches import inner_switch, outer_switch, is_pwor
from rauzy.classify import (
    type_of,
    reduce_blocks,
    normalize_type,
    canonical_form,
    canonical_form_extended,
    same_class,
    is_sigma,
    is_order_reversing,
    is_degenerate_star,
    is_good,
    find_good_or_degenerate,
)
from rauzy.census import enumerate_class
from test_core import irreducible_pairs


def or_pair(sizes):
    r"""A standard PWOR pair with the given interior block sizes."""
    n = sum(sizes) + 2
    letters = ["a"] + ["x%d" % i for i in range(n - 2)] + ["z"]
    top = tuple(letters)
    bottom = ["z"]
    k = 1
    for s in sizes:
        bottom.extend(reversed(letters[k : k + s]))
        k += s
    bottom.append("a")
    return Pair(top, tuple(bottom))


def test_type_of():
    assert type_of(parse_pair("a b c z / z c b a")) == "T1"
    assert type_of(or_pair([2])) == "T1"  # single 2-block chain stays T1
    assert type_of(or_pair([2, 1, 2])) == "T2"
    assert type_of(or_pair([2, 2, 1, 3])) == "T3"
    assert type_of(or_pair([4, 1, 2])) == "T4"
    assert type_of(or_pair([5, 1, 2])) == "T5"
    assert type_of(or_pair([2, 2, 3])) == "T3"  # 2-blocks then a 3 is one chain
    assert type_of(or_pair([4, 1, 4])) is None


def test_reduce_blocks():
    for sizes in ([8, 2], [7, 2], [6, 2], [9], [4, 1, 4], [5, 1, 5], [5, 1, 4]):
        p = or_pair(sizes)
        q, seq = reduce_blocks(p)
        dec = is_pwor(q)
        assert dec is not None
        assert s_map(q) == s_map(p)
        big = [s for s in dec.sizes() if s >= 4]
        assert type_of(q) == "T1" or (max(dec.sizes()) <= 5 and len(big) <= 1)


def test_normalize_type():
    q, tag, seq = normalize_type(parse_pair("a b c z / z c b a"))
    assert tag == "T1" and q == parse_pair("a b c z / z c b a")
    for n in range(2, 7):
        for p in irreducible_pairs(n):
            q, tag, seq = normalize_type(p)
            assert tag == type_of(q)
            assert s_map(q) == s_map(p)


def test_canonical_form():
    for n in range(2, 7):
        for p in irreducible_pairs(n):
            c = canonical_form(p)
            assert canonical_form(c) == c
    # two T2 pairs with the same (P, M) but different chain orders
    a = canonical_form(or_pair([2, 1, 2, 2, 1, 2]))
    b = canonical_form(or_pair([2, 2, 1, 2, 1, 2]))
    assert a == b


def test_canonical_form_extended():
    for n in range(2, 6):
        for p in irreducible_pairs(n):
            c = canonical_form_extended(p)
            assert canonical_form_extended(c) == c
            assert m_value(c) == max(p_list(c)) + 1


def test_same_class():
    p = parse_pair("a b c z / z c b a")
    assert same_class(p, rename(p, {"a": "p", "b": "q", "c": "r", "z": "s"}))
    assert not same_class(p, parse_pair("a b c z / z b c a"))
    # class scope distinguishes markings that the extended scope merges
    for q in enumerate_class(parse_pair("a b c d / d c b a"), "extended"):
        assert same_class(p, q, "extended")


def test_is_sigma():
    assert is_sigma(or_pair([1, 1, 1]))
    assert is_sigma(parse_pair("a b c z / z b c a"))
    assert is_sigma(or_pair([3]))
    assert not is_sigma(or_pair([2, 1, 2]))


def test_sigma_switch_closure():
    for n in range(4, 8):
        for p in irreducible_pairs(n):
            if not is_standard(p) or not is_sigma(p):
                continue
            a, z = p.top[0], p.bottom[0]
            for b, c in combinations(p.top[1:-1], 2):
                try:
                    q, _ = inner_switch(p, b, c)
                except ValueError:
                    continue
                assert is_sigma(q)
            for b in p.top[1:-1]:
                for y in (a, z):
                    try:
                        q, _ = outer_switch(p, b, y)
                    except ValueError:
                        continue
                    assert is_sigma(q)


def test_predicates():
    p = parse_pair("a b c z / z c b a")
    assert is_order_reversing(p) and is_good(p) and not is_degenerate_star(p)
    assert is_degenerate_star(parse_pair("a c z / z c a"))
    assert is_order_reversing(parse_pair("a z / z a"))


def test_find_good_or_degenerate():
    p = parse_pair("a b c z / z c b a")
    q, tag = find_good_or_degenerate(p)
    assert q == p and tag == "good"
    with pytest.raises(ValueError):
        find_good_or_degenerate(parse_pair("a b c / c b a"))
    for n in range(4, 7):
        for p in irreducible_pairs(n):
            q, tag = find_good_or_degenerate(p)
            assert (tag == "good") == is_good(q)
            assert (tag == "degenerate") == is_degenerate_star(q)
            assert s_map(q) == s_map(p)


def test_find_good_leading_singleton_block():
    # regression: PWOR representative starting with a 1-block
    p = parse_pair("a b c d e f / e a b c f d")
    q, tag = find_good_or_degenerate(p)
    assert tag in ("good", "degenerate")
    assert is_good(q) or is_degenerate_star(q)
