r"""Inner/outer switches, PWOR decompositions, chains and the PWOR search."""
from itertools import combinations

import pytest

from rauzy.core import parse_pair, format_pair
from rauzy.moves import apply_path, format_path, is_standard
from rauzy.invariants import s_map, m_value, p_list
from rauzy.switches import (
    inner_switch,
    outer_switch,
    parse_switches,
    format_switches,
    apply_switches,
    is_pwor,
    chains,
    reorder_chains,
    to_pwor,
)
from test_core import irreducible_pairs


def test_inner_switch_example():
    p = parse_pair("a b c z / z b c a")
    q, path = inner_switch(p, "b", "c")
    assert q == parse_pair("a c b z / z c b a")
    assert format_path(path) == "r0^2 r1 r0 r1"
    assert apply_path(p, path) == q


def test_inner_switch_errors():
    p = parse_pair("a b c z / z c b a")
    with pytest.raises(ValueError):
        inner_switch(p, "b", "c")  # opposite orders in the two rows
    with pytest.raises(ValueError):
        inner_switch(parse_pair("a b c z / z b c a"), "a", "b")  # boundary letter
    with pytest.raises(ValueError):
        inner_switch(parse_pair("a b c / c a b"), "a", "b")  # not standard


def test_inner_switch_involution():
    for n in range(4, 7):
        for p in irreducible_pairs(n):
            if not is_standard(p):
                continue
            for b, c in combinations(p.top[1:-1], 2):
                try:
                    q, path = inner_switch(p, b, c)
                except ValueError:
                    continue
                assert is_standard(q)
                assert s_map(q) == s_map(p)
                assert apply_path(p, path) == q
                back, _ = inner_switch(q, c, b)
                assert back == p


def test_outer_switch_examples():
    p = parse_pair("a b z / z b a")
    q, path = outer_switch(p, "a", "b")
    assert q == parse_pair("b a z / z a b")
    assert apply_path(p, path) == q
    q, path = outer_switch(p, "b", "z")
    assert q == parse_pair("a z b / b z a")
    assert apply_path(p, path) == q


def test_outer_switch_preserves_p_list():
    for n in range(3, 7):
        for p in irreducible_pairs(n):
            if not is_standard(p):
                continue
            a, z = p.top[0], p.bottom[0]
            for b in p.top[1:-1]:
                for y in (a, z):
                    try:
                        q, path = outer_switch(p, b, y)
                    except ValueError:
                        continue
                    assert apply_path(p, path) == q
                    assert p_list(q) == p_list(p)


def test_switch_text_round_trip():
    text = "{b,c} {d,e}"
    seq = parse_switches(text)
    assert format_switches(seq) == text
    p = parse_pair("a b c d e z / z b c d e a")
    q = apply_switches(p, seq)
    assert q == parse_pair("a e c b d z / z e c b d a")


def test_is_pwor():
    dec = is_pwor(parse_pair("a b c z / z c b a"))
    assert dec is not None and dec.sizes() == (2,)
    dec = is_pwor(parse_pair("a b c z / z b c a"))
    assert dec is not None and dec.sizes() == (1, 1)
    assert is_pwor(parse_pair("a b c z / z c a b")) is None


def test_chains():
    ch = chains(parse_pair("a b c z / z c b a"))
    assert len(ch.chains) == 1 and ch.separators == ()
    assert [len(b) for b in ch.chains[0]] == [2]
    ch = chains(parse_pair("a b s c d z / z b s d c a"))
    assert ch.separators == ("b", "s")
    assert [list(map(len, c)) for c in ch.chains] == [[], [], [2]]


def test_reorder_chains():
    p = parse_pair("a b c s d e t z / z c b s e d t a")
    assert chains(p).separators == ("s", "t")
    q, seq = reorder_chains(p, (2, 1))
    assert apply_switches(p, seq) == q
    dec = is_pwor(q)
    assert dec is not None
    assert p_list(q) == p_list(p) and m_value(q) == m_value(p)
    # identity order is a no-op
    same, seq = reorder_chains(p, (1, 2))
    assert same == p and seq == []


def test_to_pwor():
    p = parse_pair("a b c z / z c b a")
    q, seq = to_pwor(p)
    assert q == p and seq == []
    for n in range(2, 7):
        for p in irreducible_pairs(n):
            q, seq = to_pwor(p)
            assert is_pwor(q) is not None, format_pair(p)
            assert s_map(q) == s_map(p)
