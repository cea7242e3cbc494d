r"""The class invariants S, M, Y, P and the quadratic form / ARF count."""
from rauzy.core import parse_pair, inverse
from rauzy.moves import R0, R1, L0, L1, apply_move
from rauzy.invariants import (
    s_map,
    cycles,
    m_value,
    y_map,
    p_list,
    quad_form,
    arf_count,
    arf_by_blocks,
    signature,
    Signature,
)
from test_core import irreducible_pairs


def cycle_sets(perm):
    return {frozenset(c) for c in cycles(perm)}


def test_s_map_examples():
    s = s_map(parse_pair("a z / z a"))
    assert cycle_sets(s) == {frozenset("az")}
    s = s_map(parse_pair("a b c z / z c b a"))
    assert cycle_sets(s) == {frozenset("abcz")}
    assert s["a"] == "c" and s["c"] == "b" and s["b"] == "z" and s["z"] == "a"
    s = s_map(parse_pair("a b c z / z b c a"))
    assert cycle_sets(s) == {frozenset("az"), frozenset("b"), frozenset("c")}


def test_m_value_examples():
    assert m_value(parse_pair("a b c z / z c b a")) == 4
    assert m_value(parse_pair("a b c z / z b c a")) == 2
    assert m_value(parse_pair("a z / z a")) == 2


def test_y_map_examples():
    y = y_map(parse_pair("a z / z a"))
    assert y == {"z": "z"}
    y = y_map(parse_pair("a b c z / z c b a"))
    assert cycle_sets(y) == {frozenset("bcz")}
    y = y_map(parse_pair("a b c z / z b c a"))
    assert y == {"b": "b", "c": "c", "z": "z"}


def test_p_list_examples():
    assert p_list(parse_pair("a b c z / z c b a")) == (3,)
    assert p_list(parse_pair("a b c z / z b c a")) == (1, 1, 1)
    assert p_list(parse_pair("a z / z a")) == (1,)


def test_y_cycles_sum():
    for n in range(2, 7):
        for p in irreducible_pairs(n):
            assert sum(p_list(p)) == n - 1


def test_quad_form():
    q = quad_form(parse_pair("a z / z a"))
    assert q.crossing == frozenset({frozenset("az")})
    q = quad_form(parse_pair("a b c z / z c b a"))
    assert len(q.crossing) == 6  # every pair crosses
    q = quad_form(parse_pair("a b c / c a b"))
    assert q.crossing == frozenset({frozenset("ac"), frozenset("bc")})
    # evaluation: Q(v) = sum v_b + sum_{crossing} v_a v_b mod 2
    assert q({"a": 1, "b": 0, "c": 0}) == 1
    assert q({"a": 1, "b": 0, "c": 1}) == 1
    assert q({"a": 0, "b": 0, "c": 0}) == 0


def test_arf_anchors():
    assert arf_count(parse_pair("a z / z a")) == 3
    assert arf_count(parse_pair("a b c z / z c b a")) == 10
    assert arf_count(parse_pair("a b c d e z / z e d c b a")) == 28


def test_arf_by_blocks():
    assert arf_by_blocks(0, 0, 0, 0) == 3
    assert arf_by_blocks(0, 1, 0, 0) == 10
    assert arf_by_blocks(0, 0, 1, 0) == 28
    assert arf_by_blocks(2, 1, 0, 0) == arf_count(
        parse_pair("a b c d e z / z c b d e a")
    )


def test_signature_examples():
    sig = signature(parse_pair("a b c z / z c b a"))
    assert sig == Signature("class", "T1", (3,), 4)
    sig = signature(parse_pair("a b c z / z b c a"))
    assert sig == Signature("class", "T1", (1, 1, 1), 2)
    sig = signature(parse_pair("a b c z / z c b a"), "extended")
    assert sig.m is None


def test_right_move_invariance():
    for n in range(2, 6):
        for p in irreducible_pairs(n):
            for m in (R0, R1):
                q = apply_move(p, m)
                assert s_map(q) == s_map(p)
                assert m_value(q) == m_value(p)
                assert p_list(q) == p_list(p)


def test_extended_invariance():
    for n in range(2, 6):
        for p in irreducible_pairs(n):
            a = arf_count(p)
            for m in (R0, R1, L0, L1):
                q = apply_move(p, m)
                assert p_list(q) == p_list(p)
                assert arf_count(q) == a


def test_s_map_inverse_law():
    for n in range(2, 6):
        for p in irreducible_pairs(n):
            s = s_map(p)
            si = s_map(inverse(p))
            assert all(si[s[b]] == b for b in s)
