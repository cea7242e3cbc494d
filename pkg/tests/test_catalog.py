r"""The named switch-move catalog and its corollary loops."""
import pytest

from rauzy.core import Pair, parse_pair, format_pair
from rauzy.switches import apply_switches, is_pwor
from rauzy.catalog import (
    MOVE_IDS,
    COROLLARY_IDS,
    NamedMove,
    move_pattern,
    apply_named_move,
    named_move_switches,
    cor_abU_bUa,
    cor_abU_Uba,
    cor_4blocks_left,
    cor_aUb_Uba,
    cor_abUc_cbUa,
    cor_abcU_cUba,
    cor_abUcV_UcVba,
)


def embed(top, bot):
    return Pair(("a*",) + tuple(top) + ("z*",), ("z*",) + tuple(bot) + ("a*",))


def test_move_a1():
    p = parse_pair("a b1 b2 c1 c2 z / z b2 c2 c1 b1 a")
    st, _, _, _, _ = move_pattern("A:2431-2143")
    m = NamedMove("A:2431-2143", dict(zip(st, st)))
    q = apply_named_move(p, m)
    assert q == parse_pair("a c2 b1 c1 b2 z / z b1 c2 b2 c1 a")


def test_every_move_replays_on_its_pattern():
    for move_id in MOVE_IDS:
        st, sb, dt, db, _ = move_pattern(move_id)
        m = NamedMove(move_id, dict(zip(st, st)))
        src = embed(st, sb)
        out = apply_named_move(src, m)
        assert out == embed(dt, db), move_id
        # the listed switches replay to the same endpoint
        assert apply_switches(src, named_move_switches(m)) == out


def test_pattern_mismatch():
    st, _, _, _, _ = move_pattern("A:2431-2143")
    m = NamedMove("A:2431-2143", dict(zip(st, st)))
    with pytest.raises(ValueError):
        apply_named_move(parse_pair("a b c z / z b c a"), m)


def two_blocks(k, tail=()):
    r"""Standard pair whose interior is k 2-blocks followed by ``tail``
    order-reversing blocks."""
    blocks = [("x%d" % i, "y%d" % i) for i in range(k)] + list(tail)
    top = ["a"]
    bot = []
    for blk in blocks:
        top.extend(blk)
        bot.extend(reversed(blk))
    return Pair(tuple(top) + ("z",), ("z",) + tuple(bot) + ("a",))


def pairrev(u):
    out = []
    for i in range(0, len(u), 2):
        out.extend((u[i + 1], u[i]))
    return tuple(out)


def cor_source(m, reversed_tail):
    u = tuple(t for i in range(m) for t in ("u%d" % (2 * i), "u%d" % (2 * i + 1)))
    top = ("a", "b1", "b2") + u + ("z",)
    if reversed_tail:
        bot = ("z",) + pairrev(u) + ("b2", "b1", "a")
    else:
        bot = ("z", "b2") + pairrev(u) + ("b1", "a")
    return Pair(top, bot)


def test_cor_base_cases():
    # m = 0 loops are the identity
    p = cor_source(0, reversed_tail=False)
    q, seq = cor_abU_bUa(p, 0)
    assert q == p and list(seq) == []


def test_cor_loops():
    for m in (1, 2, 3):
        p = cor_source(m, reversed_tail=False)
        q, seq = cor_abU_bUa(p, m)
        assert apply_switches(p, seq) == q
        dec = is_pwor(q)
        assert dec is not None and dec.sizes() == (2,) * (m + 1)
    for m in (2, 3):
        p = cor_source(m, reversed_tail=True)
        q, seq = cor_abU_Uba(p, m)
        assert apply_switches(p, seq) == q
        dec = is_pwor(q)
        want = (2,) * (m + 1) if m % 2 == 0 else (4,) + (2,) * (m - 1)
        assert dec is not None and dec.sizes() == want
    p = two_blocks(1, tail=[("p", "q", "r", "s")])
    q, seq = cor_4blocks_left(p)
    assert apply_switches(p, seq) == q
    dec = is_pwor(q)
    assert dec is not None and dec.sizes() == (4, 2)
