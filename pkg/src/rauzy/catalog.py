r"""A catalog of named switch-move identities on block-built standard pairs,
plus the recursive corollary procedures built from them.

Each named move is a fixed pattern: source rows, target rows and a switch
list over pattern letters.  A move applies at the left end of the interior
(right context is untouched by every switch, since all switch letters stay
to its left); the result is verified against the target pattern on every
call.  Text ids look like ``A:2431-2143``.

The corollary procedures (ids ``Cor:...``) consume a chain of 2-blocks
around a fixed prefix pattern and return a pair in normalized block form
together with the switch sequence used.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Pair
from .switches import inner_switch

__all__ = [
    "NamedMove",
    "MOVE_IDS",
    "COROLLARY_IDS",
    "move_pattern",
    "apply_named_move",
    "named_move_switches",
    "cor_abU_bUa",
    "cor_abU_Uba",
    "cor_4blocks_left",
    "cor_aUb_Uba",
    "cor_abUc_cbUa",
    "cor_abcU_cUba",
    "cor_abUcV_UcVba",
]


def _rows(text):
    return tuple(text.split())


# id -> (source top, source bottom, target top, target bottom, switches);
# interior letters only, boundary a/z implied.
_MOVES = {
    "A:2431-2143": (
        "b1 b2 c1 c2", "b2 c2 c1 b1",
        "c2 b1 c1 b2", "b1 c2 b2 c1",
        "b2,c2 b1,c1",
    ),
    "A:436521-214365": (
        "b1 b2 b3 b4 b5 b6", "b4 b3 b6 b5 b2 b1",
        "b1 b4 b3 b6 b5 b2", "b4 b1 b6 b3 b2 b5",
        "b3,b6 b1,b5 b2,b3 b4,b6",
    ),
    "A:216543-432165": (
        "b1 b2 c1 c2 c3 c4", "b2 b1 c4 c3 c2 c1",
        "b1 c4 c1 b2 c3 c2", "b2 c1 c4 b1 c2 c3",
        "b2,c2 b1,c3 c3,c1 c2,c4",
    ),
    "A:43216587-21438765": (
        "b1 b2 b3 b4 c1 c2 c3 c4", "b4 b3 b2 b1 c2 c1 c4 c3",
        "b1 b4 b3 b2 c1 c4 c3 c2", "b4 b1 b2 b3 c2 c3 c4 c1",
        "b2,c1 b3,c4 b1,c3 b3,c2 b4,c4 b2,c3 b1,c1",
    ),
    "A:43218765-21436587": (
        "b1 b2 b3 b4 c1 c2 c3 c4", "b4 b3 b2 b1 c4 c3 c2 c1",
        "b1 b4 b3 b2 c1 c4 c3 c2", "b4 b1 b2 b3 c4 c1 c2 c3",
        "b3,c3 b4,c1 b2,c2 b1,c4 b3,c1 b1,c2 b4,c3",
    ),
    "A:3241-2143": (
        "b1 c1 c2 b2", "c2 c1 b2 b1",
        "c2 b2 b1 c1", "b2 c2 c1 b1",
        "b2,c1",
    ),
    "B:52431-21543": (
        "b1 b2 c1 c2 b3", "b3 b2 c2 c1 b1",
        "c2 b1 c1 b2 b3", "b1 c2 b3 b2 c1",
        "b2,c2 b1,c1",
    ),
    "B:43215876-21435876": (
        "b1 b2 b3 b4 s c1 c2 c3", "b4 b3 b2 b1 s c3 c2 c1",
        "b1 b4 b3 b2 s c3 c2 c1", "b4 b1 b2 b3 s c1 c2 c3",
        "b3,c3 c2,s b2,b4 c1,c3 b1,c2 b3,c1 b2,c2",
    ),
    "B:3217654-3215476": (
        "b1 b2 b3 c1 c2 c3 c4", "b3 b2 b1 c4 c3 c2 c1",
        "b3 b2 b1 c1 c4 c3 c2", "b1 b2 b3 c4 c1 c2 c3",
        "b1,c2 b2,c1 c1,c3 b1,b3 c2,c4 b2,c3",
    ),
    "B:4321765-2143765": (
        "b1 b2 b3 b4 c1 c2 c3", "b4 b3 b2 b1 c3 c2 c1",
        "b3 b1 c1 b4 c3 c2 b2", "b1 b3 b4 c1 b2 c2 c3",
        "b1,c3 b4,c2 b1,b2 c1,c3 b3,c1",
    ),
    "B:321654-213654": (
        "b1 b2 b3 c1 c2 c3", "b3 b2 b1 c3 c2 c1",
        "b2 c3 c1 b3 c2 b1", "c3 b2 c1 b1 c2 b3",
        "b2,c2 b3,c1 b1,c3",
    ),
    "B:3214765-moving-leftblocks": (
        "b1 b2 b3 s c1 c2 c3", "b3 b2 b1 s c3 c2 c1",
        "c3 b2 c1 s b1 c2 b3", "c1 b2 c3 s b3 c2 b1",
        "b2,s b1,c2 b3,c3 b1,c1",
    ),
    "B:35421-32154": (
        "b1 b2 b3 c1 c2", "b3 c2 c1 b2 b1",
        "b3 c2 b1 c1 b2", "b1 c2 b3 b2 c1",
        "b3,c2 b1,c1 b2,b3",
    ),
}

MOVE_IDS = tuple(sorted(_MOVES))
COROLLARY_IDS = (
    "Cor:abU-bUa",
    "Cor:abU-Uba",
    "Cor:4blocks-to-the-left",
    "Cor:aUb-Uba",
    "Cor:abUc-cbUa",
    "Cor:abcU-cUba",
    "Cor:abUcV-UcVba",
)


@dataclass(frozen=True)
class NamedMove:
    """A catalog move id with a binding from pattern letters to letters of
    the pair it acts on."""

    id: str
    binding: dict

    def __post_init__(self):
        if self.id not in _MOVES:
            raise ValueError("unknown move id %r" % self.id)
        src_top, _, _, _, _ = _MOVES[self.id]
        if set(self.binding) != set(_rows(src_top)):
            raise ValueError("binding must cover exactly the pattern letters")


def move_pattern(move_id: str):
    """(source top, source bottom, target top, target bottom, switches) of a
    named move, in pattern letters."""
    st, sb, dt, db, sw = _MOVES[move_id]
    switches = tuple(tuple(tok.split(",")) for tok in sw.split())
    return _rows(st), _rows(sb), _rows(dt), _rows(db), switches


def named_move_switches(m: NamedMove):
    """The move's switch sequence under its binding."""
    _, _, _, _, switches = move_pattern(m.id)
    return [(m.binding[b], m.binding[c]) for b, c in switches]


def apply_named_move(p: Pair, m: NamedMove) -> Pair:
    """Apply a catalog move whose bound pattern sits at the left end of the
    interior of ``p`` (anything right of the pattern is untouched)."""
    st, sb, dt, db, _ = move_pattern(m.id)
    k = len(st)
    want_top = tuple(m.binding[x] for x in st)
    want_bot = tuple(m.binding[x] for x in sb)
    if p.top[1 : 1 + k] != want_top or p.bottom[1 : 1 + k] != want_bot:
        raise ValueError("pair does not match the %s source pattern" % m.id)
    q = p
    for b, c in named_move_switches(m):
        q, _ = inner_switch(q, b, c)
    exp_top = p.top[:1] + tuple(m.binding[x] for x in dt) + p.top[1 + k :]
    exp_bot = p.bottom[:1] + tuple(m.binding[x] for x in db) + p.bottom[1 + k :]
    assert q == Pair(exp_top, exp_bot), "catalog target mismatch for %s" % m.id
    return q


def _bind(move_id: str, letters) -> NamedMove:
    st, _, _, _, _ = _MOVES[move_id]
    pattern = _rows(st)
    return NamedMove(move_id, dict(zip(pattern, letters)))


def _run(p: Pair, move_id: str, letters):
    """Replay a move's switch list under a letter binding, without pattern
    checks: the corollaries embed the moves with filler between the pattern
    letters, so only the final block-form assertions apply."""
    used = named_move_switches(_bind(move_id, letters))
    for b, c in used:
        p, _ = inner_switch(p, b, c)
    return p, used


def _is_two_blocks(p: Pair, start: int, count: int) -> bool:
    """True iff interior positions start..start+2*count-1 form consecutive
    2-blocks (1-based positions)."""
    pos1 = p.pos(1)
    for i in range(count):
        s = start + 2 * i
        x, y = p.top[s - 1], p.top[s]
        if pos1[x] != s + 1 or pos1[y] != s:
            return False
    return True


def cor_abU_bUa(p: Pair, m: int, start: int = 2):
    """(a b1 b2 u1 .. / .. b2 u2 b1 ..) with u a chain of m 2-blocks turns
    into m+1 consecutive 2-blocks; returns (pair, switches).

    ``start`` is the 1-based pair position where the region begins.
    """
    seq = []
    for step in range(m):
        L = 2 + 2 * (m - step)
        t = p.top[start - 1 : start - 1 + L]
        letters = (t[0], t[1], t[-2], t[-1])  # b1 b2 c1 c2
        p, used = _run(p, "A:2431-2143", letters)
        seq.extend(used)
    assert _is_two_blocks(p, start, m + 1)
    return p, seq


def cor_abU_Uba(p: Pair, m: int, start: int = 2):
    """(a b1 b2 u1 .. / .. u2 b2 b1 ..) with u a chain of m 2-blocks turns
    into m+1 2-blocks (m even) or a 4-block then m-1 2-blocks (m odd)."""
    seq = []
    left = m
    while left >= 2:
        L = 2 + 2 * left
        t = p.top[start - 1 : start - 1 + L]
        letters = (t[0], t[1], t[-4], t[-3], t[-2], t[-1])  # b1 b2 c1..c4
        p, used = _run(p, "A:436521-214365", letters)
        seq.extend(used)
        left -= 2
    if m % 2 == 0:
        assert _is_two_blocks(p, start, m + 1)
    else:
        pos0, pos1 = p.pos(0), p.pos(1)
        four = p.top[start - 1 : start + 3]
        assert all(pos0[b] + pos1[b] == 2 * start + 3 for b in four), "4-block expected"
        assert _is_two_blocks(p, start + 4, m - 1)
    return p, seq


def cor_4blocks_left(p: Pair):
    """In a single-chain PWOR pair of one 4-block and 2-blocks, move the
    4-block to the front of the chain; returns (pair, switches)."""
    from .switches import is_pwor

    seq = []
    while True:
        dec = is_pwor(p)
        assert dec is not None and sorted(dec.sizes(), reverse=True)[0] == 4
        idx = dec.sizes().index(4)
        if idx == 0:
            return p, seq
        assert dec.sizes()[idx - 1] == 2, "block left of the 4-block must be a 2-block"
        letters = dec.blocks[idx - 1] + dec.blocks[idx]
        start = dec.boundaries[idx - 1]
        # the move needs its pattern at the left end; reorder is not
        # available inside a chain, so shift via the identity that the
        # switch list only touches pattern letters when they lead
        p, used = _run_at(p, "A:216543-432165", letters, start)
        seq.extend(used)


def _run_at(p: Pair, move_id: str, letters, start: int):
    """Apply a named move whose bound pattern begins at interior position
    ``start`` (1-based pair position).  Valid only when replay verifies."""
    st, sb, dt, db, switches = move_pattern(move_id)
    k = len(st)
    binding = dict(zip(_rows(_MOVES[move_id][0]), letters))
    want_top = tuple(binding[x] for x in st)
    want_bot = tuple(binding[x] for x in sb)
    if (
        p.top[start - 1 : start - 1 + k] != want_top
        or p.bottom[start - 1 : start - 1 + k] != want_bot
    ):
        raise ValueError("pattern mismatch at position %d for %s" % (start, move_id))
    q = p
    used = [(binding[b], binding[c]) for b, c in switches]
    for b, c in used:
        q, _ = inner_switch(q, b, c)
    exp_top = p.top[: start - 1] + tuple(binding[x] for x in dt) + p.top[start - 1 + k :]
    exp_bot = (
        p.bottom[: start - 1] + tuple(binding[x] for x in db) + p.bottom[start - 1 + k :]
    )
    assert q == Pair(exp_top, exp_bot), "catalog target mismatch for %s" % move_id
    return q, used


def cor_aUb_Uba(p: Pair, k: int):
    """(a b1 u1 b2 .. / .. u2 b2 b1 ..) with u a chain of k 2-blocks turns
    into k+1 consecutive 2-blocks; returns (pair, switches)."""
    seq = []
    for step in range(k):
        t = p.top[1:]
        letters = (t[0], t[1], t[2], t[2 * (k - step) + 1])  # b1 c1 c2 b2
        p, used = _run(p, "A:3241-2143", letters)
        seq.extend(used)
    assert _is_two_blocks(p, 2, k + 1)
    return p, seq


def cor_abUc_cbUa(p: Pair, m: int, start: int = 2):
    """(a b1 b2 u1 b3 .. / .. b3 b2 u2 b1 ..) with u a chain of m 2-blocks
    turns into m 2-blocks then a 3-block; returns (pair, switches)."""
    seq = []
    if m > 0:
        L = 3 + 2 * m
        t = p.top[start - 1 : start - 1 + L]
        letters = (t[0], t[1], t[-3], t[-2], t[-1])  # b1 b2 c1 c2 b3
        p, used = _run(p, "B:52431-21543", letters)
        seq.extend(used)
        p, used = cor_abU_bUa(p, m - 1, start)
        seq.extend(used)
    pos0, pos1 = p.pos(0), p.pos(1)
    three_at = start + 2 * m
    three = p.top[three_at - 1 : three_at + 2]
    assert _is_two_blocks(p, start, m)
    assert all(pos0[b] + pos1[b] == 2 * three_at + 2 for b in three), "3-block expected"
    return p, seq


def cor_abcU_cUba(p: Pair, m: int):
    """(a b1 b2 b3 u1 .. / .. b3 u2 b2 b1 ..) with u a chain of m 2-blocks
    turns into a 3-block then m 2-blocks; returns (pair, switches)."""
    seq = []
    for step in range(m):
        L = 3 + 2 * (m - step)
        t = p.top[1 : 1 + L]
        letters = (t[0], t[1], t[2], t[-2], t[-1])  # b1 b2 b3 c1 c2
        p, used = _run(p, "B:35421-32154", letters)
        seq.extend(used)
    pos0, pos1 = p.pos(0), p.pos(1)
    three = p.top[1:4]
    assert all(pos0[b] + pos1[b] == 6 for b in three), "3-block expected"
    assert _is_two_blocks(p, 5, m)
    return p, seq


def _match_prefix(p: Pair, heads: int, blocks: int, tail_heads):
    """Find, in p or its inverse, an interior prefix of ``heads`` letters,
    then a chain of ``blocks`` 2-blocks (top word u, bottom its pairwise
    reversal), then the head letters again in ``tail_heads`` order (a tuple
    of indices into the head letters, negative for reversed positions).

    Returns (oriented pair, head letters, u) or None.  Switch moves commute
    with the row swap, so orientation is free during the recursion.
    """
    from .core import inverse

    for q in (p, inverse(p)):
        t, b = q.top, q.bottom
        L = heads + 2 * blocks
        if q.n < L + 2:
            continue
        hs = t[1 : 1 + heads - 1] + (t[L],)
        u1 = t[heads : L]
        u2 = tuple(x for i in range(0, len(u1), 2) for x in (u1[i + 1], u1[i]))
        if b[1 : L + 1] == u2 + tuple(hs[i] for i in tail_heads):
            return q, hs, u1
    return None


def cor_abUcV_UcVba(p: Pair, m: int, k: int):
    """(a b1 b2 u1 b3 v1 .. / .. u2 b3 v2 b2 b1 ..), u a chain of m and v a
    chain of k 2-blocks, turns into m 2-blocks, a 3-block, then k 2-blocks;
    returns (pair, switches).

    Follows the two-stage recursion: first consume v (forming the right
    2-blocks), then one switch forms the 3-block and the rest of u unwinds.
    """
    seq = []
    x, y = p.top[1], p.top[2]
    w = p.top[3 + 2 * m]
    vb = [(p.top[4 + 2 * m + 2 * i], p.top[5 + 2 * m + 2 * i]) for i in range(k)]
    for j in range(k):
        c1, c2 = vb[k - 1 - j]
        for s in [(w, c2), (x, c1), (y, w)]:
            p, _ = inner_switch(p, *s)
            seq.append(s)
        x, y, w = w, c2, x
    if m > 0:
        got = _match_prefix(p, 3, m, (2, 1, 0))
        assert got is not None, "expected the k=0 composite form"
        q, (B1, B2, B3), u1 = got
        p, _ = inner_switch(p, B3, u1[0])
        seq.append((B3, u1[0]))
        for mm in range(m - 1, 0, -1):
            got = _match_prefix(p, 2, mm, (1, 0))
            assert got is not None, "expected the two-letter chain form"
            q, (X, Y), u1 = got
            p, _ = inner_switch(p, Y, u1[0])
            seq.append((Y, u1[0]))
    pos0, pos1 = p.pos(0), p.pos(1)
    from .core import inverse

    if any(pos0[b] + pos1[b] != 2 * (2 + 2 * m) + 2 for b in p.top[1 + 2 * m : 4 + 2 * m]):
        p = inverse(p)
        pos0, pos1 = p.pos(0), p.pos(1)
    assert _is_two_blocks(p, 2, m)
    three = p.top[1 + 2 * m : 4 + 2 * m]
    assert all(pos0[b] + pos1[b] == 2 * (2 + 2 * m) + 2 for b in three), "3-block expected"
    assert _is_two_blocks(p, 5 + 2 * m, k)
    return p, seq
