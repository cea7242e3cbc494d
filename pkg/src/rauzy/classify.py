r"""Type detection, block-size reduction, normalization to a typed pair,
canonical forms, and the structural predicates built on switch moves.

A piece-wise order reversing pair has a Type (T1..T5) when its chain
decomposition matches one of five shapes.  ``normalize_type`` connects any
irreducible pair to a typed one by verified switch moves; the bundle
(Type, P, M) then decides non-labeled class equality, and (Type, P) decides
extended class equality.  ``canonical_form`` rebuilds the unique typed
shape directly from that bundle.

Every multi-switch identity used here is replayed against an explicitly
computed endpoint, so a wrong switch list fails loudly instead of silently
corrupting the class.
"""
from __future__ import annotations

from .core import Pair, canonical_alphabet, format_pair, inverse, is_irreducible
from .invariants import m_value, p_list
from .moves import is_standard
from .switches import chains, inner_switch, is_pwor, reorder_chains, to_pwor
from .catalog import _is_two_blocks, move_pattern

__all__ = [
    "type_of",
    "reduce_blocks",
    "normalize_type",
    "canonical_form",
    "canonical_form_extended",
    "same_class",
    "is_sigma",
    "is_order_reversing",
    "is_degenerate_star",
    "is_good",
    "find_good_or_degenerate",
]

TYPE_TAGS = ("T1", "T2", "T3", "T4", "T5")


def type_of(p: Pair):
    """The Type tag of a PWOR pair, or None if no clause matches.

    T2..T5 additionally require more than one block of size >= 2, which
    keeps the five clauses disjoint.
    """
    dec = is_pwor(p)
    if dec is None:
        raise ValueError("Type is defined for piece-wise order reversing pairs")
    ch = chains(p)
    nonempty = [c for c in ch.chains if c]
    if len(nonempty) <= 1 and all(len(c) == 1 for c in nonempty):
        return "T1"
    if sum(len(c) for c in nonempty) < 2:
        return None
    if all(len(b) == 2 for c in nonempty for b in c):
        return "T2"
    sizes = [[len(b) for b in c] for c in nonempty]
    if all(set(s) <= {2, 3} and s.count(3) <= 1 for s in sizes) and any(
        3 in s for s in sizes
    ):
        return "T3"
    odd = [s for s in sizes if set(s) != {2}]
    if len(odd) == 1:
        s = odd[0]
        if s[0] == 4 and all(x == 2 for x in s[1:]):
            return "T4"
        if s == [5] and all(x == [2] for x in sizes if x is not s):
            return "T5"
    return None


# ---------------------------------------------------------------------------
# replay helpers


def _apply_seq(p: Pair, seq) -> Pair:
    for b, c in seq:
        p, _ = inner_switch(p, b, c)
    return p


def _restore_candidates(p: Pair, start: int):
    """Candidate context-restoring switches for a region beginning at pair
    position ``start``: a composite of switches can drag the material before
    the region into it, and one switch against the last context letter puts
    it back."""
    if start <= 2:
        return []
    sep = p.top[start - 2]
    return [(y, sep) for y in p.top[start - 1 : -1]]


def _forced_switches(p: Pair, switches, target: Pair, restore=()):
    """Replay ``switches`` forward or reversed (switches are involutions, so
    a list printed in the opposite convention just reverses) and return
    (target, used list); one extra switch from ``restore`` may be appended.
    Raises if no replay reaches ``target``."""
    last = None
    for seq in (list(switches), list(reversed(switches))):
        try:
            q = _apply_seq(p, seq)
        except ValueError as e:
            last = e
            continue
        if q == target:
            return target, seq
        for extra in restore:
            try:
                r, _ = inner_switch(q, *extra)
            except ValueError:
                continue
            if r == target:
                return target, seq + [extra]
    raise AssertionError(
        "switch list does not reach its target from %s (%s)" % (format_pair(p), last)
    )


def _move_switches(move_id: str, letters):
    """A catalog move's switch list bound to ``letters`` (pattern order)."""
    st, _, _, _, switches = move_pattern(move_id)
    binding = dict(zip(st, letters))
    return [(binding[b], binding[c]) for b, c in switches]


def _splice(p: Pair, start: int, top_piece, bottom_piece) -> Pair:
    """The pair with positions start..start+len-1 replaced in both rows."""
    i = start - 1
    assert len(top_piece) == len(bottom_piece)
    return Pair(
        p.top[:i] + tuple(top_piece) + p.top[i + len(top_piece) :],
        p.bottom[:i] + tuple(bottom_piece) + p.bottom[i + len(bottom_piece) :],
    )


def _or_rows(blocks):
    """Top and bottom words of consecutive order-reversing blocks."""
    top = tuple(b for blk in blocks for b in blk)
    bot = tuple(b for blk in blocks for b in reversed(blk))
    return top, bot


def _block_at(dec, i):
    """(letters, start position) of block i of a decomposition."""
    return dec.blocks[i], dec.boundaries[i]


def _transposed_cor(cor, p: Pair, *args):
    """Run a corollary on the transpose and replay its switches on ``p``
    itself; switch moves commute with swapping the rows."""
    q, seq = cor(inverse(p), *args)
    out = _apply_seq(p, seq)
    assert out == inverse(q), "transpose replay mismatch"
    return out, seq


def _pairrev(u):
    """Reverse a word of 2-blocks within each block: (x1 y1 x2 y2 ..) ->
    (y1 x1 y2 x2 ..)."""
    return tuple(x for i in range(0, len(u), 2) for x in (u[i + 1], u[i]))


def _cor_abU_bUa_at(p: Pair, m: int, start: int):
    """Region (b1 b2 U / U' b2 b1) at ``start`` with U a run of m 2-blocks
    becomes m+1 2-blocks in place.  Each peel step has an explicit spliced
    target, so material left of the region stays put."""
    seq = []
    for left in range(m, 0, -1):
        t = p.top[start - 1 : start + 1 + 2 * left]
        b1, b2 = t[0], t[1]
        c1, c2 = t[-2], t[-1]
        urest = t[2:-2]
        top = (c2, b1) + urest + (c1, b2)
        bot = (b1,) + _pairrev(urest) + (c2, b2, c1)
        p, used = _forced_switches(
            p,
            _move_switches("A:2431-2143", (b1, b2, c1, c2)),
            _splice(p, start, top, bot),
            _restore_candidates(p, start),
        )
        seq.extend(used)
    assert _is_two_blocks(p, start, m + 1)
    return p, seq


def _cor_abU_Uba_at(p: Pair, m: int, start: int):
    """Region (b1 b2 U / rev(U) b2 b1) at ``start`` with U a run of m
    2-blocks becomes m+1 2-blocks (m even) or a 4-block then m-1 2-blocks
    (m odd), in place."""
    seq = []
    left = m
    while left >= 2:
        t = p.top[start - 1 : start + 1 + 2 * left]
        b1, b2 = t[0], t[1]
        c1, c2, c3, c4 = t[-4], t[-3], t[-2], t[-1]
        urest = t[2:-4]
        top = (b1, c2) + urest + (c1, c4, c3, b2)
        bot = _pairrev(urest) + (c2, b1) + (c4, c1, b2, c3)
        p, used = _forced_switches(
            p,
            _move_switches("A:436521-214365", (b1, b2, c1, c2, c3, c4)),
            _splice(p, start, top, bot),
            _restore_candidates(p, start),
        )
        seq.extend(used)
        left -= 2
    pos0, pos1 = p.pos(0), p.pos(1)
    if m % 2 == 0:
        assert _is_two_blocks(p, start, m + 1)
    else:
        quad = p.top[start - 1 : start + 3]
        assert all(pos0[x] + pos1[x] == 2 * start + 3 for x in quad)
        assert _is_two_blocks(p, start + 4, m - 1)
    return p, seq


def _cor_abUc_cbUa_at(p: Pair, m: int, start: int):
    """Region (b1 b2 U c / c b2 rev(U) b1) at ``start`` with U a run of m
    2-blocks becomes m 2-blocks then a 3-block, in place."""
    seq = []
    if m > 0:
        t = p.top[start - 1 : start + 2 + 2 * m]
        b1, b2, b3 = t[0], t[1], t[-1]
        c1, c2 = t[-3], t[-2]
        urest = t[2:-3]
        top = (c2, b1) + urest + (c1, b2, b3)
        bot = (b1,) + _pairrev(urest) + (c2, b3, b2, c1)
        p, used = _forced_switches(
            p,
            _move_switches("B:52431-21543", (b1, b2, c1, c2, b3)),
            _splice(p, start, top, bot),
            _restore_candidates(p, start),
        )
        seq.extend(used)
        p, used = _cor_abU_bUa_at(p, m - 1, start)
        seq.extend(used)
    assert _is_two_blocks(p, start, m)
    pos0, pos1 = p.pos(0), p.pos(1)
    tstart = start + 2 * m
    assert all(
        pos0[x] + pos1[x] == 2 * tstart + 2 for x in p.top[tstart - 1 : tstart + 2]
    ), "3-block expected after the unwind"
    return p, seq


# ---------------------------------------------------------------------------
# block-size reduction


def _reduce_case1(p, dec, i, j):
    """An m-block (m >= 8, block i) beside a k-block (block j): the m-block
    becomes four 2-blocks around an (m-8)-block."""
    b, start = _block_at(dec, i)
    c, _ = _block_at(dec, j)
    b1, b2, b3, b4 = b[:4]
    b5, b6, b7, b8 = b[-4:]
    v = b[4:-4]
    if j > i:
        switches = [
            (b3, c[-1]), (b7, c[0]), (b2, b5), (b2, b8), (b4, b6),
            (b1, b4), (b7, c[0]), (b5, b8), (b3, c[-1]),
        ]
    else:
        switches = [
            (c[-1], b2), (c[0], b5), (b1, b4), (b1, b6), (c[0], b3),
            (c[-1], b5), (b2, b8), (b4, b7), (b1, b4),
        ]
    # the middle (m-8)-block keeps its letters in place
    top = (b1, b8, b3, b6) + v + (b5, b4, b7, b2)
    bot = (b8, b1, b6, b3) + tuple(reversed(v)) + (b4, b5, b2, b7)
    return _forced_switches(p, switches, _splice(p, start, top, bot))


def _reduce_case2a(p, dec, i, j, s):
    """A 7-block (block i, leftmost of size >= 2) with a k-block (block j)
    to its right; s is the 1-block letter directly before it, or None."""
    b, start = _block_at(dec, i)
    c, _ = _block_at(dec, j)
    b1, b2, b3, b4, b5, b6, b7 = b
    switches = [
        (b5, c[0]), (b1, c[-1]), (b4, b6), (b3, c[0]),
        (b5, c[0]), (b1, c[-1]), (b2, b7),
    ]
    if s is not None:
        switches.append((s, b3))
    top, bot = _or_rows([(b3, b1), (b5, b4, b7), (b6, b2)])
    return _forced_switches(p, switches, _splice(p, start, top, bot))


def _reduce_case3(p, dec, i, j):
    """A 6-block (block i) beside a k-block (block j): the 6-block becomes
    a 2-block and a 4-block."""
    b, start = _block_at(dec, i)
    c, _ = _block_at(dec, j)
    b1, b2, b3, b4, b5, b6 = b
    if j > i:
        switches = [
            (b1, c[-1]), (b4, c[0]), (b1, b3), (b1, b5),
            (b2, b6), (b4, c[0]), (b3, c[-1]),
        ]
    else:
        switches = [
            (b3, c[0]), (b1, c[-1]), (b1, b5), (b2, b4),
            (b4, b6), (b5, c[0]), (b3, c[-1]),
        ]
    top, bot = _or_rows([(b1, b6), (b3, b2, b5, b4)])
    return _forced_switches(p, switches, _splice(p, start, top, bot))


def _reduce_case2b(p, dec, i, j, s):
    """A 7-block (block i) with the leftmost size >= 2 block (block j, a
    k-block) on its left; s is the 1-block letter before the k-block, or
    None.  The pair leaves PWOR form; the letters outside the scrambled
    region are restricted away, the small pair is renormalized, and its
    switches replay on the full pair."""
    b, bstart = _block_at(dec, i)
    c, cstart = _block_at(dec, j)
    b1, b2, b3, b4, b5, b6, b7 = b
    k = len(c)
    switches = [
        (c[0], b5), (c[-1], b1), (b2, b7), (b3, b5), (b6, c[-1]), (b3, b4),
    ]
    if s is not None:
        switches.append((s, b4))
    # expected: .. s [b5 b3] [b7 v b1] [c2..c_{k-1}] [ck b4 c1] [b6 b2] w ..
    between = p.top[cstart + k - 1 : bstart - 1]  # the words between the blocks
    between_b = p.bottom[cstart + k - 1 : bstart - 1]
    top = (b5, b3) + (b7,) + between + (b1,) + c[1:-1] + (c[-1], b4, c[0]) + (b6, b2)
    bot = (
        (b3, b5)
        + (b1,)
        + between_b
        + (b7,)
        + tuple(reversed(c[1:-1]))
        + (c[0], b4, c[-1])
        + (b6, b2)[::-1]
    )
    p2, used = _forced_switches(p, switches, _splice(p, cstart, top, bot))
    # restrict away the scrambled letters and renormalize the small pair
    from .surgery import restrict

    w1 = set(p.top[bstart + 6 : -1])  # letters right of the 7-block, old top row
    drop = {b2, b4, b6} | set(c) | w1
    sub = frozenset(p2.alphabet - drop)
    small = restrict(p2, sub)
    small2, seq2 = to_pwor(small)
    small3, seq3 = _reduce_big_blocks(small2)
    for sw in list(seq2) + list(seq3):
        p2, _ = inner_switch(p2, *sw)
    assert restrict(p2, sub) == small3, "restricted replay drifted"
    if is_pwor(p2) is None:
        p3, seq4 = to_pwor(p2)
        return p3, used + list(seq2) + list(seq3) + list(seq4)
    return p2, used + list(seq2) + list(seq3)


def _reduce_big_blocks(p: Pair):
    """Shrink every block of size >= 6 (rightmost first); the result is
    PWOR in the same labeled class with all blocks of size <= 5, or T1."""
    seq = []
    guard = 0
    while True:
        guard += 1
        assert guard <= 4 * p.n + 4, "no progress shrinking blocks"
        dec = is_pwor(p)
        assert dec is not None
        sizes = dec.sizes()
        if type_of(p) == "T1":
            return p, seq
        big = [i for i, s in enumerate(sizes) if s >= 8]
        if big:
            i = big[-1]
            others = [j for j, s in enumerate(sizes) if s >= 2 and j != i]
            right = [j for j in others if j > i]
            j = right[0] if right else others[-1]
            p, used = _reduce_case1(p, dec, i, j)
            seq.extend(used)
            continue
        big = [i for i, s in enumerate(sizes) if s == 7]
        if big:
            i = big[-1]
            left = [j for j in range(i) if sizes[j] >= 2]
            if not left:
                right = [j for j in range(i + 1, len(sizes)) if sizes[j] >= 2]
                assert right, "a second block of size >= 2 must exist"
                s = dec.blocks[i - 1][0] if i > 0 else None
                p, used = _reduce_case2a(p, dec, i, right[0], s)
            else:
                j = left[0]
                s = dec.blocks[j - 1][0] if j > 0 else None
                p, used = _reduce_case2b(p, dec, i, j, s)
            seq.extend(used)
            continue
        big = [i for i, s in enumerate(sizes) if s == 6]
        if not big:
            return p, seq
        i = big[-1]
        others = [j for j, s in enumerate(sizes) if s >= 2 and j != i]
        right = [j for j in others if j > i]
        j = right[0] if right else others[-1]
        p, used = _reduce_case3(p, dec, i, j)
        seq.extend(used)


def _pair_large_blocks(p: Pair):
    """While two blocks of size 4 or 5 exist, collapse a pair of them into
    2-blocks (plus inert middles) with the double-4-block identity."""
    seq = []
    while True:
        dec = is_pwor(p)
        assert dec is not None
        big = [i for i, s in enumerate(dec.sizes()) if s in (4, 5)]
        if len(big) <= 1:
            return p, seq
        i, j = big[0], big[1]
        b, bstart = _block_at(dec, i)
        c, cstart = _block_at(dec, j)
        bq = b[:2] + b[-2:]
        cq = c[:2] + c[-2:]
        switches = _move_switches("A:43218765-21436587", bq + cq)
        newb = _or_rows([(b[0], b[-1])] + [(x,) for x in b[2:-2]] + [(b[-2], b[1])])
        newc = _or_rows([(c[0], c[-1])] + [(x,) for x in c[2:-2]] + [(c[-2], c[1])])
        target = _splice(p, bstart, *newb)
        target = _splice(target, cstart, *newc)
        p, used = _forced_switches(
            p, switches, target, _restore_candidates(p, min(bstart, cstart))
        )
        seq.extend(used)


def reduce_blocks(p: Pair):
    """A PWOR pair in the labeled class of PWOR ``p`` that is either T1 or
    has all blocks of size <= 5 with at most one of size 4 or 5; returns
    (pair, switch sequence)."""
    if is_pwor(p) is None:
        raise ValueError("reduce_blocks expects a piece-wise order reversing pair")
    p, seq = _reduce_big_blocks(p)
    if type_of(p) == "T1":
        return p, seq
    p, more = _pair_large_blocks(p)
    return p, seq + more


# ---------------------------------------------------------------------------
# the five-case normalization


def _chain_block_indices(dec):
    """Indices of dec.blocks grouped into chains (1-blocks separate)."""
    out = [[]]
    for i, b in enumerate(dec.blocks):
        if len(b) == 1:
            out.append([])
        else:
            out[-1].append(i)
    return out


def _move_4block_left(p, dec, i):
    """Swap a 2-block (block i-1) with the 4-block right of it (block i)."""
    b, start = _block_at(dec, i - 1)
    c, _ = _block_at(dec, i)
    letters = b + c
    switches = _move_switches("A:216543-432165", letters)
    top, bot = _or_rows([(b[0], c[3], c[0], b[1]), (c[2], c[1])])
    return _forced_switches(
        p, switches, _splice(p, start, top, bot), _restore_candidates(p, start)
    )


def _move_4block_right(p, dec, i):
    """Swap a 4-block (block i) with the 2-block right of it (block i+1)."""
    c, start = _block_at(dec, i)
    d, _ = _block_at(dec, i + 1)
    # undo the left move: bind so that the current pair is its target form
    letters = (c[0], c[3], c[2], d[1], d[0], c[1])  # b1 b2 c1..c4 of the source
    switches = _move_switches("A:216543-432165", letters)
    top, bot = _or_rows([(c[0], c[3]), (c[2], d[1], d[0], c[1])])
    return _forced_switches(
        p, switches, _splice(p, start, top, bot), _restore_candidates(p, start)
    )


def _split_5block_right(p, dec, i):
    """[5-block][2-block] -> [2-block][1-block][4-block] in place."""
    x, start = _block_at(dec, i)
    y, _ = _block_at(dec, i + 1)
    letters = (x[0], x[4], x[3], y[1], y[0], x[1])  # b1 b2 c1..c4
    switches = _move_switches("A:216543-432165", letters)
    top, bot = _or_rows([(x[0], x[4]), (x[2],), (x[3], y[1], y[0], x[1])])
    return _forced_switches(
        p, switches, _splice(p, start, top, bot), _restore_candidates(p, start)
    )


def _split_5block_left(p, dec, i):
    """[2-block][5-block] -> [4-block][1-block][2-block] in place."""
    y, start = _block_at(dec, i - 1)
    x, _ = _block_at(dec, i)
    letters = (y[0], y[1], x[0], x[1], x[3], x[4])  # b1 b2 c1..c4
    switches = _move_switches("A:216543-432165", letters)
    top, bot = _or_rows([(y[0], x[4], x[0], y[1]), (x[2],), (x[3], x[1])])
    return _forced_switches(
        p, switches, _splice(p, start, top, bot), _restore_candidates(p, start)
    )


def _swap_5block_with_2x2(p, dec, i, j):
    """A 5-block (block i) and two adjacent 2-blocks (blocks j, j+1) in
    another chain trade places: the 5-block becomes [2][1][2] and the pair
    of 2-blocks becomes a 4-block.  Works for j on either side of i."""
    x, xstart = _block_at(dec, i)
    y, ystart = _block_at(dec, j)
    y2, _ = _block_at(dec, j + 1)
    xq = x[:2] + x[-2:]
    if j > i:
        letters = xq + (y[0], y[1], y2[0], y2[1])
    else:
        letters = (y[0], y2[1], y2[0], y[1], xq[0], xq[3], xq[2], xq[1])
    switches = _move_switches("A:43216587-21438765", letters)
    newx = _or_rows(
        [(xq[0], xq[3])] + [(m,) for m in x[2:-2]] + [(xq[2], xq[1])]
    )
    newy = _or_rows([(y[0], y2[1], y2[0], y[1])])
    target = _splice(p, xstart, *newx)
    target = _splice(target, ystart, *newy)
    return _forced_switches(
        p, switches, target, _restore_candidates(p, min(xstart, ystart))
    )


def _case_1b(p):
    """No 3-blocks, one 4-block: walk it to the front of its chain."""
    seq = []
    while True:
        dec = is_pwor(p)
        idx = dec.sizes().index(4)
        chain = next(c for c in _chain_block_indices(dec) if idx in c)
        if chain[0] == idx:
            return p, seq
        p, used = _move_4block_left(p, dec, idx)
        seq.extend(used)


def _case_1c(p, dec):
    """No 3-blocks, a 5-block: convert it into a 4-block scenario."""
    idx = dec.sizes().index(5)
    chain = next(c for c in _chain_block_indices(dec) if idx in c)
    at = chain.index(idx)
    if at + 1 < len(chain):
        return _split_5block_right(p, dec, idx)
    if at > 0:
        return _split_5block_left(p, dec, idx)
    for c in _chain_block_indices(dec):
        for a, b in zip(c, c[1:]):
            if dec.sizes()[a] == 2 and dec.sizes()[b] == 2:
                return _swap_5block_with_2x2(p, dec, idx, a)
    raise AssertionError("no 2-blocks available beside a lone 5-block")


def _kblock_chain(dec, ch_idx):
    """(block index of the 4/5-block, its chain) or (None, None)."""
    for chain in ch_idx:
        for i in chain:
            if dec.sizes()[i] in (4, 5):
                return i, chain
    return None, None


def _case_2b_main(p, dec, three_idx, k_idx):
    """A 3-block (block three_idx) whose chain holds only 2-blocks before
    it, with the 4/5-block (block k_idx) strictly to its right: the big
    move splits the k-block into 2-blocks and rebuilds the 3-chain."""
    seq = []
    ch_idx = _chain_block_indices(dec)
    chain = next(c for c in ch_idx if three_idx in c)
    v_blocks = [dec.blocks[i] for i in chain if i < three_idx]
    m = len(v_blocks)
    b, _ = _block_at(dec, three_idx)
    c, cstart = _block_at(dec, k_idx)
    fstart = dec.boundaries[chain[0]]
    cq = c[:2] + c[-2:]
    switches = _move_switches("B:3217654-3215476", b + cq)
    v1 = tuple(x for blk in v_blocks for x in blk)
    v2 = tuple(x for blk in v_blocks for x in (blk[1], blk[0]))
    top = (b[2], b[1]) + v1 + (b[0],)
    bot = (b[0], b[1]) + v2 + (b[2],)
    ctop, cbot = _or_rows(
        [(c[0], c[-1])] + [(x,) for x in c[2:-2]] + [(c[-2], c[1])]
    )
    target = _splice(p, fstart, top, bot)
    target = _splice(target, cstart, ctop, cbot)
    p, used = _forced_switches(p, switches, target, _restore_candidates(p, fstart))
    seq.extend(used)
    # peel one 2-block to the 3-block's right, then unwind the rest
    if m:
        d1, d2 = v1[-2], v1[-1]
        u, urev = v1[:-2], v2[:-2]
        ptop = (b[0],) + u + (d1, b[2], b[1], d2)
        pbot = (d1, b[0]) + urev + (d2, b[1], b[2])
        target = _splice(p, fstart, ptop, pbot)
        p, used = _forced_switches(
            p, [(b[1], d1), (b[0], d2)], target, _restore_candidates(p, fstart)
        )
        seq.extend(used)
        p, used = _transposed_cor(_cor_abU_bUa_at, p, m - 1, fstart)
        seq.extend(used)
    assert _is_two_blocks(p, fstart, m)
    pos0, pos1 = p.pos(0), p.pos(1)
    tstart = fstart + 2 * m
    assert all(
        pos0[x] + pos1[x] == 2 * tstart + 2 for x in p.top[tstart - 1 : tstart + 2]
    ), "3-block expected after the unwind"
    return p, seq


def _case_2b_adjacent(p, dec, k_idx, three_idx):
    """The 4/5-block immediately left of a 3-block, only 2-blocks before it
    in the chain."""
    ch_idx = _chain_block_indices(dec)
    chain = next(c for c in ch_idx if k_idx in c)
    u_blocks = [dec.blocks[i] for i in chain if i < k_idx]
    m = len(u_blocks)
    fstart = dec.boundaries[chain[0]]
    b, _ = _block_at(dec, k_idx)
    c, _ = _block_at(dec, three_idx)
    u1 = tuple(x for blk in u_blocks for x in blk)
    u2 = tuple(x for blk in u_blocks for x in (blk[1], blk[0]))
    seq = []
    if len(b) == 4:
        switches = _move_switches("B:4321765-2143765", b + c)
        top = (b[2],) + u1 + (b[0],) + (c[0], b[3]) + (c[2], c[1], b[1])
        bot = (b[0], b[2]) + u2 + (b[3], c[0]) + (b[1], c[1], c[2])
        p, used = _forced_switches(
            p, switches, _splice(p, fstart, top, bot), _restore_candidates(p, fstart)
        )
        seq.extend(used)
        p, used = _transposed_cor(_cor_abU_bUa_at, p, m, fstart)
        seq.extend(used)
        assert _is_two_blocks(p, fstart, m + 1)
    else:
        b1, b2, b3, b4, b5 = b
        switches = [(b1, c[2]), (b4, c[1]), (b1, b2), (b3, b5), (c[0], c[2])]
        kstart = dec.boundaries[k_idx]
        top, bot = _or_rows([(b1, b5), (b3,), (c[0], b4), (c[2], c[1], b2)])
        p, used = _forced_switches(
            p, switches, _splice(p, kstart, top, bot), _restore_candidates(p, kstart)
        )
        seq.extend(used)
    return p, seq


def _case_2b_across(p, dec, k_idx, sep, lead):
    """The 4/5-block ends the chain before a separator ``sep``; the next
    chain starts with ``lead`` leading 2-blocks then a 3-block (lead <= 1)."""
    b, bstart = _block_at(dec, k_idx)
    bq = b[:2] + b[-2:]
    mid = b[2:-2]
    if lead == 0:
        c, _ = _block_at(dec, k_idx + 2)
        switches = _move_switches("B:43215876-21435876", bq + (sep,) + c)
        top, bot = _or_rows(
            [(b[0], b[-1])] + [(x,) for x in mid] + [(b[-2], b[1]), (sep,), tuple(reversed(c))]
        )
    else:
        c, _ = _block_at(dec, k_idx + 2)
        d, _ = _block_at(dec, k_idx + 3)
        switches = [
            (bq[2], c[1]), (sep, d[2]), (c[0], d[0]), (bq[1], bq[3]),
            (bq[3], d[1]), (c[0], d[2]), (bq[0], bq[2]), (sep, c[1]),
        ]
        top, bot = _or_rows(
            [(b[0], b[-1])]
            + [(x,) for x in mid]
            + [(b[-2], b[1]), (sep,), (d[0], c[0]), (d[2], d[1], c[1])]
        )
    return _forced_switches(
        p, switches, _splice(p, bstart, top, bot), _restore_candidates(p, bstart)
    )


def _case_2b(p, dec):
    """Remove the single 4/5-block from a pair that also has 3-blocks."""
    seq = []
    guard = 0
    while True:
        guard += 1
        assert guard <= 2 * p.n + 8, "no progress removing the large block"
        dec = is_pwor(p)
        sizes = dec.sizes()
        if not any(s in (4, 5) for s in sizes):
            return p, seq
        ch_idx = _chain_block_indices(dec)
        k_idx, k_chain = _kblock_chain(dec, ch_idx)
        # a 3-block with a clean left and the large block to its right
        for chain in ch_idx:
            three = [i for i in chain if sizes[i] == 3]
            if three and all(sizes[i] == 2 for i in chain if i < three[0]):
                if k_idx > three[0]:
                    p, used = _case_2b_main(p, dec, three[0], k_idx)
                    seq.extend(used)
                    break
        else:
            at = k_chain.index(k_idx)
            nxt = k_chain[at + 1] if at + 1 < len(k_chain) else None
            if nxt is not None and sizes[nxt] == 3:
                p, used = _case_2b_adjacent(p, dec, k_idx, nxt)
                seq.extend(used)
                continue
            movable = [
                ci
                for ci, chain in enumerate(ch_idx[:-1])
                if any(sizes[i] == 3 for i in chain) and k_idx not in chain
            ]
            k_ci = ch_idx.index(k_chain)
            if movable and k_ci != len(ch_idx) - 1:
                order = [movable[0] + 1] + [
                    i for i in range(1, len(ch_idx)) if i != movable[0] + 1
                ]
                p, used = reorder_chains(p, order)
                seq.extend(used)
                continue
            if nxt is not None and sizes[nxt] == 2:
                if sizes[k_idx] == 4:
                    p, used = _move_4block_right(p, dec, k_idx)
                else:
                    p, used = _split_5block_right(p, dec, k_idx)
                seq.extend(used)
                continue
            # the large block ends its chain; line it up before the last one
            if k_ci != len(ch_idx) - 2:
                order = [i for i in range(1, len(ch_idx)) if i != k_ci + 1] + [k_ci + 1]
                p, used = reorder_chains(p, order)
                seq.extend(used)
                continue
            last = ch_idx[-1]
            lead = 0
            while lead < len(last) and sizes[last[lead]] == 2:
                lead += 1
            assert lead < len(last) and sizes[last[lead]] == 3
            sep = dec.blocks[k_idx + 1][0]
            if lead <= 1:
                p, used = _case_2b_across(p, dec, k_idx, sep, lead)
            elif sizes[k_idx] == 5:
                p, used = _swap_5block_with_2x2(p, dec, k_idx, last[0])
            else:
                # trade the 4-block with the two leading 2-blocks across
                b, bstart = _block_at(dec, k_idx)
                y, ystart = _block_at(dec, last[0])
                y2, _ = _block_at(dec, last[1])
                switches = _move_switches(
                    "A:43216587-21438765", b + y + y2
                )
                newb = _or_rows([(b[0], b[3]), (b[2], b[1])])
                newy = _or_rows([(y[0], y2[1], y2[0], y[1])])
                target = _splice(p, bstart, *newb)
                target = _splice(target, ystart, *newy)
                p, used = _forced_switches(
                    p, switches, target, _restore_candidates(p, min(bstart, ystart))
                )
            seq.extend(used)


def _case_2c(p, dec, chain):
    """Split the two leftmost 3-blocks of a chain holding several."""
    sizes = dec.sizes()
    threes = [i for i in chain if sizes[i] == 3]
    i, j = threes[0], threes[1]
    u_blocks = [dec.blocks[x] for x in chain if x < i]
    v_blocks = [dec.blocks[x] for x in chain if i < x < j]
    mu, mv = len(u_blocks), len(v_blocks)
    fstart = dec.boundaries[chain[0]]
    b, _ = _block_at(dec, i)
    c, _ = _block_at(dec, j)
    u1 = tuple(x for blk in u_blocks for x in blk)
    u2 = tuple(x for blk in u_blocks for x in (blk[1], blk[0]))
    v1 = tuple(x for blk in v_blocks for x in blk)
    v2 = tuple(x for blk in v_blocks for x in (blk[1], blk[0]))
    switches = _move_switches("B:321654-213654", b + c)
    top = (b[1], c[2]) + v1 + (c[0],) + (b[2], c[1]) + u1 + (b[0],)
    bot = v2 + (c[2], b[1]) + (c[0],) + (b[0], c[1]) + u2 + (b[2],)
    p, used = _forced_switches(
        p, switches, _splice(p, fstart, top, bot), _restore_candidates(p, fstart)
    )
    seq = list(used)
    p, used = _cor_abU_Uba_at(p, mv, fstart)
    seq.extend(used)
    rstart = fstart + 2 * mv + 3
    p, used = _cor_abUc_cbUa_at(p, mu, rstart)
    seq.extend(used)
    return p, seq


def normalize_type(p: Pair):
    """Connect irreducible ``p`` to a typed pair: returns
    (pair, type tag, switch sequence).  The switches act on the standard
    pair reached from ``p`` by Rauzy moves (to_standard)."""
    if not is_irreducible(p):
        raise ValueError("normalization is defined on irreducible pairs")
    q, seq = to_pwor(p)
    q, used = reduce_blocks(q)
    seq = list(seq) + list(used)
    guard = 0
    while True:
        guard += 1
        assert guard <= 4 * q.n + 8, "normalization stalled on %s" % format_pair(q)
        tag = type_of(q)
        if tag is not None:
            return q, tag, seq
        dec = is_pwor(q)
        sizes = dec.sizes()
        if 3 not in sizes:
            if 4 in sizes:
                q, used = _case_1b(q)
            else:
                q, used = _case_1c(q, dec)
            seq.extend(used)
            continue
        if any(s in (4, 5) for s in sizes):
            q, used = _case_2b(q, dec)
            seq.extend(used)
            continue
        chain = next(
            c
            for c in _chain_block_indices(dec)
            if sum(1 for i in c if sizes[i] == 3) >= 2
        )
        q, used = _case_2c(q, dec, chain)
        seq.extend(used)
        # the split may leave 4-blocks; pair them off, an odd one goes
        # back through the large-block case
        q, used = _pair_large_blocks(q)
        seq.extend(used)


# ---------------------------------------------------------------------------
# canonical forms


def _build(tag, chains_spec, n):
    """A pair over the canonical alphabet from chain block-size lists."""
    letters = list(canonical_alphabet(n))
    a, z = letters[0], letters[-1]
    pool = iter(letters[1:-1])
    blocks = []
    first = True
    for chain in chains_spec:
        if not first:
            blocks.append((next(pool),))
        first = False
        for size in chain:
            blocks.append(tuple(next(pool) for _ in range(size)))
    top, bot = _or_rows(blocks)
    q = Pair((a,) + top + (z,), (z,) + bot + (a,))
    return q


def _canonical_from(tag, pvals, m, n):
    pvals = sorted(pvals, reverse=True)
    if tag == "T1":
        # the interior is one k-block (k >= 2) among 1-blocks, or 1-blocks
        # only; P and M pin down k and whether the block touches z:
        #   k even: P = (k+1, 1..), M = 2 or k+2
        #   k odd:  P = ((k+1)/2, (k+1)/2, 1..), M = 2 or (k+3)/2
        ones = pvals.count(1)
        if pvals[0] == 1:
            sizes = [1] * (n - 2)
        else:
            if len(pvals) > 1 and pvals[1] == pvals[0]:
                k = 2 * pvals[0] - 1
            else:
                k = pvals[0] - 1
            sizes = [k] + [1] * ones if m == 2 else [1] * ones + [k]
        # T1 chains are a single block; 1-blocks here are separators, so
        # build the row directly
        letters = list(canonical_alphabet(n))
        a, z = letters[0], letters[-1]
        pool = iter(letters[1:-1])
        blocks = [tuple(next(pool) for _ in range(size)) for size in sizes]
        top, bot = _or_rows(blocks)
        return Pair((a,) + top + (z,), (z,) + bot + (a,))
    if tag == "T2":
        vals = list(pvals)
        vals.remove(m - 1)
        spec = [[2] * ((v - 1) // 2) for v in vals] + [[2] * ((m - 2) // 2)]
        return _build(tag, spec, n)
    if tag == "T3":
        evens = sorted((v for v in pvals if v % 2 == 0), reverse=True)
        odds = sorted((v for v in pvals if v % 2 == 1), reverse=True)
        if m % 2 == 1:
            evens.remove(m - 1)
            halves = [(v - 2) // 2 for v in evens]
            pairs = []
            for i in range(0, len(halves) - 1, 2):
                pairs.append((halves[i], halves[i + 1]))
            pairs.append((halves[-1], (m - 3) // 2))
            spec = [[2] * ((v - 1) // 2) for v in odds]
            spec += [[2] * l + [3] + [2] * r for l, r in pairs]
        else:
            halves = [(v - 2) // 2 for v in evens]
            pairs = [(halves[i], halves[i + 1]) for i in range(0, len(halves), 2)]
            odds.remove(m - 1)
            spec = [[2] * l + [3] + [2] * r for l, r in pairs]
            spec += [[2] * ((v - 1) // 2) for v in odds]
            spec += [[2] * ((m - 2) // 2)]
        return _build(tag, spec, n)
    if tag == "T4":
        vals = list(pvals)
        vals.remove(m - 1)
        if vals and vals[0] >= 5:
            spec = [[4] + [2] * ((vals[0] - 5) // 2)]
            spec += [[2] * ((v - 1) // 2) for v in vals[1:]]
            spec += [[2] * ((m - 2) // 2)]
        else:
            spec = [[2] * ((v - 1) // 2) for v in vals]
            spec += [[4] + [2] * ((m - 6) // 2)]
        return _build(tag, spec, n)
    if tag == "T5":
        twos = pvals.count(3) - 2
        ones = pvals.count(1)
        if m == 4:
            spec = [[]] * ones + [[2]] * twos + [[5]]
        else:
            spec = [[5]] + [[2]] * twos + [[]] * ones
        return _build(tag, spec, n)
    raise AssertionError("unknown tag %r" % tag)


def canonical_form(p: Pair) -> Pair:
    """The unique typed pair over the canonical alphabet determined by
    (Type, P, M) of ``p``."""
    _, tag, _ = normalize_type(p)
    q = _canonical_from(tag, list(p_list(p)), m_value(p), p.n)
    assert is_pwor(q) is not None and type_of(q) == tag
    assert p_list(q) == p_list(p) and m_value(q) == m_value(p), (
        "canonical build drifted: %s" % format_pair(q)
    )
    return q


def canonical_form_extended(p: Pair) -> Pair:
    """The canonical pair of the extended class: the marking M is pinned to
    (max of P) + 1, which every extended class can reach."""
    _, tag, _ = normalize_type(p)
    pvals = list(p_list(p))
    q = _canonical_from(tag, pvals, max(pvals) + 1, p.n)
    assert is_pwor(q) is not None and type_of(q) == tag
    assert p_list(q) == tuple(sorted(pvals, reverse=True))
    assert m_value(q) == max(pvals) + 1
    return q


def same_class(p: Pair, q: Pair, scope: str = "class") -> bool:
    """Equality of non-labeled (extended) classes through the classifying
    bundle: (Type, P, M) for class scope, (Type, P) for extended."""
    if scope not in ("class", "extended"):
        raise ValueError("scope must be 'class' or 'extended'")
    if p.n != q.n:
        return False
    _, tp, _ = normalize_type(p)
    _, tq, _ = normalize_type(q)
    if tp != tq or p_list(p) != p_list(q):
        return False
    return scope == "extended" or m_value(p) == m_value(q)


# ---------------------------------------------------------------------------
# structural predicates


def is_sigma(p: Pair) -> bool:
    """True iff standard ``p`` matches (a w0 w1..wd wE z / z w0 wd..w1 wE a)
    with every wi (1 <= i <= d) non-empty."""
    if not is_standard(p):
        raise ValueError("the pattern is defined on standard pairs")
    t, b = p.top[1:-1], p.bottom[1:-1]
    L = len(t)
    for i in range(L + 1):
        if t[:i] != b[:i]:
            break
        for j in range(L - i + 1):
            if j and t[L - j :] != b[L - j :]:
                break
            mid_t = t[i : L - j]
            mid_b = b[i : L - j]
            if _blockwise_reversal(mid_t, mid_b):
                return True
    return False


def _blockwise_reversal(u, v):
    """True iff v = w_d .. w_1 for some split u = w_1 .. w_d with every
    w_i non-empty (d = 0 allowed when both are empty)."""
    n = len(u)
    if len(v) != n:
        return False
    memo = {}

    def go(i):
        # u[:i] already consumed as w_1..w_k matching a suffix of v
        if i in memo:
            return memo[i]
        if i == n:
            memo[i] = True
            return True
        out = False
        for w in range(1, n - i + 1):
            if v[n - i - w : n - i] == u[i : i + w]:
                if go(i + w):
                    out = True
                    break
        memo[i] = out
        return out

    return go(0)


def is_order_reversing(p: Pair) -> bool:
    pos0, pos1 = p.pos(0), p.pos(1)
    return all(pos0[b] + pos1[b] == p.n + 1 for b in p.top)


def is_degenerate_star(p: Pair) -> bool:
    """Some letter sits at position n-1 in both rows."""
    if not is_standard(p):
        raise ValueError("defined on standard pairs")
    return p.top[-2] == p.bottom[-2]


def is_good(p: Pair) -> bool:
    """The rows restricted to positions 2..n-1 form an irreducible pair."""
    if not is_standard(p):
        raise ValueError("defined on standard pairs")
    if p.n < 4:
        return False
    return is_irreducible(Pair(p.top[1:-1], p.bottom[1:-1]))


def find_good_or_degenerate(p: Pair):
    """A good or degenerate* pair in the labeled class of ``p`` (n >= 4);
    returns (pair, tag) with tag "good" or "degenerate"."""
    if p.n < 4:
        raise ValueError("needs at least 4 letters")
    if not is_irreducible(p):
        raise ValueError("p must be irreducible")
    if is_standard(p):
        if is_good(p):
            return p, "good"
        if is_degenerate_star(p):
            return p, "degenerate"
    q, _ = to_pwor(p)
    if is_degenerate_star(q):
        return q, "degenerate"
    if is_good(q):
        return q, "good"
    dec = is_pwor(q)
    first = dec.blocks[0]
    if len(first) >= 2:
        out, _ = inner_switch(q, first[0], dec.blocks[-1][0])
        assert is_good(out), "switch did not produce a good pair: %s" % format_pair(out)
        return out, "good"
    # leading 1-block: switch the heads of the last two blocks instead
    out, _ = inner_switch(q, dec.blocks[-2][0], dec.blocks[-1][0])
    assert is_good(out) or is_degenerate_star(out), (
        "switch did not produce a good or degenerate pair: %s" % format_pair(out)
    )
    return (out, "good") if is_good(out) else (out, "degenerate")
