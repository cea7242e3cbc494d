r"""Switch moves between standard pairs, order-reversing block structure,
chains, and the search for a piece-wise order reversing representative.

An inner switch exchanges the segments around two interior letters that sit
in the same relative order in both rows; an outer switch exchanges an
interior letter with a boundary letter.  Both are realized as explicit
Rauzy-move paths and verified against their target forms on every call.

A standard pair is piece-wise order reversing (PWOR) when its interior
splits into blocks occupying the same positions in both rows, each with the
order reversed.  Blocks of size one separate the interior into chains.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Pair, format_pair
from .moves import L0, L1, Path, R0, R1, apply_path, is_standard, to_standard

__all__ = [
    "inner_switch",
    "outer_switch",
    "parse_switches",
    "format_switches",
    "apply_switches",
    "BlockDecomposition",
    "is_pwor",
    "Chains",
    "chains",
    "reorder_chains",
    "to_pwor",
]


def _segments(p: Pair, b, c):
    """Split interior rows around b and c: returns (w1, w2, w3, w4, w5, w6)
    for layout (a w1 b w2 c w3 z / z w4 b w5 c w6 a)."""
    pos0, pos1 = p.pos(0), p.pos(1)
    i0, j0 = pos0[b] - 1, pos0[c] - 1
    i1, j1 = pos1[b] - 1, pos1[c] - 1
    return (
        p.top[1:i0],
        p.top[i0 + 1 : j0],
        p.top[j0 + 1 : -1],
        p.bottom[1:i1],
        p.bottom[i1 + 1 : j1],
        p.bottom[j1 + 1 : -1],
    )


def inner_switch(p: Pair, b, c) -> tuple:
    """The {b,c}-inner switch: returns (target, path).

    Requires p standard and 1 < pos(b) < pos(c) < n in both rows (either
    argument order).  The path is the 0-first cycle path with the standard
    exponents; the result is verified against the target form by replay.
    """
    if not is_standard(p):
        raise ValueError("inner switch requires a standard pair")
    pos0, pos1 = p.pos(0), p.pos(1)
    if b == c or b not in pos0 or c not in pos0:
        raise ValueError("switch letters must be two distinct letters of p")
    if pos0[b] > pos0[c]:
        b, c = c, b
    n = p.n
    for pos in (pos0, pos1):
        if not (1 < pos[b] < pos[c] < n):
            raise ValueError(
                "letters %r, %r not interior in the same order in both rows" % (b, c)
            )
    w1, w2, w3, w4, w5, w6 = _segments(p, b, c)
    path = Path.from_runs(
        [
            (R0, 2 + len(w5) + len(w6)),
            (R1, 1 + len(w3)),
            (R0, 1 + len(w4)),
            (R1, 1 + len(w2)),
        ]
    )
    a, z = p.top[0], p.bottom[0]
    target = Pair(
        (a,) + w2 + (c,) + w1 + (b,) + w3 + (z,),
        (z,) + w5 + (c,) + w4 + (b,) + w6 + (a,),
    )
    got = apply_path(p, path)
    assert got == target, "inner switch replay mismatch on %s" % format_pair(p)
    return target, path


def outer_switch(p: Pair, x, y) -> tuple:
    """The outer switch on {a,b} or {b,z}: returns (target, path).

    a is the first top letter, z the first bottom letter, b interior in both
    rows.  The target form is authoritative; the connecting path is found by
    trying the four candidate two-cycle paths and picking the one that
    replays to the target.
    """
    if not is_standard(p):
        raise ValueError("outer switch requires a standard pair")
    a, z = p.top[0], p.bottom[0]
    if x in (a, z):
        x, y = y, x
    b = x
    if y not in (a, z) or b in (a, z) or b not in p.alphabet:
        raise ValueError("need one boundary letter (a or z) and one interior letter")
    pos0, pos1 = p.pos(0), p.pos(1)
    if not (1 < pos0[b] < p.n and 1 < pos1[b] < p.n):
        raise ValueError("letter %r is not interior in both rows" % b)
    i0, i1 = pos0[b] - 1, pos1[b] - 1
    w1, w2 = p.top[1:i0], p.top[i0 + 1 : -1]
    w3, w4 = p.bottom[1:i1], p.bottom[i1 + 1 : -1]
    if y == a:
        target = Pair((b,) + w2 + (a,) + w1 + (z,), (z,) + w4 + (a,) + w3 + (b,))
    else:
        target = Pair((a,) + w2 + (z,) + w1 + (b,), (b,) + w4 + (z,) + w3 + (a,))
    candidates = [
        [(R0, 1 + len(w4)), (L1, 1 + len(w1))],
        [(L1, 1 + len(w1)), (R0, 1 + len(w4))],
        [(R1, 1 + len(w2)), (L0, 1 + len(w3))],
        [(L0, 1 + len(w3)), (R1, 1 + len(w2))],
    ]
    for runs in candidates:
        path = Path.from_runs(runs)
        if apply_path(p, path) == target:
            return target, path
    raise AssertionError("no candidate path reaches the outer switch target")


def parse_switches(text: str):
    """Parse ``"{b,c} {d,e}"`` into a list of letter pairs."""
    out = []
    for tok in text.split():
        if not (tok.startswith("{") and tok.endswith("}")):
            raise ValueError("invalid switch token %r" % tok)
        parts = tok[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError("invalid switch token %r" % tok)
        out.append((parts[0], parts[1]))
    return out


def format_switches(seq) -> str:
    return " ".join("{%s,%s}" % (b, c) for b, c in seq)


def apply_switches(p: Pair, seq) -> Pair:
    """Replay a switch sequence (inner or outer, decided per pair) and
    return the endpoint."""
    for b, c in seq:
        boundary = {p.top[0], p.bottom[0]}
        if b in boundary or c in boundary:
            p, _ = outer_switch(p, b, c)
        else:
            p, _ = inner_switch(p, b, c)
    return p


@dataclass(frozen=True)
class BlockDecomposition:
    """The finest order-reversing block structure of a standard pair.

    boundaries are 2 = k0 < k1 < ... < kl = n; block i holds the letters at
    positions k_{i-1}..k_i - 1 (top order), order reversed in the bottom.
    """

    boundaries: tuple
    blocks: tuple  # tuples of letters, in top order

    def sizes(self) -> tuple:
        return tuple(len(b) for b in self.blocks)


def is_pwor(p: Pair):
    """The finest block decomposition of p, or None if p is not piece-wise
    order reversing (in particular if p is not standard)."""
    if not is_standard(p):
        return None
    n = p.n
    pos0, pos1 = p.pos(0), p.pos(1)
    boundaries = [2]
    blocks = []
    s = 2
    while s < n:
        seen0, seen1 = set(), set()
        e = s - 1
        while True:
            e += 1
            if e >= n:
                return None
            seen0.add(p.top[e - 1])
            seen1.add(p.bottom[e - 1])
            if seen0 == seen1:
                break
        block = p.top[s - 1 : e]
        if any(pos0[b] + pos1[b] != s + e for b in block):
            return None
        boundaries.append(e + 1)
        blocks.append(block)
        s = e + 1
    return BlockDecomposition(tuple(boundaries), tuple(blocks))


@dataclass(frozen=True)
class Chains:
    """Blocks grouped between the 1-blocks: chains[i] is a tuple of blocks
    (each of size >= 2, possibly no blocks), separators the 1-block letters.
    There is one more chain than separators."""

    chains: tuple
    separators: tuple

    def __len__(self):
        return len(self.chains)


def chains(p: Pair) -> Chains:
    dec = is_pwor(p)
    if dec is None:
        raise ValueError("chain decomposition requires a PWOR pair")
    out = [[]]
    seps = []
    for block in dec.blocks:
        if len(block) == 1:
            seps.append(block[0])
            out.append([])
        else:
            out[-1].append(block)
    return Chains(tuple(tuple(c) for c in out), tuple(seps))


def reorder_chains(p: Pair, order) -> tuple:
    """Reorder the chains of PWOR p (the last chain stays) by inner
    switches on separator letters; returns (pair, switch list).

    ``order`` lists the desired source indices (1-based) of chains
    1..k-1; it must be a permutation of 1..k-1.
    """
    ch = chains(p)
    k = len(ch)
    order = tuple(order)
    if sorted(order) != list(range(1, k)):
        raise ValueError("order must be a permutation of 1..%d" % (k - 1))
    want = [ch.chains[i - 1] for i in order]
    seq = []
    cur = p
    for j in range(k - 1, 0, -1):
        now = chains(cur)
        t = now.chains.index(want[j - 1]) + 1
        if t == j:
            continue
        # swap the first t chains with the next j-t: lands chain t at slot j
        pair = (now.separators[t - 1], now.separators[j - 1])
        cur, _ = inner_switch(cur, *pair)
        seq.append(pair)
    assert chains(cur).chains[: k - 1] == tuple(want)
    return cur, seq


def _pwor_failure(p: Pair):
    """Scan interior positions right to left; return (n, suffix start list)
    where n is the first position not covered by order-reversing blocks, or
    None if p is PWOR."""
    N = p.n
    pos0, pos1 = p.pos(0), p.pos(1)
    e = N - 1
    while e >= 2:
        seen0, seen1 = set(), set()
        s = e + 1
        ok = False
        while s > 2:
            s -= 1
            seen0.add(p.top[s - 1])
            seen1.add(p.bottom[s - 1])
            if seen0 == seen1:
                ok = all(pos0[b] + pos1[b] == s + e for b in p.top[s - 1 : e])
                break
        if not ok:
            return e
        e = s - 1
    return None


def to_pwor(p: Pair) -> tuple:
    """A PWOR pair in the labeled class of irreducible p.

    Returns (pair, switch list); the switches act on to_standard(p)[0].
    Each step performs one inner switch per the three-case analysis and
    strictly improves (n decreases, or n0/n1 grows at equal n).
    """
    q, _ = to_standard(p)
    seq = []
    guard = 0
    while True:
        n = _pwor_failure(q)
        if n is None:
            break
        guard += 1
        assert guard <= q.n ** 3, "no progress in PWOR search"
        pos0, pos1 = q.pos(0), q.pos(1)
        b0, b1 = q.top[n - 1], q.bottom[n - 1]
        n0, n1 = pos0[b1], pos1[b0]
        pair = None
        if n0 <= n1:
            cand = [c for c in q.top if n0 < pos0[c] < n and pos1[c] < n1]
            if cand:
                pair = (q.top[n - 1], max(cand, key=pos0.get))
        if pair is None and n1 <= n0:
            cand = [c for c in q.top if n1 < pos1[c] < n and pos0[c] < n0]
            if cand:
                pair = (q.bottom[n - 1], max(cand, key=pos1.get))
        if pair is None:
            # both middle windows empty on one side: pick an increasing pair
            mid = [
                c
                for c in q.top
                if n0 < pos0[c] < n and n1 < pos1[c] < n
            ]
            mid.sort(key=pos0.get)
            for i, c in enumerate(mid):
                d = next((d for d in mid[i + 1 :] if pos1[d] > pos1[c]), None)
                if d is not None:
                    pair = (c, d)
                    break
            assert pair is not None, "no switch available; %s" % format_pair(q)
        q, _ = inner_switch(q, *pair)
        seq.append(pair)
        new_n = _pwor_failure(q)
        if new_n is not None:
            np0, np1 = q.pos(0), q.pos(1)
            nb0, nb1 = q.top[new_n - 1], q.bottom[new_n - 1]
            nn0, nn1 = np0[nb1], np1[nb0]
            assert new_n < n or nn0 > n0 or nn1 > n1, (
                "PWOR monovariant failed on %s" % format_pair(q)
            )
    return q, seq
