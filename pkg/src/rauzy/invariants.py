r"""Class and extended-class invariants of a pair.

``s_map`` is the letter permutation S; ``m_value`` the length of its cycle
through the first top letter; ``y_map`` the first return of S off that
letter; ``p_list`` the multiset of Y-cycle lengths (sorted descending).

``quad_form`` is the GF(2) quadratic form with crossing coefficients and
``arf_count`` the number of vectors on which it evaluates to 1, computed by
exhaustive evaluation over all 2^n vectors.  ``arf_by_blocks`` is the closed
block-count formula it must agree with on block-built pairs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy

from .core import Pair, is_irreducible

__all__ = [
    "s_map",
    "m_value",
    "y_map",
    "p_list",
    "cycles",
    "QuadForm",
    "quad_form",
    "arf_count",
    "arf_by_blocks",
    "Signature",
    "signature",
]

# sentinels for the boundary points of the doubled alphabet
_LEFT = object()
_RIGHT = object()


def _s_map_closed(p: Pair) -> dict:
    n = p.n
    pos0, pos1 = p.pos(0), p.pos(1)
    top, bottom = p.top, p.bottom
    special = pos1[top[-1]] + 1  # p1(p0^{-1}(n)) + 1
    out = {}
    for alpha in top:
        j = pos1[alpha]
        if j == 1:
            out[alpha] = top[0]
        elif j == special:
            out[alpha] = top[pos0[bottom[-1]]]  # p0^{-1}(p0(p1^{-1}(n)) + 1)
        else:
            out[alpha] = top[pos0[bottom[j - 2]]]
    return out


def _s_map_first_return(p: Pair) -> dict:
    # S as the first return to the alphabet of R_{p0} o L_{p1} on the
    # alphabet extended by two boundary points.
    def L(row, pos):
        def f(b):
            if b is _LEFT:
                return _RIGHT
            if b is _RIGHT:
                return row[-1]
            return _LEFT if pos[b] == 1 else row[pos[b] - 2]

        return f

    def inv(f):
        domain = list(p.top) + [_LEFT, _RIGHT]
        m = {f(b): b for b in domain}
        return lambda b: m[b]

    l1 = L(p.bottom, p.pos(1))
    r0 = inv(L(p.top, p.pos(0)))
    out = {}
    for alpha in p.top:
        b = r0(l1(alpha))
        while b is _LEFT or b is _RIGHT:
            b = r0(l1(b))
        out[alpha] = b
    return out


def s_map(p: Pair, verify: bool = True) -> dict:
    """The letter permutation S of ``p`` as a dict.

    With ``verify`` (the default) the closed three-case formula is checked
    against the independent first-return construction.
    """
    if not is_irreducible(p):
        raise ValueError("S is defined on irreducible pairs")
    out = _s_map_closed(p)
    if verify and out != _s_map_first_return(p):
        raise AssertionError("S constructions disagree on %s" % p)
    return out


def cycles(perm: dict) -> list:
    """Cycles of a finite permutation given as a dict, as lists of elements.
    Deterministic: each cycle starts at its first-seen element."""
    seen = set()
    out = []
    for start in perm:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        b = perm[start]
        while b != start:
            cyc.append(b)
            seen.add(b)
            b = perm[b]
        out.append(cyc)
    return out


def m_value(p: Pair) -> int:
    s = s_map(p)
    a = p.top[0]
    for cyc in cycles(s):
        if a in cyc:
            return len(cyc)
    raise AssertionError("unreachable")


def y_map(p: Pair) -> dict:
    """First return of S to the alphabet minus the first top letter."""
    s = s_map(p)
    a = p.top[0]
    pos1 = p.pos(1)
    out = {}
    for b in p.top:
        if b == a:
            continue
        out[b] = s[s[b]] if pos1[b] == 1 else s[b]
    return out


def p_list(p: Pair) -> tuple:
    """Y-cycle lengths, sorted descending.  They sum to n-1."""
    lengths = sorted((len(c) for c in cycles(y_map(p))), reverse=True)
    return tuple(lengths)


@dataclass(frozen=True)
class QuadForm:
    """Crossing data of a pair: the set of unordered letter pairs that
    appear in opposite relative order in the two rows."""

    letters: tuple
    crossing: frozenset  # of frozensets {a, b}

    def __call__(self, v: dict) -> int:
        total = sum(v[a] for a in self.letters)
        for pair in self.crossing:
            a, b = tuple(pair)
            total += v[a] * v[b]
        return total % 2


def quad_form(p: Pair) -> QuadForm:
    if not is_irreducible(p):
        raise ValueError("the form is defined on irreducible pairs")
    pos0, pos1 = p.pos(0), p.pos(1)
    crossing = set()
    letters = p.top
    for i, a in enumerate(letters):
        for b in letters[i + 1 :]:
            if (pos0[a] - pos0[b]) * (pos1[a] - pos1[b]) < 0:
                crossing.add(frozenset((a, b)))
    return QuadForm(letters, frozenset(crossing))


def arf_count(p: Pair, cap: int = 24) -> int:
    """#{v in Z_2^A : Q_p(v) = 1}, by exhaustive evaluation of all 2^n
    vectors (vectorized; exact integer result)."""
    form = quad_form(p)
    n = p.n
    if n > cap:
        raise ValueError("alphabet size %d above enumeration cap %d" % (n, cap))
    index = {a: i for i, a in enumerate(form.letters)}
    codes = numpy.arange(1 << n, dtype=numpy.uint32)
    bits = [(codes >> i) & 1 for i in range(n)]
    q = numpy.zeros(1 << n, dtype=numpy.uint8)
    for b in bits:
        q ^= b.astype(numpy.uint8)
    for pair in form.crossing:
        a, b = tuple(pair)
        q ^= (bits[index[a]] & bits[index[b]]).astype(numpy.uint8)
    return int(q.sum())


def arf_by_blocks(n1: int, n2: int, n4: int, n5: int) -> int:
    """Closed count for a pair built from 1-, 2-, 4- and 5-blocks."""
    return 2 ** (n1 + 2 * n2 + 4 * n4 + 5 * n5 + 1) + (-1) ** (n4 + n5) * 2 ** (
        n1 + n2 + 2 * n4 + 3 * n5
    )


@dataclass(frozen=True)
class Signature:
    """The classifying bundle: Type tag, P list, and (class scope) M."""

    scope: str  # "class" or "extended"
    type_tag: str  # "T1".."T5"
    p: tuple
    m: int | None = None

    def __post_init__(self):
        if self.scope not in ("class", "extended"):
            raise ValueError("scope must be 'class' or 'extended'")
        if (self.m is None) == (self.scope == "class"):
            raise ValueError("m is present exactly in class scope")


def signature(p: Pair, scope: str = "class") -> Signature:
    from . import classify  # local import; classify builds on this module

    _, tag, _ = classify.normalize_type(p)
    if scope == "class":
        return Signature("class", tag, p_list(p), m_value(p))
    return Signature("extended", tag, p_list(p))
