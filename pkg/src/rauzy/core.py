r"""Alphabets, permutation pairs, irreducibility and basic symmetries.

A *pair* is two bijections ``p0, p1`` from a finite alphabet onto the
positions ``1..n``.  We represent it by its two rows: ``top[i-1]`` is the
letter at position ``i`` of row 0 and ``bottom[i-1]`` the letter at position
``i`` of row 1.  Letters are plain strings without whitespace or ``/``.

The text form of a pair is ``"a b c / c b a"``: tokens separated by single
spaces, rows separated by ``" / "``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

__all__ = [
    "Pair",
    "parse_pair",
    "format_pair",
    "is_irreducible",
    "monodromy",
    "from_one_row",
    "inverse",
    "h_map",
    "rename",
    "canonical_alphabet",
]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def canonical_letter(i: int) -> str:
    """i-th canonical letter (0-based): "a".."z", then "a1", "a2", ..."""
    if i < 26:
        return _LETTERS[i]
    return "a%d" % (i - 25)


def canonical_alphabet(n: int) -> tuple[str, ...]:
    return tuple(canonical_letter(i) for i in range(n))


def _check_letter(tok) -> None:
    if not isinstance(tok, str) or not tok or "/" in tok or any(c.isspace() for c in tok):
        raise ValueError("invalid letter token: %r" % (tok,))


@functools.lru_cache(maxsize=65536)
def _positions(row: tuple) -> dict:
    # letter -> 1-based position
    return {tok: i + 1 for i, tok in enumerate(row)}


@dataclass(frozen=True)
class Pair:
    """A permutation pair: two rows over a common alphabet of size n >= 2."""

    top: tuple
    bottom: tuple

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("row length mismatch")
        if len(self.top) < 2:
            raise ValueError("a pair needs at least 2 letters")
        for tok in self.top:
            _check_letter(tok)
        if len(set(self.top)) != len(self.top):
            raise ValueError("duplicate letter in top row")
        if len(set(self.bottom)) != len(self.bottom):
            raise ValueError("duplicate letter in bottom row")
        if set(self.top) != set(self.bottom):
            raise ValueError("letter sets differ between rows")

    @property
    def n(self) -> int:
        return len(self.top)

    @property
    def alphabet(self) -> frozenset:
        return frozenset(self.top)

    def row(self, eps: int) -> tuple:
        if eps == 0:
            return self.top
        if eps == 1:
            return self.bottom
        raise ValueError("eps must be 0 or 1")

    def pos(self, eps: int) -> dict:
        """Mapping letter -> 1-based position in row ``eps``."""
        return _positions(self.row(eps))

    def __str__(self) -> str:
        return format_pair(self)

    def __repr__(self) -> str:
        return "Pair(%r)" % format_pair(self)


def parse_pair(text: str) -> Pair:
    """Parse ``"a b c / c b a"`` (or newline-separated rows) into a Pair."""
    if "/" in text:
        rows = text.split("/")
    else:
        rows = text.splitlines()
    if len(rows) != 2:
        raise ValueError("expected exactly two rows")
    top = tuple(rows[0].split())
    bottom = tuple(rows[1].split())
    return Pair(top, bottom)


def format_pair(p: Pair) -> str:
    return "%s / %s" % (" ".join(p.top), " ".join(p.bottom))


def is_irreducible(p: Pair) -> bool:
    """True iff no proper prefix of positions holds the same letter set in
    both rows."""
    seen0, seen1 = set(), set()
    for k in range(p.n - 1):
        seen0.add(p.top[k])
        seen1.add(p.bottom[k])
        if seen0 == seen1:
            return False
    return True


def monodromy(p: Pair) -> tuple:
    """The one-row permutation p1 o p0^{-1}, as a tuple with entry i-1 equal
    to the image of position i."""
    pos1 = p.pos(1)
    return tuple(pos1[tok] for tok in p.top)


def from_one_row(perm) -> Pair:
    """Canonical section of the monodromy map: top row is the canonical
    alphabet in order, bottom arranged so that monodromy(result) = perm."""
    perm = tuple(perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..%d" % n)
    top = canonical_alphabet(n)
    bottom = [None] * n
    for i, img in enumerate(perm):
        bottom[img - 1] = top[i]
    return Pair(top, tuple(bottom))


def inverse(p: Pair) -> Pair:
    """Swap the two rows; inverts the monodromy."""
    return Pair(p.bottom, p.top)


def h_map(p: Pair) -> Pair:
    """The involution reversing both rows (positions i -> n+1-i)."""
    return Pair(p.top[::-1], p.bottom[::-1])


def rename(p: Pair, tau: dict) -> Pair:
    """Apply a letter bijection to both rows; monodromy is unchanged."""
    if set(tau) != set(p.top):
        raise ValueError("renaming domain does not match the alphabet")
    if len(set(tau.values())) != len(tau):
        raise ValueError("renaming is not injective")
    return Pair(tuple(tau[t] for t in p.top), tuple(tau[t] for t in p.bottom))
