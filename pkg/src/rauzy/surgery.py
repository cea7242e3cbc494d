r"""Prefix extensions and restrictions, path extension, and the maximal
distance (star) pairs.

An extension replaces each letter ``b`` of a small pair by a word ending in
``b`` whose other letters are new; a restriction filters rows to a
sub-alphabet.  A path on the small alphabet extends to a path on the large
one, one run per move, with multiplicities given by the word lengths.

Star pairs are the pairs at cycle distance exactly n-2 from the standard
pairs; they match four explicit closed forms and connect to an
order-reversing pair by an explicit inductive construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Pair, is_irreducible
from .moves import (
    EMPTY_PATH,
    Move,
    Path,
    R0,
    R1,
    apply_move,
    apply_path,
    cycle_vertices,
    is_standard,
)

__all__ = [
    "ExtensionSpec",
    "restrict",
    "extend",
    "implicit_extension",
    "extension_preserves_irreducibility",
    "extend_path",
    "path_respects_restriction",
    "StarWitness",
    "is_star",
    "star_pair",
    "star_to_standard",
]


@dataclass(frozen=True)
class ExtensionSpec:
    """Words ``omega[eps][b]`` indexed by row and small-alphabet letter.

    Each word ends with its letter ``b``; all other letters are new and,
    per row, every letter of the big alphabet appears in exactly one word.
    """

    sub: frozenset
    words: tuple  # (dict for eps=0, dict for eps=1)

    def __post_init__(self):
        object.__setattr__(self, "sub", frozenset(self.sub))
        w0, w1 = self.words
        w0 = {b: tuple(w) for b, w in w0.items()}
        w1 = {b: tuple(w) for b, w in w1.items()}
        object.__setattr__(self, "words", (w0, w1))
        if set(w0) != self.sub or set(w1) != self.sub:
            raise ValueError("words must be indexed exactly by the sub-alphabet")
        full = None
        for words in (w0, w1):
            seen = []
            for b, w in words.items():
                if not w or w[-1] != b:
                    raise ValueError("word for %r must end with it" % b)
                for c in w[:-1]:
                    if c in self.sub:
                        raise ValueError("prefix letter %r lies in the sub-alphabet" % c)
                seen.extend(w)
            if len(seen) != len(set(seen)):
                raise ValueError("words share letters within one row")
            if full is None:
                full = set(seen)
            elif full != set(seen):
                raise ValueError("rows cover different letter sets")
        object.__setattr__(self, "full", frozenset(full))

    def word(self, eps: int, b):
        return self.words[eps][b]


def identity_extension(p: Pair) -> ExtensionSpec:
    words = {b: (b,) for b in p.top}
    return ExtensionSpec(frozenset(p.top), (dict(words), dict(words)))


def restrict(p: Pair, sub) -> Pair:
    """Filter both rows to ``sub`` preserving order.  The result may be
    reducible; that is the caller's concern."""
    sub = frozenset(sub)
    if not sub <= p.alphabet:
        raise ValueError("sub-alphabet not contained in the alphabet")
    if len(sub) < 2:
        raise ValueError("sub-alphabet needs at least 2 letters")
    if p.top[-1] not in sub or p.bottom[-1] not in sub:
        raise ValueError("last letter of a row falls outside the sub-alphabet")
    return Pair(
        tuple(b for b in p.top if b in sub),
        tuple(b for b in p.bottom if b in sub),
    )


def extend(p: Pair, omega: ExtensionSpec) -> Pair:
    """Replace each letter of each row by its word."""
    if frozenset(p.top) != omega.sub:
        raise ValueError("pair alphabet does not match the extension")
    top = tuple(c for b in p.top for c in omega.word(0, b))
    bottom = tuple(c for b in p.bottom for c in omega.word(1, b))
    return Pair(top, bottom)


def implicit_extension(p: Pair, sub) -> ExtensionSpec:
    """The extension determined by a restriction: extend(restrict(p, sub))
    recovers ``p``."""
    sub = frozenset(sub)
    if p.top[-1] not in sub or p.bottom[-1] not in sub:
        raise ValueError("last letter of a row falls outside the sub-alphabet")
    words = []
    for row in (p.top, p.bottom):
        acc, out = [], {}
        for c in row:
            acc.append(c)
            if c in sub:
                out[c] = tuple(acc)
                acc = []
        assert not acc
        words.append(out)
    return ExtensionSpec(sub, (words[0], words[1]))


def extension_preserves_irreducibility(p: Pair, omega: ExtensionSpec) -> bool:
    """True iff the extension of irreducible ``p`` stays irreducible: the
    words of the two row-heads must not share a common k-prefix (as letter
    sets) for any k > 0."""
    if not is_irreducible(p):
        raise ValueError("p must be irreducible")
    w0 = omega.word(0, p.top[0])
    w1 = omega.word(1, p.bottom[0])
    for k in range(1, min(len(w0), len(w1)) + 1):
        if set(w0[:k]) == set(w1[:k]):
            return False
    return True


def extend_path(p: Pair, path: Path, omega: ExtensionSpec) -> Path:
    """Extend a right-move path on the small pair ``p`` to the big alphabet,
    one run per elementary move."""
    if frozenset(p.top) != omega.sub:
        raise ValueError("pair alphabet does not match the extension")
    runs = []
    cur = p
    for m in path.moves():
        if m.side != "r":
            raise ValueError("only right-move paths extend")
        z_other = cur.row(1 - m.kind)[-1]
        runs.append((m, len(omega.word(1 - m.kind, z_other))))
        cur = apply_move(cur, m)
    return Path.from_runs(runs)


def path_respects_restriction(p: Pair, path: Path, sub) -> bool:
    """True iff every cycle vertex of ``path`` keeps its row-final letters
    inside ``sub`` (equivalently, the path is an extension of a path on the
    restriction)."""
    sub = frozenset(sub)
    for q in cycle_vertices(p, path):
        if q.top[-1] not in sub or q.bottom[-1] not in sub:
            return False
    return True


@dataclass(frozen=True)
class StarWitness:
    epsilon: int


def _star_bottom_position(n: int, eps: int, j: int) -> int:
    # the four closed forms, one per (parity of n, eps)
    if n % 2 == 0 and eps == 0:
        if j == 1:
            return 2
        if j == n:
            return n - 1
        return j + 2 if j % 2 == 0 else j - 2
    if n % 2 == 0 and eps == 1:
        if j == 2:
            return 1
        if j == n - 1:
            return n
        return j + 2 if j % 2 == 1 else j - 2
    if n % 2 == 1 and eps == 0:
        if j == 2:
            return 1
        if j == n:
            return n - 1
        return j + 2 if j % 2 == 1 else j - 2
    if j == 1:
        return 2
    if j == n - 1:
        return n
    return j + 2 if j % 2 == 0 else j - 2


def star_pair(n: int, eps: int, letters=None) -> Pair:
    """The star pair on n letters with witness ``eps`` (top row in order)."""
    from .core import canonical_alphabet

    if n < 2:
        raise ValueError("n >= 2 required")
    top = tuple(letters) if letters is not None else canonical_alphabet(n)
    bottom = [None] * n
    for j in range(1, n + 1):
        bottom[_star_bottom_position(n, eps, j) - 1] = top[j - 1]
    return Pair(top, tuple(bottom))


def is_star(p: Pair) -> StarWitness | None:
    for eps in (0, 1):
        if p == star_pair(p.n, eps, p.top):
            return StarWitness(eps)
    return None


def _star_target(p: Pair, eps: int) -> Pair:
    """The order-reversing pair a star pair connects to, with the stated
    top-row arrangement."""
    n = p.n
    q0 = {}
    if (n + eps) % 2 == 0:
        for j in range(1, n + 1):
            if j == 1:
                q0[p.top[0]] = 1
            elif j % 2 == 0:
                q0[p.top[j - 1]] = j // 2 + 1
            else:
                q0[p.top[j - 1]] = n - (j - 3) // 2
    else:
        for j in range(1, n + 1):
            if j % 2 == 1:
                q0[p.top[j - 1]] = (j - 1) // 2 + 1
            else:
                q0[p.top[j - 1]] = n + 1 - j // 2
    top = [None] * n
    bottom = [None] * n
    for b, i in q0.items():
        top[i - 1] = b
        bottom[n - i] = b
    return Pair(tuple(top), tuple(bottom))


def _bounded_path_search(p: Pair, q: Pair, max_cycles: int) -> Path:
    """Find a forward path from p to q with at most ``max_cycles`` cycles."""
    from collections import deque

    if p == q:
        return EMPTY_PATH
    frontier = deque([(p, EMPTY_PATH)])
    seen = {p}
    while frontier:
        cur, path = frontier.popleft()
        if path.cycle_length() >= max_cycles:
            continue
        for move in (R0, R1):
            nxt, k = apply_move(cur, move), 1
            while nxt != cur:
                cand = path + Path(((move, k),))
                if nxt == q:
                    return cand
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append((nxt, cand))
                nxt = apply_move(nxt, move)
                k += 1
    raise ValueError("target not reachable within the cycle bound")


def star_to_standard(p: Pair) -> tuple:
    """Connect a star pair to its stated order-reversing pair.

    Follows the inductive construction: one move, drop the displaced
    letter, recurse, and extend the recursive path back; the recursion
    bottoms out at n <= 3 where the path is found directly.
    """
    witness = is_star(p)
    if witness is None:
        raise ValueError("not a star pair")
    eps = witness.epsilon
    target = _star_target(p, eps)
    if p.n <= 3:
        path = _bounded_path_search(p, target, max_cycles=max(p.n - 2, 0))
        return target, path
    move = R1 if eps == 0 else R0
    p1 = apply_move(p, move)
    drop = p.top[-1] if eps == 0 else p.bottom[-1]
    sub = p.alphabet - {drop}
    small = restrict(p1, sub)
    assert is_star(small) is not None, "restriction lost the star form"
    _, small_path = star_to_standard(small)
    omega = implicit_extension(p1, sub)
    big_path = extend_path(small, small_path, omega)
    full = Path(((move, 1),)) + big_path
    result = apply_path(p, full)
    assert result == target and is_standard(result)
    return result, full
