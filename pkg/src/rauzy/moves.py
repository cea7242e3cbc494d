r"""Elementary moves on pairs, paths, the standard-pair walk and the cycle
metric.

There are four elementary moves: right moves of type 0 and 1 (keep that row,
reinsert the other row's last letter just after the kept row's last letter)
and left moves of type 0 and 1 (the symmetric operation at position 1).

A path is a sequence of moves, stored in cycle-compressed form as runs
``(move, count)`` with adjacent runs differing.  Text form: runs joined by
spaces, each run ``r0|r1|l0|l1`` optionally followed by ``^k``, e.g.
``"r0^2 r1 r0 r1"``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Pair, is_irreducible

__all__ = [
    "Move",
    "Path",
    "R0",
    "R1",
    "L0",
    "L1",
    "parse_path",
    "format_path",
    "apply_move",
    "apply_path",
    "cycle_vertices",
    "is_standard",
    "to_standard",
    "cycle_distance",
]


@dataclass(frozen=True)
class Move:
    side: str  # "r" or "l"
    kind: int  # 0 or 1

    def __post_init__(self):
        if self.side not in ("r", "l") or self.kind not in (0, 1):
            raise ValueError("invalid move %r%r" % (self.side, self.kind))

    def __str__(self):
        return "%s%d" % (self.side, self.kind)


R0 = Move("r", 0)
R1 = Move("r", 1)
L0 = Move("l", 0)
L1 = Move("l", 1)
_BY_NAME = {"r0": R0, "r1": R1, "l0": L0, "l1": L1}


@dataclass(frozen=True)
class Path:
    """Runs ``(Move, count >= 1)`` with adjacent runs differing."""

    runs: tuple

    def __post_init__(self):
        runs = tuple((m, int(k)) for (m, k) in self.runs)
        object.__setattr__(self, "runs", runs)
        for m, k in runs:
            if not isinstance(m, Move) or k < 1:
                raise ValueError("invalid run (%r, %r)" % (m, k))
        for (m1, _), (m2, _) in zip(runs, runs[1:]):
            if m1 == m2:
                raise ValueError("adjacent runs must differ")

    @staticmethod
    def from_moves(moves) -> "Path":
        """Build a path from a flat move sequence, compressing runs."""
        runs = []
        for m in moves:
            if runs and runs[-1][0] == m:
                runs[-1][1] += 1
            else:
                runs.append([m, 1])
        return Path(tuple((m, k) for m, k in runs))

    @staticmethod
    def from_runs(runs) -> "Path":
        """Build a path from a run sequence, merging adjacent equal moves."""
        merged = []
        for m, k in runs:
            if k == 0:
                continue
            if merged and merged[-1][0] == m:
                merged[-1][1] += k
            else:
                merged.append([m, k])
        return Path(tuple((m, k) for m, k in merged))

    def moves(self):
        for m, k in self.runs:
            for _ in range(k):
                yield m

    def cycle_length(self) -> int:
        return len(self.runs)

    def __add__(self, other: "Path") -> "Path":
        return Path.from_runs(self.runs + other.runs)

    def __len__(self):
        return sum(k for _, k in self.runs)

    def __str__(self):
        return format_path(self)


EMPTY_PATH = Path(())


def parse_path(text: str) -> Path:
    runs = []
    for tok in text.split():
        if "^" in tok:
            name, k = tok.split("^")
            k = int(k)
        else:
            name, k = tok, 1
        if name not in _BY_NAME or k < 1:
            raise ValueError("invalid path run %r" % tok)
        runs.append((_BY_NAME[name], k))
    return Path(tuple(runs))


def format_path(path: Path) -> str:
    return " ".join(str(m) if k == 1 else "%s^%d" % (m, k) for m, k in path.runs)


def _move_rows(top: tuple, bottom: tuple, move: Move):
    """The move as a word operation on raw rows (used by hot loops too)."""
    rows = [top, bottom]
    eps = move.kind
    keep, other = rows[eps], rows[1 - eps]
    if move.side == "r":
        z = keep[-1]
        w = other[-1]
        i = other.index(z)
        new_other = other[: i + 1] + (w,) + other[i + 1 : -1]
    else:
        a = keep[0]
        w = other[0]
        i = other.index(a)
        new_other = other[1:i] + (w,) + other[i:]
    rows[1 - eps] = new_other
    return rows[0], rows[1]


def apply_move(p: Pair, m: Move) -> Pair:
    """Apply one elementary move.  A move may fix p; that is legal."""
    if not is_irreducible(p):
        raise ValueError("move applied to a reducible pair")
    top, bottom = _move_rows(p.top, p.bottom, m)
    return Pair(top, bottom)


def apply_path(p: Pair, path: Path) -> Pair:
    for m in path.moves():
        p = apply_move(p, m)
    return p


def cycle_vertices(p: Pair, path: Path):
    """The pairs at the run boundaries of ``path`` starting from ``p``
    (length = number of runs + 1)."""
    out = [p]
    for m, k in path.runs:
        for _ in range(k):
            p = apply_move(p, m)
        out.append(p)
    return out


def is_standard(p: Pair) -> bool:
    return p.top[0] == p.bottom[-1] and p.bottom[0] == p.top[-1]


def to_standard(p: Pair) -> tuple:
    """Walk from ``p`` to a standard pair in its labeled class.

    Follows the constructive existence proof cycle by cycle; the resulting
    path has cycle length at most n-2.  Ties (n0 = n1) resolve to type 0 and
    the cycling letter is chosen to maximize its position in the fixed row.
    """
    if not is_irreducible(p):
        raise ValueError("reducible pair")
    q = p
    runs = []
    while not is_standard(q):
        A = q.n
        pos0, pos1 = q.pos(0), q.pos(1)
        n0 = pos1[q.top[-1]]
        n1 = pos0[q.bottom[-1]]
        if n0 == 1:
            move, k = R0, A - pos1[q.top[0]]
        elif n1 == 1:
            move, k = R1, A - pos0[q.bottom[0]]
        else:
            eps = 0 if n0 <= n1 else 1
            n_eps = n0 if eps == 0 else n1
            pos_eps, pos_oth = (pos0, pos1) if eps == 0 else (pos1, pos0)
            best = None
            for b in q.top:
                if pos_oth[b] > n_eps > pos_eps[b]:
                    if best is None or pos_oth[b] > pos_oth[best]:
                        best = b
            assert best is not None, "no cycling letter; pair reducible?"
            move, k = (R0 if eps == 0 else R1), A - pos_oth[best]
        assert k >= 1
        for _ in range(k):
            q = apply_move(q, move)
        runs.append((move, k))
    return q, Path.from_runs(runs)


def _cycle_neighbors(p: Pair):
    """All pairs reachable from p by one cycle (a run of right moves of a
    single type), excluding p itself."""
    for move in (R0, R1):
        q = apply_move(p, move)
        while q != p:
            yield q
            q = apply_move(q, move)


def cycle_distance(p: Pair, q: Pair, limit: int | None = None) -> int:
    """Minimal number of cycles over forward Rauzy paths from p to q.

    Raises ValueError if q is not reachable (not in the labeled class).
    """
    if p == q:
        return 0
    seen = {p}
    frontier = deque([(p, 0)])
    while frontier:
        cur, d = frontier.popleft()
        if limit is not None and d >= limit:
            continue
        for nxt in _cycle_neighbors(cur):
            if nxt == q:
                return d + 1
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, d + 1))
    raise ValueError("target pair is not reachable by Rauzy moves")
