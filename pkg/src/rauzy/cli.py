r"""Command-line front end and the verification harness.

Subcommands: invariants, classify, normalize, same-class, connect,
enumerate, verify.  Every printed path witness is replayed before output.
Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from collections import deque
from itertools import permutations

from .core import (
    Pair,
    canonical_alphabet,
    format_pair,
    from_one_row,
    inverse,
    is_irreducible,
    monodromy,
    parse_pair,
)
from .invariants import (
    arf_by_blocks,
    arf_count,
    cycles,
    m_value,
    p_list,
    quad_form,
    s_map,
    y_map,
)
from .moves import (
    L0,
    L1,
    Move,
    Path,
    R0,
    R1,
    apply_move,
    apply_path,
    format_path,
    is_standard,
    to_standard,
)
from .surgery import is_star, restrict
from .switches import apply_switches, format_switches, is_pwor, to_pwor
from .classify import (
    canonical_form,
    canonical_form_extended,
    find_good_or_degenerate,
    is_degenerate_star,
    is_good,
    normalize_type,
    same_class,
    type_of,
)
from .census import (
    census_jsonl,
    class_census,
    enumerate_class,
    irreducible_count,
    switch_graph_connected,
)

__all__ = ["main", "run_acceptance", "ACCEPTANCE"]


# ---------------------------------------------------------------------------
# acceptance suite


def _irreducible_pairs(n):
    for perm in permutations(range(1, n + 1)):
        p = from_one_row(perm)
        if is_irreducible(p):
            yield p


def _or_pair(sizes):
    """Standard PWOR pair over the canonical alphabet with the given
    interior block sizes, in order."""
    n = 2 + sum(sizes)
    letters = list(canonical_alphabet(n))
    a, z = letters[0], letters[-1]
    pool = iter(letters[1:-1])
    blocks = [tuple(next(pool) for _ in range(s)) for s in sizes]
    top = (a,) + tuple(x for b in blocks for x in b) + (z,)
    bot = (z,) + tuple(x for b in blocks for x in reversed(b)) + (a,)
    return Pair(top, bot)


def _criterion_1(cap):
    """Right moves preserve S, M, P; all four moves preserve P and ARF."""
    checked = 0
    for n in range(2, min(6, cap) + 1):
        for p in _irreducible_pairs(n):
            s0, m0, p0, a0 = s_map(p), m_value(p), p_list(p), arf_count(p)
            for mv in (R0, R1):
                q = apply_move(p, mv)
                if s_map(q) != s0 or m_value(q) != m0 or p_list(q) != p0:
                    return False, "right move broke S/M/P at %s" % format_pair(p)
            for mv in (R0, R1, L0, L1):
                q = apply_move(p, mv)
                if p_list(q) != p0 or arf_count(q) != a0:
                    return False, "move %s broke P/ARF at %s" % (mv, format_pair(p))
            checked += 1
    return True, "%d pairs, exact equality" % checked


def _criterion_2(cap):
    """Every class has a standard pair, reached within n-2 cycles."""
    checked = 0
    for n in range(2, min(7, cap) + 1):
        for p in _irreducible_pairs(n):
            q, path = to_standard(p)
            if not is_standard(q) or path.cycle_length() > max(n - 2, 0):
                return False, "bound broken at %s" % format_pair(p)
            checked += 1
    return True, "%d pairs, cycle length <= n-2" % checked


def _distance_to_standard(p):
    from .moves import _cycle_neighbors

    if is_standard(p):
        return 0
    seen = {p}
    frontier = deque([(p, 0)])
    while frontier:
        cur, d = frontier.popleft()
        for nxt in _cycle_neighbors(cur):
            if is_standard(nxt):
                return d + 1
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, d + 1))
    raise AssertionError("no standard pair reachable from %s" % format_pair(p))


def _no_irreducible_single_restriction(p):
    boundary = {p.top[0], p.top[-1], p.bottom[0], p.bottom[-1]}
    for b in p.alphabet - boundary:
        if is_irreducible(restrict(p, p.alphabet - {b})):
            return False
    return True


def _criterion_3(cap):
    """The three farthest-from-standard conditions coincide."""
    bad = []
    for n in range(4, min(6, cap) + 1):
        for p in _irreducible_pairs(n):
            c1 = _distance_to_standard(p) == n - 2
            c2 = _no_irreducible_single_restriction(p)
            c3 = is_star(p) is not None
            if not (c1 == c2 == c3):
                bad.append((format_pair(p), c1, c2, c3))
    if bad:
        return False, "%d mismatch(es), first: %s (distance=%s, no-restriction=%s, closed-form=%s)" % (
            (len(bad),) + bad[0]
        )
    return True, "distance / restriction / closed-form conditions agree"


def _class_index(n, scope="class"):
    """pair -> class id over all irreducible pairs with identity top row."""
    index = {}
    nclasses = 0
    for p in _irreducible_pairs(n):
        if p in index:
            continue
        for q in enumerate_class(p, scope):
            index[q] = nclasses
        nclasses += 1
    return index, nclasses


def _criterion_4(cap):
    """to_pwor lands in the same labeled class."""
    checked = 0
    for n in range(2, min(7, cap) + 1):
        index, _ = _class_index(n)
        for p in _irreducible_pairs(n):
            q, seq = to_pwor(p)
            if is_pwor(q) is None or index.get(q) != index[p]:
                return False, "to_pwor left the class at %s" % format_pair(p)
            st, _ = to_standard(p)
            if apply_switches(st, seq) != q:
                return False, "switch replay mismatch at %s" % format_pair(p)
            checked += 1
    return True, "%d pairs normalized in class" % checked


def _partition_vs_signature(n, scope):
    """The BFS partition of irreducible one-row permutations must equal the
    partition by classifying signature."""
    assigned = {}
    nclasses = 0
    for perm in permutations(range(1, n + 1)):
        if perm in assigned:
            continue
        p = from_one_row(perm)
        if not is_irreducible(p):
            continue
        for img in {monodromy(q) for q in enumerate_class(p, scope)}:
            assigned[img] = nclasses
        nclasses += 1
    by_class = {}
    for perm, cid in assigned.items():
        p = from_one_row(perm)
        _, tag, _ = normalize_type(p)
        key = (tag, p_list(p)) + (() if scope == "extended" else (m_value(p),))
        by_class.setdefault(cid, set()).add(key)
    keys = [ks for ks in by_class.values()]
    if any(len(ks) > 1 for ks in keys):
        return False, "signature not constant on a class at n=%d" % n
    flat = [next(iter(ks)) for ks in keys]
    if len(set(flat)) != len(flat):
        return False, "two classes share a signature at n=%d" % n
    return True, "%d classes separated" % nclasses


def _criterion_5(cap):
    total = 0
    for n in range(2, min(7, cap) + 1):
        ok, detail = _partition_vs_signature(n, "class")
        if not ok:
            return False, detail
        total += int(detail.split()[0])
    return True, "(Type, P, M) matches the BFS partition, %d classes" % total


def _criterion_6(cap):
    total = 0
    for n in range(2, min(6, cap) + 1):
        ok, detail = _partition_vs_signature(n, "extended")
        if not ok:
            return False, detail
        total += int(detail.split()[0])
    return True, "(Type, P) matches the extended partition, %d classes" % total


def _criterion_7(cap):
    counts = [0, 0]
    for scope, bound in (("class", 7), ("extended", 6)):
        for n in range(2, min(bound, cap) + 1):
            seen = set()
            for p in _irreducible_pairs(n):
                if monodromy(p) in seen:
                    continue
                closure = enumerate_class(p, scope)
                seen |= {monodromy(q) for q in closure}
                if not switch_graph_connected(closure, scope):
                    return False, "switch graph disconnected (%s) at %s" % (
                        scope,
                        format_pair(p),
                    )
                counts[scope == "extended"] += 1
    return True, "%d class / %d extended switch graphs connected" % tuple(counts)


def _block_compositions(total, parts=(1, 2, 4, 5)):
    if total == 0:
        yield ()
        return
    for s in parts:
        if s <= total:
            for rest in _block_compositions(total - s, parts):
                yield (s,) + rest


def _criterion_8(cap):
    checked = 0
    nmax = 16 if cap >= 7 else 2 + 2 * cap
    for interior in range(0, nmax - 1):
        for sizes in _block_compositions(interior):
            p = _or_pair(sizes)
            want = arf_by_blocks(
                sizes.count(1), sizes.count(2), sizes.count(4), sizes.count(5)
            )
            if arf_count(p) != want:
                return False, "ARF formula broken on blocks %s" % (sizes,)
            checked += 1
    anchors = (arf_by_blocks(0, 0, 0, 0), arf_by_blocks(0, 1, 0, 0), arf_by_blocks(0, 0, 1, 0))
    if anchors != (3, 10, 28):
        return False, "anchor values drifted: %s" % (anchors,)
    return True, "%d block pairs, formula exact (anchors 3, 10, 28)" % checked


def _criterion_9(cap):
    checked = 0
    nmax = 16 if cap >= 7 else 10
    for n1 in range(0, 4):
        for n2 in range(0, 6):
            if 2 + n1 + 2 * n2 + 5 > nmax:
                continue
            ones = [1] * n1
            q4 = _or_pair([4] + [2] * n2 + ones)
            p4 = _or_pair([2, 2] + [2] * n2 + ones)
            if p_list(q4) != p_list(p4):
                return False, "T4 pairing lost P at N1=%d N2=%d" % (n1, n2)
            if arf_count(p4) - arf_count(q4) != 2 ** (n1 + n2 + 3):
                return False, "T2/T4 ARF gap wrong at N1=%d N2=%d" % (n1, n2)
            q5 = _or_pair([5] + [2] * n2 + ones)
            p5 = _or_pair([2, 1, 2] + [2] * n2 + ones)
            if p_list(q5) != p_list(p5):
                return False, "T5 pairing lost P at N1=%d N2=%d" % (n1, n2)
            if arf_count(p5) - arf_count(q5) != 2 ** (n1 + n2 + 4):
                return False, "T2/T5 ARF gap wrong at N1=%d N2=%d" % (n1, n2)
            checked += 1
    return True, "%d (N1, N2) settings, both gaps exact" % checked


def _criterion_10(cap):
    for n in range(2, min(8, cap) + 1):
        p = _or_pair([n - 2])
        closure = enumerate_class(p)
        standard = sum(1 for q in closure if is_standard(q))
        if standard != 1:
            return False, "%d standard pairs in the order-reversing class, n=%d" % (
                standard,
                n,
            )
    return True, "order-reversing classes hold exactly one standard pair"


def _criterion_11(cap, seed=20210908):
    from . import catalog

    rng = random.Random(seed)
    count = 0
    for move_id in catalog.MOVE_IDS:
        st, sb, _, _, _ = catalog.move_pattern(move_id)
        k = len(st)
        for _ in range(20):
            names = list(canonical_alphabet(k + 2 + rng.randrange(0, 12 - k - 2 + 1)))
            rng.shuffle(names)
            binding = dict(zip(st, names[: k]))
            filler = names[k + 2 :]
            a, z = names[k], names[k + 1]
            top = (a,) + tuple(binding[x] for x in st) + tuple(filler) + (z,)
            bot = (z,) + tuple(binding[x] for x in sb) + tuple(reversed(filler)) + (a,)
            catalog.apply_named_move(Pair(top, bot), catalog.NamedMove(move_id, binding))
            count += 1
    def pairrev(u):
        return tuple(x for i in range(0, len(u), 2) for x in (u[i + 1], u[i]))

    def fresh(k):
        names = list(canonical_alphabet(k))
        rng.shuffle(names)
        return names

    for _ in range(20):
        m = rng.randrange(0, 4)
        w = fresh(2 * m + 4)
        a, b1, b2, z = w[0], w[1], w[2], w[-1]
        u = tuple(w[3:-1])
        src = Pair((a, b1, b2) + u + (z,), (z, b2) + pairrev(u) + (b1, a))
        catalog.cor_abU_bUa(src, m)
        src = Pair((a, b1, b2) + u + (z,), (z,) + pairrev(u) + (b2, b1, a))
        catalog.cor_abU_Uba(src, m)
        sizes = [2] * rng.randrange(0, 3) + [4] + [2] * rng.randrange(0, 2)
        catalog.cor_4blocks_left(_or_pair(sizes))
        k = rng.randrange(1, 4)
        w = fresh(2 * k + 4)
        a, b1, b2, z = w[0], w[1], w[-2], w[-1]
        u = tuple(w[2:-2])
        src = Pair((a, b1) + u + (b2, z), (z,) + pairrev(u) + (b2, b1, a))
        catalog.cor_aUb_Uba(src, k)
        w = fresh(2 * m + 5)
        a, b1, b2, b3, z = w[0], w[1], w[2], w[-2], w[-1]
        u = tuple(w[3:-2])
        src = Pair((a, b1, b2) + u + (b3, z), (z, b3, b2) + pairrev(u) + (b1, a))
        catalog.cor_abUc_cbUa(src, m)
        w = fresh(2 * m + 5)
        a, b1, b2, b3, z = w[0], w[1], w[2], w[-2], w[-1]
        u = tuple(w[3:-2])
        src = Pair((a, b1, b2, b3) + u + (z,), (z, b3) + pairrev(u) + (b2, b1, a))
        catalog.cor_abcU_cUba(src, m)
        k2 = rng.randrange(0, 4 - m)  # keeps the total size at 12 or less
        w = fresh(2 * m + 2 * k2 + 5)
        a, b1, b2, z = w[0], w[1], w[2], w[-1]
        u = tuple(w[3 : 3 + 2 * m])
        b3 = w[3 + 2 * m]
        v = tuple(w[4 + 2 * m : -1])
        src = Pair(
            (a, b1, b2) + u + (b3,) + v + (z,),
            (z,) + pairrev(u) + (b3,) + pairrev(v) + (b2, b1, a),
        )
        catalog.cor_abUcV_UcVba(src, m, k2)
        count += 7
    return True, "%d catalog instances replayed to their targets" % count


def _criterion_12(cap):
    expected = []
    for n in range(2, min(7, cap) + 1):
        brute = irreducible_count(n)
        covered = sum(r.size for r in class_census(n))
        if brute != covered:
            return False, "census covers %d of %d at n=%d" % (covered, brute, n)
        expected.append(brute)
    return True, "irreducible counts %s covered exactly" % expected


def _criterion_13(cap):
    checked = 0
    for n in range(4, min(7, cap) + 1):
        seen = set()
        for p in _irreducible_pairs(n):
            if monodromy(p) in seen:
                continue
            seen |= {monodromy(q) for q in enumerate_class(p)}
            out, tag = find_good_or_degenerate(p)
            if tag == "good" and not is_good(out):
                return False, "bad good witness at %s" % format_pair(p)
            if tag == "degenerate" and not is_degenerate_star(out):
                return False, "bad degenerate witness at %s" % format_pair(p)
            checked += 1
    return True, "%d classes produced valid witnesses" % checked


ACCEPTANCE = (
    ("move invariance of S/M/P/ARF", _criterion_1),
    ("standard pair within n-2 cycles", _criterion_2),
    ("farthest-from-standard equivalence", _criterion_3),
    ("piece-wise order reversing normalization", _criterion_4),
    ("class partition matches (Type, P, M)", _criterion_5),
    ("extended partition matches (Type, P)", _criterion_6),
    ("switch graph connectivity", _criterion_7),
    ("ARF block-count formula", _criterion_8),
    ("ARF separates the Types", _criterion_9),
    ("one standard pair in order-reversing classes", _criterion_10),
    ("catalog moves replay to their targets", _criterion_11),
    ("census covers all irreducible permutations", _criterion_12),
    ("good/degenerate witnesses in every class", _criterion_13),
)


def run_acceptance(cap=7, out=None):
    """Run the full suite with exhaustive bounds capped at ``cap``; returns
    the number of failures."""
    if out is None:
        out = sys.stdout
    failures = 0
    for i, (name, func) in enumerate(ACCEPTANCE, 1):
        ok, detail = func(cap)
        out.write("%2d %-46s %s (%s)\n" % (i, name, "pass" if ok else "FAIL", detail))
        failures += 0 if ok else 1
    return failures


# ---------------------------------------------------------------------------
# subcommands


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data))
    else:
        print(text)


def _cmd_invariants(args):
    p = parse_pair(args.pair)
    if not is_irreducible(p):
        raise ValueError("pair is not irreducible")
    s = s_map(p)
    s_cyc = cycles(s)
    data = {
        "s_cycles": [list(c) for c in s_cyc],
        "m": m_value(p),
        "p_list": list(p_list(p)),
        "crossing_pairs": sorted(
            [sorted(pair) for pair in quad_form(p).crossing]
        ),
    }
    if p.n <= args.max_arf_n:
        data["arf"] = str(arf_count(p))
    lines = [
        "S cycles: " + " ".join("(%s)" % " ".join(c) for c in s_cyc),
        "M: %d" % data["m"],
        "P: %s" % (data["p_list"],),
        "crossing pairs: " + " ".join("{%s,%s}" % tuple(c) for c in data["crossing_pairs"]),
    ]
    if "arf" in data:
        lines.append("ARF count: %s" % data["arf"])
    _emit(args, data, "\n".join(lines))
    return 0


def _cmd_classify(args):
    p = parse_pair(args.pair)
    _, tag, _ = normalize_type(p)
    data = {
        "type": tag,
        "p_list": list(p_list(p)),
        "m": m_value(p),
        "canonical": format_pair(canonical_form(p)),
        "canonical_extended": format_pair(canonical_form_extended(p)),
    }
    _emit(
        args,
        data,
        "Type: %s\nP: %s\nM: %d\ncanonical: %s\ncanonical (extended): %s"
        % (tag, data["p_list"], data["m"], data["canonical"], data["canonical_extended"]),
    )
    return 0


def _cmd_normalize(args):
    p = parse_pair(args.pair)
    st, path = to_standard(p)
    q, tag, seq = normalize_type(p)
    assert apply_path(p, path) == st and apply_switches(st, seq) == q
    data = {
        "standard": format_pair(st),
        "move_path": format_path(path),
        "switches": format_switches(seq),
        "normalized": format_pair(q),
        "type": tag,
    }
    _emit(
        args,
        data,
        "standard: %s\nmove path: %s\nswitches: %s\nnormalized: %s\nType: %s"
        % (
            data["standard"],
            data["move_path"] or "(empty)",
            data["switches"] or "(none)",
            data["normalized"],
            tag,
        ),
    )
    return 0


def _cmd_same_class(args):
    p, q = parse_pair(args.pair), parse_pair(args.pair2)
    scope = "extended" if args.extended else "class"
    ans = same_class(p, q, scope)
    _emit(args, {"same_class": ans, "scope": scope}, "true" if ans else "false")
    return 0


def _connect_bfs(p, q, scope):
    gens = (R0, R1) if scope == "class" else (R0, R1, L0, L1)
    if p == q:
        return Path(())
    seen = {p: None}
    frontier = deque([p])
    while frontier:
        cur = frontier.popleft()
        for g in gens:
            nxt = apply_move(cur, g)
            if nxt in seen:
                continue
            seen[nxt] = (cur, g)
            if nxt == q:
                moves = []
                node = nxt
                while seen[node] is not None:
                    node, g = seen[node]
                    moves.append(g)
                moves.reverse()
                return Path.from_runs([(m, 1) for m in moves])
            frontier.append(nxt)
    return None


def _cmd_connect(args):
    p, q = parse_pair(args.pair), parse_pair(args.pair2)
    scope = "extended" if args.extended else "class"
    if not is_irreducible(p) or not is_irreducible(q):
        raise ValueError("both pairs must be irreducible")
    path = _connect_bfs(p, q, scope)
    if path is None:
        print("not connected", file=sys.stderr)
        return 2
    if apply_path(p, path) != q:
        print("witness failed replay", file=sys.stderr)
        return 2
    _emit(args, {"path": format_path(path)}, format_path(path) or "(empty)")
    return 0


def _cmd_enumerate(args):
    scope = "extended" if args.extended else "class"
    records = class_census(args.n, scope)
    lines = list(census_jsonl(records, args.n, scope))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print("%d classes written to %s" % (len(records), args.out))
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_verify(args):
    failures = run_acceptance(cap=args.n)
    return 2 if failures else 0


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="rauzy",
        description="Combinatorics of Rauzy classes: invariants, "
        "classification, normalization, enumeration.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine output")

    sp = sub.add_parser("invariants", help="S, M, P, crossing pairs, ARF of a pair")
    sp.add_argument("pair")
    sp.add_argument("--max-arf-n", type=int, default=20, metavar="N",
                    help="skip the 2^n ARF enumeration above this size")
    common(sp)
    sp.set_defaults(func=_cmd_invariants)

    sp = sub.add_parser("classify", help="Type, P, M and the canonical forms")
    sp.add_argument("pair")
    common(sp)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("normalize", help="standard + typed pair with full paths")
    sp.add_argument("pair")
    common(sp)
    sp.set_defaults(func=_cmd_normalize)

    sp = sub.add_parser("same-class", help="class equality through (Type, P[, M])")
    sp.add_argument("pair")
    sp.add_argument("pair2")
    sp.add_argument("--extended", action="store_true")
    common(sp)
    sp.set_defaults(func=_cmd_same_class)

    sp = sub.add_parser(
        "connect",
        help="a Rauzy path witness between two pairs (BFS over single "
        "moves; cycle-minimal, not necessarily move-minimal)",
    )
    sp.add_argument("pair")
    sp.add_argument("pair2")
    sp.add_argument("--extended", action="store_true")
    common(sp)
    sp.set_defaults(func=_cmd_connect)

    sp = sub.add_parser("enumerate", help="census of classes at size n (JSON lines)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--extended", action="store_true")
    sp.add_argument("--out", metavar="FILE")
    common(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("verify", help="run the acceptance suite up to size n")
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=20210908)
    common(sp)
    sp.set_defaults(func=_cmd_verify)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
