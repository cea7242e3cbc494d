r"""The four Rauzy moves, paths, cycles and standard pairs."""
import pytest

from rauzy.core import parse_pair, inverse, h_map, is_irreducible
from rauzy.moves import (
    R0,
    R1,
    L0,
    L1,
    parse_path,
    format_path,
    apply_move,
    apply_path,
    cycle_vertices,
    is_standard,
    to_standard,
    cycle_distance,
    Path,
)
from test_core import irreducible_pairs


def test_single_moves():
    p = parse_pair("a b c / c b a")
    assert apply_move(p, R0) == parse_pair("a b c / c a b")
    assert apply_move(p, R1) == parse_pair("a c b / c b a")
    q = parse_pair("a b z / z b a")
    assert apply_move(q, L1) == parse_pair("b a z / z b a")


def test_moves_preserve_irreducibility():
    for n in range(2, 7):
        for p in irreducible_pairs(n):
            for m in (R0, R1, L0, L1):
                assert is_irreducible(apply_move(p, m))


def test_path_parse_format():
    text = "r0^2 r1 r0 r1"
    path = parse_path(text)
    assert format_path(path) == text
    assert path.cycle_length() == 4
    assert len(path) == 5
    assert format_path(parse_path("")) == ""


def test_apply_path():
    p = parse_pair("a b c z / z b c a")
    assert apply_path(p, parse_path("")) == p
    assert apply_path(p, parse_path("r0^2")) == parse_pair("a b c z / z c a b")


def test_cycle_vertices():
    p = parse_pair("a b c z / z b c a")
    verts = cycle_vertices(p, parse_path("r0^2 r1 r0 r1"))
    assert len(verts) == 5
    assert verts[0] == p
    assert verts[-1] == parse_pair("a c b z / z c b a")


def test_finite_order():
    for n in range(2, 6):
        for p in irreducible_pairs(n):
            for m in (R0, R1):
                q = p
                for k in range(1, n + 1):
                    q = apply_move(q, m)
                    if q == p:
                        break
                assert q == p


def test_inverse_relation():
    # right-eps(p) = inverse(right-(1-eps)(inverse(p)))
    for n in range(2, 6):
        for p in irreducible_pairs(n):
            assert apply_move(p, R0) == inverse(apply_move(inverse(p), R1))
            assert apply_move(p, R1) == inverse(apply_move(inverse(p), R0))


def test_left_right_conjugacy():
    # left-eps(p) = h(right-eps(h(p)))
    for n in range(2, 6):
        for p in irreducible_pairs(n):
            assert apply_move(p, L0) == h_map(apply_move(h_map(p), R0))
            assert apply_move(p, L1) == h_map(apply_move(h_map(p), R1))


def test_is_standard():
    assert is_standard(parse_pair("a b z / z b a"))
    assert not is_standard(parse_pair("a b c / c a b"))


def test_to_standard():
    p = parse_pair("a b z / z b a")
    q, path = to_standard(p)
    assert q == p and len(path) == 0
    p = parse_pair("a b c / c a b")
    q, path = to_standard(p)
    assert q == parse_pair("a b c / c b a")
    assert format_path(path) == "r0"


def test_to_standard_cycle_bound():
    for n in range(2, 7):
        for p in irreducible_pairs(n):
            q, path = to_standard(p)
            assert is_standard(q)
            assert apply_path(p, path) == q
            assert path.cycle_length() <= n - 2 or (n == 2 and path.cycle_length() == 0)


def test_cycle_distance():
    p = parse_pair("a b c / c b a")
    assert cycle_distance(p, p) == 0
    assert cycle_distance(parse_pair("a b c / c a b"), p) == 1
    with pytest.raises(ValueError):
        cycle_distance(p, parse_pair("a b / b a"))
