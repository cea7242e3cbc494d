r"""BFS closures, the class census and switch-graph connectivity."""
import json

import pytest

from rauzy.core import parse_pair, is_irreducible
from rauzy.census import (
    enumerate_class,
    class_census,
    census_jsonl,
    switch_graph_connected,
    irreducible_count,
)


def test_enumerate_class():
    p = parse_pair("a b c / c b a")
    closure = enumerate_class(p)
    assert closure == {
        p,
        parse_pair("a b c / c a b"),
        parse_pair("a c b / c b a"),
    }
    assert closure <= enumerate_class(p, "extended")
    assert all(is_irreducible(q) for q in closure)
    with pytest.raises(ValueError):
        enumerate_class(parse_pair("a b c / a c b"))


def test_irreducible_count():
    assert [irreducible_count(n) for n in range(2, 8)] == [1, 3, 13, 71, 461, 3447]


def test_class_census():
    records = class_census(3)
    assert len(records) == 1 and records[0].size == 3
    for n in range(2, 7):
        records = class_census(n)
        assert sum(r.size for r in records) == irreducible_count(n)
        assert all(r.standard_count >= 1 for r in records)
    with pytest.raises(ValueError):
        class_census(1)


def test_extended_census_coarsens():
    for n in range(2, 6):
        assert len(class_census(n, "extended")) <= len(class_census(n))


def test_census_jsonl():
    records = class_census(4)
    lines = list(census_jsonl(records, 4, "class"))
    assert len(lines) == len(records)
    row = json.loads(lines[0])
    assert row["n"] == 4 and row["scope"] == "class"
    assert row["size"] >= 1 and row["standard"] >= 1
    assert isinstance(row["p"], list)


def test_switch_graph_connected():
    p = parse_pair("a b c d / d c b a")
    assert switch_graph_connected(enumerate_class(p))
    assert switch_graph_connected(enumerate_class(p, "extended"), "extended")
    with pytest.raises(ValueError):
        switch_graph_connected({p})  # not closed under the moves
