"""Edge colorings: verification, structural predicates, JSON wire format."""

import json

import pytest

from mc_lab.coloring import (
    EdgeColoring,
    classes_are_trees,
    coloring_from_json,
    coloring_to_json,
    has_no_redundant_class,
    is_simple,
    verify_mc,
)
from mc_lab.graph_core import complete_graph, cycle_graph, from_edges, path_graph

# cycle_graph(4).edges() is [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_coloring_basic_accounting():
    col = EdgeColoring(cycle_graph(4), [0, 0, 0, 1])
    assert col.color_count == 2
    assert col.waste == 2
    assert col.color_of((0, 1)) == 0
    assert col.color_of((3, 2)) == 1
    classes = col.classes()
    assert [c.color for c in classes] == [0, 1]
    assert classes[0].edges == ((0, 1), (0, 3), (1, 2))
    assert classes[0].is_nontrivial and not classes[1].is_nontrivial
    assert classes[0].waste == 2 and classes[1].waste == 0


def test_coloring_rejects_bad_color_lists():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError):
        EdgeColoring(c4, [0, 0, 0])  # wrong length
    with pytest.raises(ValueError):
        EdgeColoring(c4, [0, 2, 2, 3])  # gap in the ids
    with pytest.raises(ValueError):
        EdgeColoring(c4, [1, 1, 1, 2])  # does not start at 0


def test_verify_mc_accepts_spanning_class():
    col = EdgeColoring(cycle_graph(4), [0, 0, 0, 1])
    assert verify_mc(col) is None


def test_verify_mc_reports_first_disconnected_pair():
    # all-distinct colors leave every nonadjacent pair unjoined
    col = EdgeColoring(cycle_graph(4), [0, 1, 2, 3])
    assert verify_mc(col) == (0, 2)
    # path colored as two halves: ends 0 and 3 never share a color class
    col2 = EdgeColoring(path_graph(4), [0, 0, 1])
    assert verify_mc(col2) == (0, 3)


def test_verify_mc_survives_class_merging():
    # coarsening a passing coloring can only help connectivity
    col = EdgeColoring(cycle_graph(4), [0, 0, 0, 0])
    assert verify_mc(col) is None


def test_verify_mc_rainbow_complete_graph():
    k4 = complete_graph(4)
    assert verify_mc(EdgeColoring(k4, list(range(6)))) is None


def test_classes_are_trees():
    k3 = complete_graph(3)
    assert not classes_are_trees(EdgeColoring(k3, [0, 0, 0]))
    assert classes_are_trees(EdgeColoring(k3, [0, 0, 1]))
    assert classes_are_trees(EdgeColoring(cycle_graph(4), [0, 0, 0, 1]))


def test_is_simple_detects_two_shared_vertices():
    k4 = complete_graph(4)
    # classes {01,12} and {02,23} share vertices 0 and 2
    assert not is_simple(EdgeColoring(k4, [0, 1, 2, 0, 3, 1]))
    # C_6 paths {01,12} and {23,34} share only vertex 2
    c6 = cycle_graph(6)
    assert is_simple(EdgeColoring(c6, [0, 2, 0, 1, 1, 3]))
    # C_6 paths {01,12} and {34,45} are vertex disjoint
    assert is_simple(EdgeColoring(c6, [0, 2, 0, 3, 1, 1]))
    with pytest.raises(ValueError):
        is_simple(EdgeColoring(complete_graph(3), [0, 0, 0]))


def test_has_no_redundant_class():
    # a class spanning only a clique could be split apart for free
    k4 = complete_graph(4)
    spanning = EdgeColoring(k4, [0, 0, 0, 1, 2, 3])
    assert not has_no_redundant_class(spanning)
    assert has_no_redundant_class(EdgeColoring(k4, list(range(6))))
    c4 = EdgeColoring(cycle_graph(4), [0, 0, 0, 1])
    assert has_no_redundant_class(c4)


def test_json_round_trip():
    col = EdgeColoring(cycle_graph(4), [0, 0, 0, 1])
    text = coloring_to_json(col)
    assert isinstance(text, str)
    doc = json.loads(text)
    assert set(doc) == {"graph6", "edges", "colors"}
    assert coloring_from_json(text) == col
    assert coloring_from_json(doc) == col


def test_json_edge_order_is_free():
    col = EdgeColoring(path_graph(4), [0, 1, 0])
    doc = json.loads(coloring_to_json(col))
    doc["edges"].reverse()
    doc["colors"].reverse()
    assert coloring_from_json(doc) == col
    # endpoint order inside a pair is free too
    doc["edges"] = [[v, u] for u, v in doc["edges"]]
    assert coloring_from_json(doc) == col


def test_json_renumbers_sparse_color_ids():
    doc = {
        "graph6": "Cl",
        "edges": [[0, 1], [0, 3], [1, 2], [2, 3]],
        "colors": [5, 5, 5, 9],
    }
    col = coloring_from_json(doc)
    assert col.colors == (0, 0, 0, 1)


def test_json_errors():
    good = json.loads(coloring_to_json(EdgeColoring(cycle_graph(4), [0, 0, 0, 1])))
    missing = dict(good)
    del missing["colors"]
    with pytest.raises(ValueError):
        coloring_from_json(missing)
    short = dict(good, colors=good["colors"][:-1])
    with pytest.raises(ValueError):
        coloring_from_json(short)
    not_an_edge = dict(good, edges=[[0, 2]] + good["edges"][1:])
    with pytest.raises(ValueError):
        coloring_from_json(not_an_edge)
    doubled = dict(good, edges=[good["edges"][0]] + good["edges"][:-1])
    with pytest.raises(ValueError):
        coloring_from_json(doubled)
    bad_color = dict(good, colors=[0, 0, 0, -1])
    with pytest.raises(ValueError):
        coloring_from_json(bad_color)
    with pytest.raises(ValueError):
        coloring_from_json(json.dumps([1, 2, 3]))


def test_color_of_unknown_edge():
    col = EdgeColoring(path_graph(4), [0, 1, 2])
    with pytest.raises(KeyError):
        col.color_of((0, 3))
