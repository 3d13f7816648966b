import random

import pytest
from hypothesis import given, settings, strategies as st

from opcat import halfedge as he
from opcat import operads as O
from opcat.errors import Disconnected, ParseError


def theta():
    return he.build([3, 3], [((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2))], [])


def test_corolla_basics():
    c = he.corolla(4)
    assert c.n_vertices == 1 and c.n_leaves == 4 and c.n_edges == 0
    assert he.betti(c) == 0


def test_betti_of_loops():
    assert he.betti(theta()) == 2
    loop = he.build([3], [((0, 1), (0, 2))], [(0, 0)])
    assert he.betti(loop) == 1


def test_invalid_leaf_order_rejected():
    with pytest.raises(ValueError):
        he.Graph((0,), (2,), (0, 1), (0,))


def test_relabel_roundtrip():
    g = he.build([2, 3, 2], [((0, 1), (1, 0)), ((1, 2), (2, 0))], [(0, 0), (1, 1), (2, 1)])
    h = he.relabel(g, [2, 0, 1])
    assert h.degrees == (2, 2, 3)
    back = he.relabel(h, [1, 2, 0])
    assert back == g


def test_insert_corollas_is_identity():
    g = he.build([2, 3], [((0, 1), (1, 0))], [(0, 0), (1, 1), (1, 2)])
    assert he.insert(g, [he.corolla(2), he.corolla(3)]) == g


def test_dfs_order_of_swapped_tree():
    # vertex 0 hangs above vertex 1; depth-first search starts at the root leaf
    g = he.build([2, 2], [((0, 0), (1, 1))], [(1, 0), (0, 1)])
    assert he.dfs_order(g) == [1, 0]


def test_dfs_disconnected_raises():
    g = he.build([1, 1], [], [(0, 0), (1, 0)])
    with pytest.raises(Disconnected):
        he.dfs(g)


def test_canonical_form_invariant_under_relabelling():
    rng = random.Random(0)
    P = O.mOp()
    for _ in range(40):
        g = O.random_operation(rng, P, 3, 4)
        order = list(range(g.n_vertices))
        rng.shuffle(order)
        a, _ = he.canonical_form(g)
        b, _ = he.canonical_form(he.relabel(g, order))
        assert a == b
        assert he.is_isomorphic(g, he.relabel(g, order))


def test_canonical_form_respects_leaf_order():
    g = he.build([3], [], [(0, 0), (0, 1), (0, 2)])
    h = g.with_leaves((0, 2, 1))
    assert not he.is_isomorphic(g, h)


def test_json_roundtrip_and_errors():
    g = theta()
    assert he.from_json(he.to_json(g)) == g
    with pytest.raises(ParseError):
        he.from_json({"degrees": [1]})


def test_dot_export_mentions_every_vertex():
    dot = he.to_dot(theta())
    assert dot.count("v0") >= 1 and dot.count("v1") >= 1


def test_enumerate_graphs_small_counts():
    # single vertex of degree 2: the leaf order is the only freedom
    assert len(list(he.enumerate_graphs(1, 2, 0))) == 2
    for g in he.enumerate_graphs(2, 1, 1):
        assert g.is_connected() and g.n_leaves == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_random_operations_are_connected(seed, n):
    g = O.random_operation(random.Random(seed), O.mOpGN(), (2, 1), n)
    assert g.is_connected()
    assert he.from_json(he.to_json(g)) == g
