import pytest

from opcat import catconstruct as C
from opcat import coloring as K
from opcat import halfedge as he
from opcat import operads as O
from opcat.errors import InvalidColoring, NoLift

Z = C.TwCategory(O.mOpGN(), "Z")


def test_stumps_are_pruned_repeatedly():
    # root leaf, then a chain of two genus-0 vertices ending in a stump
    g = he.build([2, 2, 1], [((0, 1), (1, 0)), ((1, 1), (2, 0))], [(0, 0)])
    gone_v, gone_h = K.pruned(g)
    assert gone_v == {1, 2} and len(gone_h) == 4


def test_genus_vertices_survive_pruning():
    g = he.build([2, 1], [((0, 1), (1, 0))], [(0, 0)], genus=[0, 1])
    assert K.pruned(g) == (set(), set())


def test_degree_two_runs_merge():
    g = he.build([2, 2, 2], [((0, 1), (1, 0)), ((1, 1), (2, 0))], [(0, 0), (2, 1)],
                 genus=[1, 0, 1])
    els = K.elements(g)
    assert any(len(e) == 4 for e in els)


def test_validation_conditions():
    g = he.build([2, 2], [((0, 1), (1, 0))], [(0, 0), (1, 1)], genus=[1, 1])
    cg = K.greedy_coloring(g)
    assert not K.color_validate(cg)
    assert {c for c, _ in K.color_validate(K.ColoredGraph(g, (1, 2, 3, 1)))} >= {1}
    big = K.color_bound(g) + 1
    assert 4 in {c for c, _ in K.color_validate(K.ColoredGraph(g, (big, 1, 1, 2)))}


def test_negative_colour_rejected():
    with pytest.raises(InvalidColoring):
        K.ColoredGraph(he.corolla(2), (0, -1))


def test_bound_formula():
    g = he.build([3, 3], [((0, 1), (1, 1)), ((0, 2), (1, 2))], [(0, 0), (1, 0)],
                 genus=[2, 0])
    assert K.color_bound(g) == 9 * (2 + 1 + 2)
    assert K.color_bound(g, 4) == 4 * 5


def _morphisms(colors, max_vertices, bound):
    for c in colors:
        for nv in range(1, max_vertices + 1):
            for x in Z.objects(c, nv):
                yield from Z.out(x, bound)


def test_lift_unique_small():
    n = 0
    for f in _morphisms([(1, 0), (1, 1), (2, 0)], 2, 2):
        q = K.greedy_coloring(f.target)
        lift = K.color_lift(f, q)
        assert not K.color_validate(lift)
        assert K.count_compatible(f, q) == 1
        assert K.color_bound(f.source) == K.color_bound(f.target)
        n += 1
    assert n > 10


def test_lift_rejects_foreign_target():
    f = next(_morphisms([(1, 1)], 1, 2))
    with pytest.raises(InvalidColoring):
        K.color_lift(f, K.greedy_coloring(he.corolla(5)))


def test_lift_reports_invalid_pullback():
    f = next(f for f in _morphisms([(2, 0)], 2, 2) if f.target.n_vertices == 2)
    q = K.greedy_coloring(f.target)
    col = list(q.col)
    col[0] = K.color_bound(f.target) + 1
    with pytest.raises(NoLift):
        K.color_lift(f, K.ColoredGraph(f.target, tuple(col)))
