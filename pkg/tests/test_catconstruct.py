import itertools
import random
from math import comb

import pytest

from opcat import catconstruct as C
from opcat import halfedge as he
from opcat import operads as O
from opcat.category import associativity_violations
from opcat.errors import ColorMismatch, IndexOutOfRange, Mismatch
from opcat.finsets import FinMap, all_maps, is_surjective
from opcat.graphhom import graph_hom


@pytest.fixture
def grafting():
    F = O.FreeOperad("free", generators=(("p", 2), ("q1", 2), ("q2", 1), ("r1", 2),
                                         ("r2", 0), ("r3", 1)))
    g = {n: F.gen(n) for n in ("p", "q1", "q2", "r1", "r2", "r3")}
    f = C.TwoLevelTree(F, g["p"], (g["q1"], g["q2"]), (1, 3, 2))
    h = C.TwoLevelTree(F, f.source, (g["r1"], g["r2"], g["r3"]), (2, 3, 1))
    return F, g, f, h


def test_grafting_source(grafting):
    F, g, f, _ = grafting
    expected = F.act(F.compose(F.compose(g["p"], 2, g["q2"]), 1, g["q1"]), (1, 3, 2))
    assert C.source_of2(f) == expected


def test_grafting_composite(grafting):
    F, g, f, h = grafting
    fh = C.compose2(f, h)
    assert fh.target == g["p"]
    assert fh.uppers[0] == F.act(F.compose(F.compose(g["q1"], 2, g["r3"]), 1, g["r1"]), (2, 3, 1))
    assert fh.uppers[1] == F.compose(g["q2"], 1, g["r2"])
    assert fh.leaf_idx == (1, 2, 3)
    assert fh.source == h.source


def test_grafting_cardinality(grafting):
    _, _, f, _ = grafting
    card = C.cardinality(f)
    assert card.fiber(1) == (1, 3) and card.fiber(2) == (2,)


def test_mismatch_and_index_errors(grafting):
    F, g, f, h = grafting
    with pytest.raises(Mismatch):
        C.compose2(h, f)
    with pytest.raises(IndexOutOfRange):
        C.fiber(h, f, 3)


def test_three_level_tree_evaluates_to_arity_five():
    P = O.uAs()
    f = C.ThreeLevelTree(P, (1, 2, 3), (1, 2, 3), ((1, 2), (), (1,)), (3, 5, 1, 2, 4))
    assert P.arity(f.source) == 3 and P.arity(f.target) == 5


def test_identity_trees():
    for P in (O.uCom(), O.uAs()):
        for p in [q for k in range(4) for q in P.operations(0, k)]:
            i2 = C.identity2(P, p)
            assert i2.source == p
            assert C.cardinality(i2) == FinMap(P.arity(p), P.arity(p),
                                               tuple(range(1, P.arity(p) + 1)))


def test_source_arity_in_c_ucom():
    P = O.uCom()
    f = C.TwoLevelTree(P, 3, (2, 0, 1), (1, 3, 2))
    assert f.source == 3


def test_hom_counts_c_ucom_fa_oracle():
    cat = C.CCategory(O.uCom())
    for n in range(5):
        for m in range(5):
            assert len(cat.hom(n, m)) == sum(1 for _ in all_maps(n, m))


def test_nu_restricted_cardinality_is_surjective():
    cat = C.CCategory(O.Com())
    for n in range(1, 5):
        for m in range(1, 4):
            for f in cat.hom(n, m):
                assert is_surjective(C.cardinality(f))


def monotone_endpoint_maps(src: int, dst: int) -> int:
    """Order-preserving maps between chains fixing both ends, by brute force."""
    count = 0
    for t in itertools.product(range(dst), repeat=src):
        if all(a <= b for a, b in zip(t, t[1:])) and t[0] == 0 and t[-1] == dst - 1:
            count += 1
    return count


def test_tw_uas_counts_monotone_oracle():
    P = O.uAs()
    T = C.TwCategory(P, "Tw")
    for a in range(4):
        for b in range(4):
            n = len(T.hom(P.standard(a), P.standard(b)))
            assert n == monotone_endpoint_maps(b + 2, a + 2) == comb(a + b + 1, a + 1)


def test_exhaustive_associativity_small_table_operads():
    for P in (O.uCom(), O.uAs()):
        T = C.TwCategory(P, "Cop")
        objs = [p for k in range(3) for p in P.operations(0, k)]
        ms = [f for x in objs for f in T.out(x, 2)]
        n, bad = associativity_violations(T, ms)
        assert n > 0 and bad == []


def test_identity_laws_tw():
    rng = random.Random(3)
    P = O.uAs()
    T = C.TwCategory(P, "Tw")
    for _ in range(100):
        x = P.standard(rng.randint(0, 3))
        f = C.random_morphism(rng, T, x, 2)
        assert C.compose3(C.identity3(P, f.target), f) == f
        assert C.compose3(f, C.identity3(P, x)) == f


def test_cardinality_is_functorial():
    cat = C.CCategory(O.uCom())
    for a in range(4):
        for f in cat.into(a, 4):
            for g in cat.into(f.source, 4):
                fg = C.compose2(f, g)
                assert C.cardinality(fg) == C.cardinality(g).then(C.cardinality(f))


def test_fiber_axiom_on_chains():
    cat = C.CCategory(O.uCom())
    for a in range(3):
        for f in cat.into(a, 3):
            for g in cat.into(f.source, 3):
                fg = C.compose2(f, g)
                for h in cat.into(g.source, 3):
                    gh = C.compose2(g, h)
                    total = 0
                    for i in range(1, a + 1):
                        lhs = C.fiber(gh, f, i)
                        assert lhs == C.compose2(C.fiber(g, f, i), C.fiber(h, fg, i))
                        total += lhs.operad.arity(lhs.source)
                    assert total == h.source


def test_fiber_over_identity():
    P = O.uAs()
    cat = C.CCategory(P)
    for g in cat.into((2, 1), 3):
        f = C.identity2(P, g.target)
        for i in range(1, 3):
            fib = C.fiber(g, f, i)
            assert fib.uppers == (g.uppers[i - 1],)


def test_u_lift_roundtrip_and_uniqueness():
    for P in (O.uCom(), O.uAs()):
        T = C.TwCategory(P, "Tw")
        for n in range(3):
            for x in P.operations(0, n):
                for f in T.out(x, 3):
                    u = C.to_u(f)
                    assert C.lift_u(x, u) == f
                    assert u.target == C.colors_of(P, f.target)


def test_lift_u_colour_mismatch():
    P = O.uCom()
    u = C.to_u(C.identity3(P, 2))
    with pytest.raises(ColorMismatch):
        C.lift_u(3, u)


def test_json_roundtrip():
    P = O.sOp()
    rng = random.Random(1)
    T = C.TwCategory(P, "Tw")
    for _ in range(10):
        x = O.random_operation(rng, P, 3, 2)
        f = C.random_morphism(rng, T, x, 2, 2)
        assert C.morphism_from_json(P, f.to_json()) == f


def test_graph_associativity_random():
    rng = random.Random(5)
    for P, view in ((O.pOp(), "Cop"), (O.sOp(), "Tw")):
        T = C.TwCategory(P, view)
        for _ in range(60):
            x = O.random_operation(rng, P, rng.randint(1, 3), rng.randint(1, 2))
            f = C.random_morphism(rng, T, x, 1, 1)
            g = C.random_morphism(rng, T, f.target, 1, 1)
            h = C.random_morphism(rng, T, g.target, 0, 1)
            assert C.compose3(h, C.compose3(g, f)) == C.compose3(C.compose3(h, g), f)


def test_graph_hom_matches_enumeration():
    for P in (O.pOp(), O.sOp(), O.mOp()):
        T = C.TwCategory(P, "Cop")
        x = he.corolla(3)
        counts = {}
        for f in T.out(x, 3):
            counts[f.target] = counts.get(f.target, 0) + 1
        for y, c in counts.items():
            assert len(list(graph_hom(P, x, y))) == c


def test_graph_hom_with_self_loops():
    P = O.mOpGN()
    x = he.build([3], [((0, 1), (0, 2))], [(0, 0)])  # one vertex with a loop
    y = he.build([3, 2], [((0, 1), (1, 0)), ((0, 2), (1, 1))], [(0, 0)])
    homs = list(graph_hom(P, x, y))
    assert homs and all(f.target == y for f in homs)


def test_normal_forms():
    P = O.pOp()
    g = he.build([2, 2], [((0, 0), (1, 1))], [(1, 0), (0, 1)])
    rep, iso = C.normalize_d(g)
    assert he.dfs_order(rep) == [0, 1] and iso.source == g and iso.target == rep
    rep2, iso2 = C.normalize_d(rep)
    assert rep2 == rep and iso2 == C.identity3(P, rep)
    bad = he.build([2, 2], [((0, 1), (1, 1))], [(0, 0), (1, 0)])
    assert not C.is_z(bad)
    z, _ = C.to_z(bad)
    assert C.is_z(z)
