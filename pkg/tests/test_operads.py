import itertools
import random

import pytest

from opcat import halfedge as he
from opcat import operads as O
from opcat.errors import BadPermutation, ColorMismatch, SlotOutOfRange


def test_permutation_action_is_a_left_action():
    P = O.uAs()
    p = (2, 3, 1)
    for s in itertools.permutations((1, 2, 3)):
        for t in itertools.permutations((1, 2, 3)):
            assert P.act(P.act(p, s), t) == P.act(p, O.perm_compose(t, s))


def test_bad_permutation():
    with pytest.raises(BadPermutation):
        O.uAs().act((1, 2), (1, 1))


def test_slot_out_of_range():
    with pytest.raises(SlotOutOfRange):
        O.uCom().compose(2, 3, 1)


def test_colour_mismatch_in_graph_operad():
    P = O.sOp()
    with pytest.raises(ColorMismatch):
        P.compose(he.corolla(3), 1, he.corolla(2))


def test_table_operad_composition():
    P = O.uAs()
    assert P.compose((1, 2), 1, (2, 1)) == (2, 1, 3)
    assert P.compose((2, 1), 2, (1, 2)) == (2, 3, 1)
    assert P.compose((1, 2), 2, ()) == (1,)
    assert O.uCom().compose(3, 2, 0) == 2


def test_nu_restriction():
    assert not O.Com().contains(0)
    assert O.uCom().contains(0)
    assert list(O.As().operations(0, 0)) == []
    assert O.by_name("nuuAs").nu


def test_sequential_axioms_table_operads():
    for P in (O.uCom(), O.uAs()):
        ops = [p for k in range(3) for p in P.operations(0, k)]
        for p, q, r in itertools.product(ops, repeat=3):
            for i in range(1, P.arity(p) + 1):
                for j in range(1, P.arity(q) + 1):
                    lhs = P.compose(p, i, P.compose(q, j, r))
                    rhs = P.compose(P.compose(p, i, q), i + j - 1, r)
                    assert lhs == rhs


def test_unit_and_equivariance_graph_operads():
    rng = random.Random(7)
    for P in (O.pOp(), O.sOp(), O.cOp(), O.mOp(), O.mOpGN()):
        for _ in range(20):
            color = (3, 1) if P.has_genus else 3
            p = O.random_operation(rng, P, color, 3)
            assert P.contains(p), P.name
            assert P.out_color(p) == color
            assert P.compose(P.identity(color), 1, p) == p
            for i, c in enumerate(P.in_colors(p), 1):
                assert P.compose(p, i, P.identity(c)) == p
            sigma = list(range(1, 4))
            rng.shuffle(sigma)
            q = P.act(p, sigma)
            assert P.contains(q)
            assert P.act(q, O.perm_inverse(sigma)) == p


def test_parallel_composition_commutes_in_graph_operads():
    rng = random.Random(11)
    P = O.sOp()
    for _ in range(20):
        p = O.random_operation(rng, P, 3, 2)
        c1, c2 = P.in_colors(p)
        a = O.random_operation(rng, P, c1, 2)
        b = O.random_operation(rng, P, c2, 2)
        left = P.compose(P.compose(p, 2, b), 1, a)
        right = P.compose(P.compose(p, 1, a), 3, b)
        assert left == right


def test_enumeration_counts():
    assert len(list(O.pOp().operations(3, 2))) == 12
    assert len(list(O.sOp().operations(3, 2))) == 24
    assert all(O.mOpGN().contains(g) for g in O.mOpGN().operations((2, 1), 2))


def test_pOp_rejects_shuffled_leaves():
    g = he.corolla(3).with_leaves((0, 2, 1))
    assert O.sOp().contains(g) and not O.pOp().contains(g)


def test_free_operad_terms():
    F = O.FreeOperad("free", generators=(("m", 2),))
    m = F.gen("m")
    assoc = F.compose(m, 1, m)
    assert assoc == ("m", (("m", (1, 2)), 3))
    assert F.act(assoc, (3, 1, 2)) == ("m", (("m", (3, 1)), 2))
