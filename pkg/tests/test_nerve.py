import itertools
import random
from math import comb

import pytest

from opcat import grobner as G
from opcat import nerve as Nv
from opcat import noether as N
from opcat.category import check_functoriality

Z2 = Nv.nerve_category(Nv.cyclic_group(2), 6)


def test_cyclic_group_table():
    S = Nv.cyclic_group(3)
    assert S.product((1, 2, 2)) == 2 and S.identity == 0


def test_hom_blocks_multiply_back():
    for x in [(1,), (0, 1), (1, 0, 1)]:
        for f in Z2.out(x, 5):
            assert Z2.is_valid(f)
            assert [Z2.S.product(b) for b in f.blocks()] == list(x)


def test_hom_matches_out():
    x = (1, 0)
    for y in itertools.product((0, 1), repeat=4):
        assert set(Z2.hom(x, y)) == {f for f in Z2.out(x, 4) if f.target == y}


def test_composition_laws():
    ms = [f for f in Z2.out((1, 0), 4)]
    for f in ms:
        assert Z2.compose(Z2.identity(f.target), f) == f
        assert Z2.compose(f, Z2.identity(f.source)) == f
        for g in Z2.out(f.target, 5):
            gf = Z2.compose(g, f)
            assert Z2.is_valid(gf)
            for h in list(Z2.out(g.target, 5))[:5]:
                assert Z2.compose(h, gf) == Z2.compose(Z2.compose(h, g), f)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_trivial_monoid_counts(n):
    T = Nv.nerve_category(Nv.trivial_monoid(), 7)
    P = Nv.projection(T)
    for m in range(1, 7):
        k = len(T.hom((0,) * n, (0,) * m))
        assert k == comb(m - 1, n - 1) == len(P.target.hom(n + 1, m + 1))


def test_projection_functorial_and_faithful():
    P = Nv.projection(Z2)
    ms = [f for x in [(1,), (1, 0), (1, 0, 1)] for f in Z2.out(x, 5)]
    more = [g for f in ms for g in Z2.out(f.target, 5)]
    assert check_functoriality(P, ms + more) == []
    assert all(P.target.admits(P(f)) for f in ms)
    G.lift_faithful(G.oi_order(), P, lambda f: f.target, truncation=ms + more)


def test_lifted_order_admissible():
    P = Nv.projection(Z2)
    order = G.lift_faithful(G.oi_order(), P, lambda f: f.target)
    r = G.check_admissible(order, Z2, (1, 0, 1), 6)
    assert r.ok and r.checked > 0


def test_z2_comparable_pairs():
    rng = random.Random(0)
    x = (1, 0, 1)
    for _ in range(20):
        seq = [Z2.random_morphism(rng, x, 3) for _ in range(20)]
        r = N.comparable_pair(Z2, seq, key=Nv.ones_key)
        assert r and N.certify(Z2, seq, r)


def test_ones_key():
    f = Nv.Substitution((1, 0), (0, 1, 0, 1, 1), (3, 2))
    assert Nv.ones_key(f) == ((1, 2), (1, 1, 0, 0, 0))


def test_positive_integers_slices_finite():
    # (Z>0, +) has no identity and finitely many decompositions of each s
    S = Nv.PositiveIntegers()
    for x in [(1,), (3,), (2, 2), (1, 3, 2)]:
        small = Nv.slice_size(Nv.nerve_category(S, sum(x)), x)
        large = Nv.slice_size(Nv.nerve_category(S, sum(x) + 5), x)
        expected = 1
        for s in x:
            expected *= 2 ** (s - 1)
        assert small == large == expected


def test_substitution_json():
    f = Nv.Substitution((1,), (1, 0), (2,))
    assert f.to_json() == {"source": [1], "target": [1, 0], "sizes": [2]}
