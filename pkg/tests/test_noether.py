import itertools
import random

import pytest

from opcat import catconstruct as C
from opcat import halfedge as he
from opcat import noether as N
from opcat import operads as O
from opcat.finsets import FinSetCategory, GOSOpCategory

OS_OP = FinSetCategory("OS", opposite=True)
D = C.TwCategory(O.pOp(), "D")
D_BASE = he.build([3, 2], [((0, 1), (1, 0))], [(0, 0), (1, 1), (0, 2)])


def test_leq_identity_and_self():
    f = OS_OP.hom(2, 3)[0]
    r = N.leq(OS_OP, f, f)
    assert r and OS_OP.compose(r.witness, f) == f


def test_leq_witness_factorizes():
    fs = list(OS_OP.out(2, 4))
    for f, g in itertools.product(fs, repeat=2):
        r = N.leq(OS_OP, f, g)
        if r:
            assert OS_OP.compose(r.witness, f) == g
        else:
            assert r.result == N.NONE
            assert all(OS_OP.compose(h, f) != g
                       for h in OS_OP.hom(OS_OP.target(f), OS_OP.target(g)))


def test_leq_bound_reports_not_found():
    f, g = OS_OP.hom(1, 1)[0], OS_OP.hom(1, 4)[0]
    assert N.leq(OS_OP, f, g, bound=3).result == N.NOT_FOUND
    assert N.leq(OS_OP, f, g, bound=4).result == N.FOUND


def test_probe_json_shape():
    f = OS_OP.hom(2, 3)[0]
    j = N.leq(OS_OP, f, f).to_json()
    assert set(j) >= {"result", "witnesses", "bound", "elapsed"}


def test_antichain_in_os_op_among_same_size():
    # distinct morphisms with a common target are incomparable in OS^op
    ms = OS_OP.hom(2, 3)
    r = N.antichain_search(OS_OP, 2, len(ms), 3, candidates=ms)
    assert r and len(r.witness) == len(ms) == 3
    poset = N.DivPoset(OS_OP, 2, OS_OP.hom(2, 3))
    assert poset.is_antichain(range(len(poset.morphisms)))


def test_antichain_not_found_when_chain():
    ms = [OS_OP.hom(1, k)[0] for k in (1, 2, 3)]
    assert not N.antichain_search(OS_OP, 1, 2, 3, candidates=ms)


def test_comparable_pair_prefers_equal_terms():
    g, f = OS_OP.hom(2, 3)[:2]
    r = N.comparable_pair(OS_OP, [g, f, f])
    assert r.pair == (1, 2)


def test_comparable_pair_in_d():
    rng = random.Random(0)
    for _ in range(10):
        seq = [C.random_dfs_morphism(rng, D, D_BASE, rng.randint(0, 6)) for _ in range(20)]
        assert all(f.target.n_vertices <= 8 for f in seq)
        r = N.comparable_pair(D, seq, 8, key=N.d_key)
        assert r and N.certify(D, seq, r)


def test_comparable_pair_in_gos():
    cat = GOSOpCategory(3)
    ms = list(cat.out(2, 5))
    rng = random.Random(3)
    for _ in range(10):
        seq = [rng.choice(ms) for _ in range(20)]
        r = N.comparable_pair(cat, seq, key=N.gos_key)
        assert r and N.certify(cat, seq, r)


def test_certify_rejects_forged_pair():
    f, g = OS_OP.hom(2, 3)[:2]
    forged = N.ProbeResult(N.FOUND, OS_OP.identity(3), pair=(0, 1))
    assert not N.certify(OS_OP, [f, g], forged)


def test_suppress_degree_two():
    path = he.build([2, 2, 3], [((0, 1), (1, 0)), ((1, 1), (2, 0))], [(0, 0), (2, 1), (2, 2)])
    r, n = N.suppress_degree_two(path)
    assert n == 2 and r.n_vertices == 1 and he.is_isomorphic(r, he.corolla(3))


# -- planar trees ----------------------------------------------------------------

def _catalan(n):
    from math import comb
    return comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_planar_tree_counts(n):
    assert len(N.planar_trees(n)) == _catalan(n - 1)


def test_pt_identity_and_composition():
    trees = [t for n in range(1, 5) for t in N.planar_trees(n)]
    for s in trees:
        ident = N.PTMorphism(s, s, tuple(range(s.size)))
        assert ident in N.pt_morphisms(s, s)
    for s, t, u in itertools.product([t for t in trees if t.size <= 3], repeat=3):
        for f in N.pt_morphisms(s, t):
            for h in N.pt_morphisms(t, u):
                assert N.pt_compose(h, f) in N.pt_morphisms(s, u)


def test_pt_hom_counts_match_d():
    trees = [t for n in range(1, 5) for t in N.planar_trees(n)]
    for s, t in itertools.product(trees, repeat=2):
        assert len(N.pt_morphisms(s, t)) == len(D.hom(N.g_pt(s), N.g_pt(t)))


def test_j_after_g_identity_small():
    trees = [t for n in range(1, 5) for t in N.planar_trees(n)]
    for s in trees:
        assert N.j_d(N.g_pt(s)) == s
        for t in trees:
            for f in N.pt_morphisms(s, t):
                assert N.j_d_morphism(N.g_pt_morphism(f)) == f
