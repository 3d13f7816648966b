import itertools

import pytest

from opcat.errors import SizeMismatch
from opcat.finsets import (FinMap, FinSetCategory, GOSOpCategory, GradedSurjection, all_maps,
                           classify, compose_gos, factor_fs, gos_identity, graded_surjections,
                           identity_map, is_surjective, ordered_surjections)


def test_compose_gos_worked_case():
    f = GradedSurjection(FinMap(3, 2, (1, 2, 1)), (1, 0))
    h = GradedSurjection(FinMap(2, 1, (1, 1)), (2,))
    c = compose_gos(h, f)
    assert c.map == FinMap(3, 1, (1, 1, 1)) and c.grading == (3,)


def test_compose_gos_size_mismatch():
    with pytest.raises(SizeMismatch):
        compose_gos(gos_identity(2), gos_identity(3))


def test_gos_identity_and_associativity_exhaustive():
    ms = [g for n in range(1, 4) for m in range(1, n + 1) for g in graded_surjections(n, m, 1)]
    by_source = {}
    for f in ms:
        by_source.setdefault(f.target, []).append(f)
    for f in ms:
        assert compose_gos(gos_identity(f.target), f) == f
        assert compose_gos(f, gos_identity(f.source)) == f
        for g in (x for x in ms if x.source == f.target):
            for h in (x for x in ms if x.source == g.target):
                assert compose_gos(h, compose_gos(g, f)) == compose_gos(compose_gos(h, g), f)


def test_grading_formula_direct():
    for f in graded_surjections(3, 2, 2):
        for h in graded_surjections(2, 1, 2):
            c = compose_gos(h, f)
            assert c.grading[0] == h.grading[0] + sum(f.grading)


def test_classify_examples():
    flags = classify(identity_map(3))
    assert all(flags.values())
    const = classify(FinMap(3, 1, (1, 1, 1)))
    assert const["surjective"] and not const["injective"]
    swap = classify(FinMap(2, 2, (2, 1)))
    assert swap["surjective"] and not swap["min_fiber_ordered"]


def test_fs_factorisation_unique():
    for n in range(0, 5):
        for m in range(0, n + 1):
            oss = list(ordered_surjections(n, m))
            perms = [FinMap(m, m, p) for p in itertools.permutations(range(1, m + 1))]
            for f in all_maps(n, m):
                if not is_surjective(f):
                    continue
                perm, os_map = factor_fs(f)
                assert os_map.then(perm) == f
                hits = [(p, o) for p in perms for o in oss if o.then(p) == f]
                assert hits == [(perm, os_map)]


def test_ordered_surjection_count_is_stirling():
    stirling = {(4, 2): 7, (4, 3): 6, (5, 2): 15, (5, 3): 25}
    for (n, m), s in stirling.items():
        assert len(list(ordered_surjections(n, m))) == s


def test_finset_categories():
    FA = FinSetCategory("FA")
    assert len(FA.hom(3, 2)) == 8
    OI = FinSetCategory("OI")
    assert len(OI.hom(2, 4)) == 6
    OIep = FinSetCategory("OI", min_size=1, ep=True)
    assert [f.table for f in OIep.hom(2, 4)] == [(1, 4)]
    OSop = FinSetCategory("OS", opposite=True)
    assert len(OSop.hom(2, 3)) == 3
    f = OSop.hom(2, 3)[0]
    assert OSop.compose(OSop.identity(3), f) == f


def test_gos_op_category():
    C = GOSOpCategory(max_grade=1)
    assert len(C.hom(1, 2)) == 2
    assert len(C.hom(2, 3)) == 3 * 4
    f = C.hom(1, 2)[1]
    assert C.compose(f, C.identity(1)) == f
