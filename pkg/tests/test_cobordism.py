import itertools

import pytest

from opcat.cobordism import (CobCategory, Cobordism, CSCategory, Surface, compose_cob,
                             cobordisms, cs_action, cylinder, factor_via_gos, is_splitter, phi)
from opcat.errors import Disconnects, NotNC, SizeMismatch
from opcat.finsets import FinMap, GradedSurjection, compose_gos, gos_identity, graded_surjections

pants = Cobordism(2, 1, (((1, 2), (1,), 0),))
copants = Cobordism(1, 2, (((1,), (1, 2), 0),))
torus_tube = Cobordism(1, 1, (((1,), (1,), 1),))


def test_worked_compositions():
    assert compose_cob(torus_tube, pants) == Cobordism(2, 1, (((1, 2), (1,), 1),))
    assert compose_cob(pants, copants) == Cobordism(1, 1, (((1,), (1,), 1),))
    assert compose_cob(cylinder(3), cylinder(3)) == cylinder(3)


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        compose_cob(pants, pants)


def test_euler_additivity_exhaustive():
    ms = {(n, m): list(cobordisms(n, m, 1)) for n in range(3) for m in range(3)}
    for (a, b), fs in ms.items():
        for c in range(3):
            for f in fs:
                for h in ms[(b, c)]:
                    hf = compose_cob(h, f)
                    assert hf.euler == f.euler + h.euler
                    assert all(g >= 0 for _, _, g in hf.components)


def test_phi_examples_and_functoriality():
    assert phi(gos_identity(3)) == cylinder(3)
    f = GradedSurjection(FinMap(3, 1, (1, 1, 1)), (2,))
    assert phi(f).components == (((1,), (1, 2, 3), 2),)
    gs = [g for n in range(1, 4) for m in range(1, n + 1) for g in graded_surjections(n, m, 1)]
    for f in gs:
        for h in gs:
            if h.source == f.target:
                # phi is contravariant on gOS, covariant on gOS^op
                assert phi(compose_gos(h, f)) == compose_cob(phi(f), phi(h))


def test_factorisation_unique_exhaustive():
    for n in range(1, 4):
        for m in range(1, 4):
            for f in cobordisms(n, m, 2):
                if not (f.is_nc and f.is_primed):
                    continue
                s, g = factor_via_gos(f)
                assert is_splitter(s) and compose_cob(phi(g), s) == f
                hits = [(s2, g2) for k in range(1, m + 1) for s2 in cobordisms(n, k, 0)
                        if is_splitter(s2) and s2.is_primed
                        for g2 in graded_surjections(m, k, 2)
                        if compose_cob(phi(g2), s2) == f]
                assert hits == [(s, g)]


def test_factorisation_of_identity():
    s, g = factor_via_gos(cylinder(2))
    assert s == cylinder(2) and g == gos_identity(2)


def test_not_nc():
    cap = Cobordism(1, 0, (((1,), (), 0),))
    with pytest.raises(NotNC):
        factor_via_gos(cap)
    with pytest.raises(NotNC):
        cs_action(Surface(0, 1), cap, nc=True)


def test_cs_action():
    disc = Surface(0, 1)
    assert cs_action(disc, cylinder(1)) == disc
    up = Cobordism(1, 3, (((1,), (1, 2, 3), 1),))
    assert cs_action(disc, up) == Surface(1, 3)
    assert cs_action(Surface(0, 2), pants) == Surface(1, 1)
    birth = Cobordism(1, 2, (((1,), (1,), 0), ((), (2,), 0)))
    with pytest.raises(Disconnects):
        cs_action(disc, birth)


def test_closed_surfaces_only_have_identities():
    cs = CSCategory(max_genus=1)
    outs = list(cs.out(Surface(2, 0), 3))
    assert outs == [cs.identity(Surface(2, 0))]


def test_categories_compose():
    cob = CobCategory(nc=True, max_genus=1)
    for f in cob.hom(1, 2):
        for g in cob.hom(2, 2):
            assert cob.admits(cob.compose(g, f))
    assert cob.hom(0, 1) == []


def test_json_roundtrip():
    f = Cobordism(2, 2, (((1, 2), (2,), 1), ((), (1,), 0)))
    assert Cobordism.from_json(f.to_json()) == f
