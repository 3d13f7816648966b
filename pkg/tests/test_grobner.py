import pytest

from opcat import catconstruct as C
from opcat import grobner as G
from opcat import halfedge as he
from opcat import operads as O
from opcat.category import FiniteFunctor, identity_functor
from opcat.errors import NotFaithful
from opcat.finsets import FinSetCategory, GOSOpCategory, Opposite

OS_OP = FinSetCategory("OS", opposite=True)


def cardinality_functor(D):
    return FiniteFunctor(D, OS_OP, lambda x: x.n_vertices,
                         lambda f: Opposite(C.cardinality(C.from3(f))), "card")


@pytest.mark.parametrize("c", [1, 2, 3, 4])
def test_os_op_order_admissible(c):
    r = G.check_admissible(G.os_op_order(c), OS_OP, c, 5)
    assert r.ok


def test_os_op_order_total():
    order = G.os_op_order(2)
    fs = OS_OP.hom(2, 4)
    assert len({order.key(f) for f in fs}) == len(fs)


@pytest.mark.parametrize("c", [1, 2, 3])
def test_gos_order_admissible(c):
    r = G.check_admissible(G.gos_order(c), GOSOpCategory(2), c, 3)
    assert r.ok and (c == 3 or r.checked > 0)


def test_gos_order_left_to_right():
    cat = GOSOpCategory(1)
    fs = [f for f in cat.hom(2, 2)]
    a = next(f for f in fs if f.base.grading == (0, 1))
    b = next(f for f in fs if f.base.grading == (1, 0))
    assert G.gos_order().less(a, b)
    assert not G.gos_order().less(a, a)


def test_scrambled_order_is_caught():
    r = G.check_admissible(G.scrambled(G.os_op_order(2)), OS_OP, 2, 4)
    assert r.violations


def test_lift_through_identity_is_unchanged():
    order = G.os_op_order(2)
    lifted = G.lift_faithful(order, identity_functor(OS_OP))
    fs = OS_OP.hom(2, 4)
    assert lifted.sort(fs) == order.sort(fs)


def test_lift_through_cardinality_on_d():
    D = C.TwCategory(O.pOp(), "D")
    card = cardinality_functor(D)
    x = he.build([3, 2], [((0, 1), (1, 0))], [(0, 0), (1, 1), (0, 2)])
    ms = list(D.out(x, 4))
    order = G.lift_faithful(G.os_op_order(), card, truncation=ms)
    r = G.check_admissible(order, D, x, 4)
    assert r.ok and r.checked > 0


def test_non_faithful_functor_detected():
    FA = FinSetCategory("FA")
    collapse = FiniteFunctor(FA, FA, lambda x: x, lambda f: 0, "collapse")
    with pytest.raises(NotFaithful):
        G.lift_faithful(G.os_op_order(), collapse, truncation=FA.hom(2, 2))
