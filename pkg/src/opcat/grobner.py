"""Admissible orders on hom-sets out of a fixed object, checked on truncations.

An order is given by a sort key.  It is admissible on a truncation when the
key is injective on each hom-set and postcomposition never swaps two
morphisms.  Truncations only ever certify "no violation up to the bound".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

from .category import Category, FiniteFunctor
from .errors import NotFaithful


@dataclass(frozen=True)
class AdmissibleOrder:
    name: str
    key: Callable[[Any], Any]
    base: Hashable = None

    def less(self, f, g) -> bool:
        return self.key(f) < self.key(g)

    def sort(self, morphisms):
        return sorted(morphisms, key=self.key)


def os_op_order(c: int | None = None) -> AdmissibleOrder:
    """Lexicographic order on the tables of ordered surjections.

    A morphism ``c -> c'`` of ``OS^op`` is a surjection ``s: c' -> c`` whose
    table is a restricted growth string; precomposing two such strings with a
    third keeps the first difference in front, so the order is admissible.
    """
    return AdmissibleOrder("OS^op-lex", lambda f: f.base.table, c)


def gos_order(c: int | None = None) -> AdmissibleOrder:
    """Underlying ``OS^op`` order first, then gradings left to right."""
    return AdmissibleOrder("gOS^op-lex", lambda f: (f.base.map.table, f.base.grading), c)


def oi_order(c: int | None = None) -> AdmissibleOrder:
    """Lexicographic order on the tables of order-preserving injections."""
    return AdmissibleOrder("OI-lex", lambda f: f.table, c)


def lift_faithful(order: AdmissibleOrder, G: FiniteFunctor,
                  tiebreak: Callable[[Any], Any] | None = None,
                  truncation: list | None = None) -> AdmissibleOrder:
    """Pull an order back along ``G``: compare images, then the tiebreak.

    With a ``truncation`` the functor is checked to be injective on every
    hom-set in it; a collision raises :class:`NotFaithful`.
    """
    tb = tiebreak or (lambda f: 0)
    if truncation is not None:
        seen: dict = {}
        for f in truncation:
            k = (G.source.source(f), G.source.target(f), G(f))
            if k in seen and seen[k] != f:
                raise NotFaithful(f"two morphisms share the image {G(f)!r}")
            seen[k] = f
    return AdmissibleOrder(f"{order.name}/{G.name}", lambda f: (order.key(G(f)), tb(f)),
                           order.base)


@dataclass
class AdmissibilityReport:
    checked: int = 0
    violations: list = field(default_factory=list)
    ties: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.ties

    def to_json(self) -> dict:
        return {"checked": self.checked, "violations": [repr(v) for v in self.violations],
                "ties": [repr(t) for t in self.ties]}


def check_admissible(order: AdmissibleOrder, category: Category, c, bound: int,
                     max_violations: int = 20) -> AdmissibilityReport:
    """Check totality on each ``Hom(c, c')`` and monotonicity under every
    postcomposition available in the truncation.

    Triples ``(f, f', g)`` with ``f < f'`` are examined whenever ``g`` starts
    at the common target; composites leaving the truncation are compared all
    the same, since the key is defined on them.
    """
    report = AdmissibilityReport()
    by_target: dict = {}
    for f in category.out(c, bound):
        by_target.setdefault(category.target(f), []).append(f)
    for t, fs in by_target.items():
        fs = order.sort(fs)
        for a, b in zip(fs, fs[1:]):
            if not order.less(a, b):
                report.ties.append((a, b))
        if len(fs) < 2:
            continue
        posts = list(category.out(t, bound))
        for i, f in enumerate(fs):
            for f2 in fs[i + 1:]:
                for g in posts:
                    report.checked += 1
                    if not order.less(category.compose(g, f), category.compose(g, f2)):
                        if len(report.violations) < max_violations:
                            report.violations.append((f, f2, g))
    return report


def scrambled(order: AdmissibleOrder, salt: int = 1) -> AdmissibleOrder:
    """A deliberately non-admissible order with the same values, for tests."""
    import hashlib

    def key(f):
        return hashlib.sha256(f"{salt}:{order.key(f)!r}".encode()).hexdigest()

    return AdmissibleOrder(order.name + "-scrambled", key, order.base)
