"""Functor properties checked on truncations.

Every check enumerates explicitly and returns a report whose ``ok`` flag
only speaks about the objects and bound it was given.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .category import Category, FiniteFunctor

VERIFIED, EXHAUSTED = "verified-at-bound", "exhausted"


@dataclass
class Report:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked,
                "violations": [repr(v) for v in self.violations]}


def is_discrete_opfibration(F: FiniteFunctor, objects: Iterable, bound: int,
                            max_violations: int = 20) -> Report:
    """Every ``g`` out of ``F(c)`` up to ``bound`` has exactly one lift out of ``c``."""
    rep = Report()
    for c in objects:
        lifts: dict = {}
        for f in F.source.out(c, bound):
            lifts.setdefault(F(f), []).append(f)
        for g in F.target.out(F.obj(c), bound):
            rep.checked += 1
            n = len(lifts.get(g, []))
            if n != 1 and len(rep.violations) < max_violations:
                rep.violations.append((c, g, n))
    return rep


def check_property_s(F: FiniteFunctor, objects: Iterable, bound: int,
                     max_violations: int = 20) -> Report:
    """Whenever ``F(g) = h' ∘ F(f)`` for ``f: c -> c'``, ``g: c -> c''`` there
    is ``h: c' -> c''`` with ``g = h ∘ f``."""
    A, B = F.source, F.target
    rep = Report()
    for c in objects:
        ms = list(A.out(c, bound))
        for f in ms:
            for g in ms:
                c1, c2 = A.target(f), A.target(g)
                downstairs = [h for h in B.hom(F.obj(c1), F.obj(c2))
                              if B.compose(h, F(f)) == F(g)]
                if not downstairs:
                    continue
                rep.checked += 1
                if not any(A.compose(h, f) == g for h in A.hom(c1, c2)):
                    if len(rep.violations) < max_violations:
                        rep.violations.append((f, g, downstairs[0]))
    return rep


@dataclass
class CoveringReport:
    status: str
    covering: list
    checked: int = 0
    uncovered: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"status": self.status, "checked": self.checked,
                "covering": [repr(f) for _, f in self.covering],
                "uncovered": [repr(u) for u in self.uncovered]}


def _cached_hom(A: Category):
    memo: dict = {}

    def hom(x, y):
        if (x, y) not in memo:
            memo[x, y] = A.hom(x, y)
        return memo[x, y]

    return hom


def search_property_f(F: FiniteFunctor, d, bound: int,
                      preimages: Callable[[Any], list] | None = None,
                      budget: int = 64) -> CoveringReport:
    """Greedily collect ``(c_i, f_i: d -> F(c_i))`` until every morphism out of
    ``d`` up to ``bound`` factors as ``F(g) ∘ f_i``.

    The identity of ``d`` is tried first, then candidates by increasing
    target size, so each new ``f_i`` is a morphism no earlier one explains.  The final set is re-verified
    against the whole truncation before it is returned.
    """
    B = F.target
    pre = preimages or (lambda y: [y])
    hom = _cached_hom(F.source)

    def factors(u, covering) -> bool:
        for c, f in covering:
            if f == u:
                return True
            for c2 in pre(B.target(u)):
                for g in hom(c, c2):
                    if B.compose(F(g), f) == u:
                        return True
        return False

    ident = B.identity(d)
    ms = sorted(B.out(d, bound), key=lambda u: (u != ident, B.size(B.target(u))))
    covering: list = []
    for u in ms:
        if factors(u, covering):
            continue
        cs = pre(B.target(u))
        if not cs:
            continue
        if len(covering) >= budget:
            return CoveringReport(EXHAUSTED, covering, len(ms))
        covering.append((cs[0], u))
    uncovered = [u for u in ms if pre(B.target(u)) and not factors(u, covering)]
    return CoveringReport(VERIFIED if not uncovered else EXHAUSTED, covering, len(ms),
                          uncovered)


def verify_covering(F: FiniteFunctor, d, bound: int, covering: list,
                    preimages: Callable[[Any], list] | None = None) -> list:
    """Morphisms out of ``d`` up to ``bound`` that fail to factor; empty if covered."""
    B = F.target
    pre = preimages or (lambda y: [y])
    hom = _cached_hom(F.source)
    bad = []
    for u in B.out(d, bound):
        ok = any(B.compose(F(g), f) == u
                 for c, f in covering for c2 in pre(B.target(u)) for g in hom(c, c2))
        if not ok and pre(B.target(u)):
            bad.append(u)
    return bad


# -- pullbacks --------------------------------------------------------------------

@dataclass(frozen=True)
class PairMorphism:
    left: Any
    right: Any
    source: Any
    target: Any


class PullbackCategory(Category):
    """Fibered product of ``F: D -> B`` and ``G: A -> B``."""

    def __init__(self, F: FiniteFunctor, G: FiniteFunctor):
        self.F, self.G = F, G
        self.name = f"{F.source.name} x_{F.target.name} {G.source.name}"

    def is_object(self, x) -> bool:
        d, a = x
        return self.F.obj(d) == self.G.obj(a)

    def _pair(self, u, v) -> PairMorphism:
        D, A = self.F.source, self.G.source
        return PairMorphism(u, v, (D.source(u), A.source(v)), (D.target(u), A.target(v)))

    def out(self, x, bound: int):
        d, a = x
        rights: dict = {}
        for v in self.G.source.out(a, bound):
            rights.setdefault(self.G(v), []).append(v)
        for u in self.F.source.out(d, bound):
            for v in rights.get(self.F(u), []):
                yield self._pair(u, v)

    def hom(self, x, y) -> list:
        D, A = self.F.source, self.G.source
        rights: dict = {}
        for v in A.hom(x[1], y[1]):
            rights.setdefault(self.G(v), []).append(v)
        return [self._pair(u, v) for u in D.hom(x[0], y[0]) for v in rights.get(self.F(u), [])]

    def compose(self, g: PairMorphism, f: PairMorphism) -> PairMorphism:
        return self._pair(self.F.source.compose(g.left, f.left),
                          self.G.source.compose(g.right, f.right))

    def identity(self, x):
        return self._pair(self.F.source.identity(x[0]), self.G.source.identity(x[1]))

    def size(self, x) -> int:
        return self.F.source.size(x[0])


def pullback(F: FiniteFunctor, G: FiniteFunctor):
    """The fibered product and its two projections ``(P, to_D, to_A)``."""
    P = PullbackCategory(F, G)
    to_d = FiniteFunctor(P, F.source, lambda x: x[0], lambda f: f.left, "pr_D")
    to_a = FiniteFunctor(P, G.source, lambda x: x[1], lambda f: f.right, "pr_A")
    return P, to_d, to_a
