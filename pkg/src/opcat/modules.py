"""Modules over truncated categories, with exact linear algebra.

A module is a vector space per object together with a linear action of every
morphism of the truncation.  Subspaces are stored as reduced row echelon
bases computed with sympy's ``DomainMatrix`` over ``QQ`` or ``GF(p)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .category import Category, Truncation
from .errors import RingUnsupported


def ring_domain(ring):
    """``"QQ"`` or a prime ``p``."""
    if ring in ("QQ", "Q", None):
        return QQ
    if isinstance(ring, int) and ring > 1 and all(ring % d for d in range(2, int(ring ** .5) + 1)):
        return GF(ring)
    raise RingUnsupported(f"unsupported ring {ring!r}")


def span_basis(vectors: list[list], dim: int, domain) -> list[list]:
    """Row-reduced basis of the span of ``vectors`` in ``domain^dim``."""
    if not vectors or dim == 0:
        return []
    m = DomainMatrix([[domain.convert(a) for a in v] for v in vectors], (len(vectors), dim),
                     domain)
    r, pivots = m.rref()
    return r.to_list()[:len(pivots)]


# -- modules ------------------------------------------------------------------------

@dataclass
class ModulePresentation:
    """``basis[x]`` labels a basis of ``M(x)``; ``action(f)`` sends basis index
    ``j`` of the source to a list of ``(i, coefficient)`` in the target."""

    truncation: Truncation
    basis: dict
    action: Callable[[Any], dict]
    ring: Any = "QQ"
    name: str = "M"
    _act: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.domain = ring_domain(self.ring)

    @property
    def category(self) -> Category:
        return self.truncation.category

    def dim(self, x) -> int:
        return len(self.basis.get(x, ()))

    def act_sparse(self, f) -> dict:
        if f not in self._act:
            self._act[f] = self.action(f)
        return self._act[f]

    def apply(self, f, v: list) -> list:
        y = self.category.target(f)
        out = [self.domain.zero] * self.dim(y)
        for j, a in enumerate(v):
            if a:
                for i, c in self.act_sparse(f).get(j, ()):
                    out[i] += self.domain.convert(c) * a
        return out

    def matrix(self, f) -> list[list]:
        x, y = self.category.source(f), self.category.target(f)
        cols = [self.apply(f, [self.domain.one if k == j else self.domain.zero
                               for k in range(self.dim(x))]) for j in range(self.dim(x))]
        return [[cols[j][i] for j in range(self.dim(x))] for i in range(self.dim(y))]


def principal(c, truncation: Truncation, ring="QQ") -> ModulePresentation:
    """The free module on ``Hom(c, -)``, acted on by postcomposition."""
    cat = truncation.category
    basis = {x: list(truncation.hom(c, x)) for x in truncation.objects}
    index = {x: {u: i for i, u in enumerate(b)} for x, b in basis.items()}

    def action(f):
        x, y = cat.source(f), cat.target(f)
        return {j: [(index[y][cat.compose(f, u)], 1)] for j, u in enumerate(basis[x])}

    return ModulePresentation(truncation, basis, action, ring, f"Q Hom({c!r}, -)")


def constant_module(truncation: Truncation, ring="QQ") -> ModulePresentation:
    basis = {x: ["1"] for x in truncation.objects}
    return ModulePresentation(truncation, basis, lambda f: {0: [(0, 1)]}, ring, "const")


# -- submodules ---------------------------------------------------------------------

Subspaces = dict  # object -> list of basis rows


def submodule_span(gens: dict, M: ModulePresentation, max_passes: int | None = None) -> Subspaces:
    """Smallest family of subspaces containing ``gens`` and closed under the
    action of every morphism in the truncation."""
    T, dom = M.truncation, M.domain
    S = {x: span_basis(list(gens.get(x, [])), M.dim(x), dom) for x in T.objects}
    passes = max_passes or len(T.objects) + 1
    for _ in range(passes):
        changed = False
        new: dict = {x: list(S[x]) for x in T.objects}
        for x in T.objects:
            if not S[x]:
                continue
            for y in T.objects:
                for f in T.hom(x, y):
                    new[y] += [M.apply(f, v) for v in S[x]]
        for y in T.objects:
            b = span_basis(new[y], M.dim(y), dom)
            if len(b) != len(S[y]):
                changed = True
            S[y] = b
        if not changed:
            return S
    return S


def full_subspaces(M: ModulePresentation, keep: Callable[[Hashable], bool]) -> Subspaces:
    """``M(x)`` where ``keep(x)``, zero elsewhere."""
    one, zero = M.domain.one, M.domain.zero
    return {x: ([[one if i == j else zero for j in range(M.dim(x))] for i in range(M.dim(x))]
                if keep(x) else []) for x in M.truncation.objects}


def is_submodule(N: Subspaces, M: ModulePresentation) -> bool:
    closed = submodule_span(N, M)
    return all(len(closed[x]) == len(N[x]) for x in M.truncation.objects)


@dataclass
class GrowthReport:
    rows: list  # (object label, degree, dim, new generators)

    def by_degree(self) -> dict:
        out: dict = {}
        for _, d, dim, new in self.rows:
            a, b = out.get(d, (0, 0))
            out[d] = (a + dim, b + new)
        return dict(sorted(out.items()))

    @property
    def total(self) -> int:
        return sum(r[3] for r in self.rows)

    def new_at(self, label) -> int:
        return sum(r[3] for r in self.rows if r[0] == label)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "dim", "newGenerators"])
        for d, (dim, new) in self.by_degree().items():
            w.writerow([d, dim, new])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"rows": [{"object": str(o), "degree": d, "dim": dim, "new": n}
                                    for o, d, dim, n in self.rows],
                           "total": self.total}, sort_keys=True)


def min_generators_by_degree(N: Subspaces, M: ModulePresentation,
                             degree: Callable[[Hashable], int],
                             label: Callable[[Hashable], Any] = repr) -> GrowthReport:
    """Objects are visited by increasing degree; at each one, the number of
    new generators is ``dim N(x)`` minus the dimension of what the earlier
    generators already produce there."""
    objs = sorted(M.truncation.objects, key=lambda x: (degree(x), repr(x)))
    gens: dict = {}
    closure: Subspaces = {x: [] for x in objs}
    rows = []
    for x in objs:
        have = closure[x]
        new = len(span_basis(have + N[x], M.dim(x), M.domain)) - len(have) if N[x] else 0
        if new:
            gens[x] = list(N[x])
            closure = submodule_span(gens, M)
        rows.append((label(x), degree(x), len(N[x]), new))
    return GrowthReport(rows)
