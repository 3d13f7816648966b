"""Combinatorial two-dimensional cobordisms.

A cobordism ``n -> m`` is recorded by its connected components; each one is
a triple ``(S, T, g)``: ``S`` and ``T`` are the circles it meets on either
side and ``g`` is its genus.  A
connected orientable surface is determined by ``(g, b)``, so nothing is lost.
Euler characteristics glue additively along circles, which gives the genus of
a composite.

``Cob'`` keeps the morphisms whose components all touch the source (and only
identities out of the empty sequence); the ``nc`` variants also ask every
component to reach the target.  ``CS`` is the category of connected surfaces
under the action of ``Cob'``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .category import Category
from .errors import Disconnects, NonIntegerGenus, NotNC, SizeMismatch
from .finsets import FinMap, GradedSurjection, graded_surjections

Component = tuple[tuple[int, ...], tuple[int, ...], int]


def euler(genus: int, boundary: int) -> int:
    return 2 - 2 * genus - boundary


def genus_from_euler(chi: int, boundary: int) -> int:
    twice = 2 - chi - boundary
    if twice % 2 or twice < 0:
        raise NonIntegerGenus(f"chi={chi}, b={boundary} gives genus {twice / 2}")
    return twice // 2


@dataclass(frozen=True)
class Cobordism:
    n: int
    m: int
    components: tuple[Component, ...]

    def __post_init__(self):
        comps = tuple(sorted((tuple(sorted(S)), tuple(sorted(T)), g)
                             for S, T, g in self.components))
        object.__setattr__(self, "components", comps)
        src = sorted(x for S, _, _ in comps for x in S)
        tgt = sorted(x for _, T, _ in comps for x in T)
        if src != list(range(1, self.n + 1)) or tgt != list(range(1, self.m + 1)):
            raise ValueError("components must partition the boundary circles")
        if any(g < 0 for _, _, g in comps):
            raise ValueError("negative genus")

    @property
    def source(self) -> int:
        return self.n

    @property
    def target(self) -> int:
        return self.m

    @property
    def euler(self) -> int:
        return sum(euler(g, len(S) + len(T)) for S, T, g in self.components)

    @property
    def is_nc(self) -> bool:
        return all(T for _, T, _ in self.components)

    @property
    def is_primed(self) -> bool:
        """Member of ``Cob'``: identities out of 0, else no component misses the source."""
        if self.n == 0:
            return self.m == 0 and not self.components
        return all(S for S, _, _ in self.components)

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m,
                "components": [{"S": list(S), "T": list(T), "g": g}
                               for S, T, g in self.components]}

    @staticmethod
    def from_json(data: dict) -> "Cobordism":
        return Cobordism(data["n"], data["m"],
                         tuple((tuple(c["S"]), tuple(c["T"]), c["g"]) for c in data["components"]))


def cylinder(n: int) -> Cobordism:
    return Cobordism(n, n, tuple(((i,), (i,), 0) for i in range(1, n + 1)))


def compose_cob(h: Cobordism, f: Cobordism) -> Cobordism:
    """``h ∘ f``: glue along the middle circles."""
    if f.m != h.n:
        raise SizeMismatch(f"{f.n}->{f.m} then {h.n}->{h.m}")
    pieces = [("f", c) for c in f.components] + [("h", c) for c in h.components]
    parent = list(range(len(pieces)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    at_middle: dict[int, list[int]] = {}
    for k, (side, (S, T, _)) in enumerate(pieces):
        for c in (T if side == "f" else S):
            at_middle.setdefault(c, []).append(k)
    for ks in at_middle.values():
        for k in ks[1:]:
            parent[find(k)] = find(ks[0])
    groups: dict[int, list[int]] = {}
    for k in range(len(pieces)):
        groups.setdefault(find(k), []).append(k)
    comps = []
    for ks in groups.values():
        S = [x for k in ks if pieces[k][0] == "f" for x in pieces[k][1][0]]
        T = [x for k in ks if pieces[k][0] == "h" for x in pieces[k][1][1]]
        chi = sum(euler(pieces[k][1][2], len(pieces[k][1][0]) + len(pieces[k][1][1]))
                  for k in ks)
        comps.append((tuple(S), tuple(T), genus_from_euler(chi, len(S) + len(T))))
    return Cobordism(f.n, h.m, tuple(comps))


@dataclass(frozen=True)
class Surface:
    genus: int
    boundary: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary count are nonnegative")

    @property
    def euler(self) -> int:
        return euler(self.genus, self.boundary)


def cs_action(x: Surface, f: Cobordism, nc: bool = False) -> Surface:
    """Glue ``f`` onto the boundary of ``x``."""
    if f.n != x.boundary:
        raise SizeMismatch(f"surface has {x.boundary} circles, cobordism starts at {f.n}")
    if nc and not f.is_nc:
        raise NotNC("a component has no target circle")
    if x.boundary == 0:
        if f.components:
            raise Disconnects("cobordism out of a closed surface adds components")
        return x
    if any(not S for S, _, _ in f.components):
        raise Disconnects("a component does not touch the surface")
    chi = x.euler + f.euler
    return Surface(genus_from_euler(chi, f.m), f.m)


def phi(f: GradedSurjection) -> Cobordism:
    """The cobordism ``m -> n`` of ``f: n -> m`` read in ``gOS^op``.

    Circle ``i`` of the source is joined to the circles ``f^-1(i)`` by a
    surface of genus ``g_f(i)``.
    """
    return Cobordism(f.map.m, f.map.n,
                     tuple(((i,), f.map.fiber(i), f.grading[i - 1])
                           for i in range(1, f.map.m + 1)))


def is_splitter(f: Cobordism) -> bool:
    return all(len(T) == 1 and g == 0 for _, T, g in f.components)


def factor_via_gos(f: Cobordism) -> tuple[Cobordism, GradedSurjection]:
    """Write an nc-cobordism as ``phi(g) ∘ s`` with ``s`` a splitter.

    The middle circles are ordered by the smallest target circle of each
    component, which makes ``g`` an ordered surjection and the pair unique.
    """
    if not f.is_nc:
        raise NotNC("a component has no target circle")
    comps = sorted(f.components, key=lambda c: min(c[1]))
    splitter = Cobordism(f.n, len(comps),
                         tuple((S, (j,), 0) for j, (S, _, _) in enumerate(comps, 1)))
    table = [0] * f.m
    for j, (_, T, _) in enumerate(comps, 1):
        for t in T:
            table[t - 1] = j
    g = GradedSurjection(FinMap(f.m, len(comps), tuple(table)),
                         tuple(c[2] for c in comps))
    return splitter, g


# -- enumeration ------------------------------------------------------------

def _set_partitions(items: list) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def cobordisms(n: int, m: int, max_genus: int) -> Iterator[Cobordism]:
    """All cobordisms ``n -> m`` with component genus at most ``max_genus``."""
    circles = [("S", i) for i in range(1, n + 1)] + [("T", j) for j in range(1, m + 1)]
    for blocks in _set_partitions(circles):
        for gs in itertools.product(range(max_genus + 1), repeat=len(blocks)):
            yield Cobordism(n, m, tuple(
                (tuple(i for k, i in b if k == "S"), tuple(j for k, j in b if k == "T"), g)
                for b, g in zip(blocks, gs)))


class CobCategory(Category):
    """``Cob'`` or ``ncCob'`` truncated at a component genus."""

    def __init__(self, nc: bool = False, max_genus: int = 1):
        self.nc, self.max_genus = nc, max_genus
        self.name = "ncCob'" if nc else "Cob'"

    def admits(self, f: Cobordism) -> bool:
        return f.is_primed and (not self.nc or f.is_nc)

    def hom(self, x: int, y: int) -> list:
        return [f for f in cobordisms(x, y, self.max_genus) if self.admits(f)]

    def out(self, x: int, bound: int):
        for y in range(bound + 1):
            yield from self.hom(x, y)

    def compose(self, g, f):
        return compose_cob(g, f)

    def identity(self, x: int):
        return cylinder(x)

    def size(self, x: int) -> int:
        return x


@dataclass(frozen=True)
class CSMorphism:
    surface: Surface
    cobordism: Cobordism
    nc: bool = False

    @property
    def source(self) -> Surface:
        return self.surface

    @property
    def target(self) -> Surface:
        return cs_action(self.surface, self.cobordism, self.nc)


class CSCategory(Category):
    """``CS`` or ``ncCS``: surfaces with the cobordisms acting on them."""

    def __init__(self, nc: bool = False, max_genus: int = 1):
        self.nc = nc
        self.cob = CobCategory(nc, max_genus)
        self.name = "ncCS" if nc else "CS"

    def objects(self, max_genus: int, max_boundary: int) -> list[Surface]:
        lo = 1 if self.nc else 0
        return [Surface(g, b) for b in range(lo, max_boundary + 1)
                for g in range(max_genus + 1)]

    def out(self, x: Surface, bound: int):
        for f in self.cob.out(x.boundary, bound):
            if x.boundary == 0 and f.components:
                continue
            yield CSMorphism(x, f, self.nc)

    def hom(self, x: Surface, y: Surface) -> list:
        return [f for f in self.out(x, y.boundary) if f.target == y]

    def compose(self, g: CSMorphism, f: CSMorphism) -> CSMorphism:
        if g.surface != f.target:
            raise SizeMismatch("surfaces do not match")
        return CSMorphism(f.surface, compose_cob(g.cobordism, f.cobordism), self.nc)

    def identity(self, x: Surface):
        return CSMorphism(x, cylinder(x.boundary), self.nc)

    def size(self, x: Surface) -> int:
        return x.boundary

    def project(self, f: CSMorphism) -> Cobordism:
        return f.cobordism


def splitters_from(n: int, bound: int) -> list[Cobordism]:
    """All ``ncCob'`` morphisms out of ``n`` with genus-0, one-target components."""
    out = []
    for m in range(1, bound + 1):
        for f in cobordisms(n, m, 0):
            if f.is_primed and is_splitter(f):
                out.append(f)
    return out


def gos_image(n: int, m: int, max_grade: int) -> Iterator[Cobordism]:
    for f in graded_surjections(m, n, max_grade):
        yield phi(f)

