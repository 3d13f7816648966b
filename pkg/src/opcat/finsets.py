"""Finite set maps with their decorations; graded ordered surjections.

Objects are bare sizes and elements are 1-based.  A :class:`FinMap` ``f`` of
type ``n -> m`` has ``f.table[k-1] = f(k)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .category import Category
from .errors import SizeMismatch


@dataclass(frozen=True)
class FinMap:
    n: int
    m: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.n or any(not 1 <= x <= self.m for x in self.table):
            raise ValueError(f"bad table {self.table} for {self.n} -> {self.m}")

    @property
    def source(self) -> int:
        return self.n

    @property
    def target(self) -> int:
        return self.m

    def __call__(self, k: int) -> int:
        return self.table[k - 1]

    def fiber(self, i: int) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.n + 1) if self.table[k - 1] == i)

    def then(self, h: "FinMap") -> "FinMap":
        """``h ∘ self``."""
        if self.m != h.n:
            raise SizeMismatch(f"cannot follow {self.n}->{self.m} by {h.n}->{h.m}")
        return FinMap(self.n, h.m, tuple(h.table[x - 1] for x in self.table))

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "table": list(self.table)}


def identity_map(n: int) -> FinMap:
    return FinMap(n, n, tuple(range(1, n + 1)))


def compose_maps(h: FinMap, f: FinMap) -> FinMap:
    return f.then(h)


# -- decorations -------------------------------------------------------------

def is_surjective(f: FinMap) -> bool:
    return set(f.table) == set(range(1, f.m + 1))


def is_injective(f: FinMap) -> bool:
    return len(set(f.table)) == f.n


def is_order_preserving(f: FinMap) -> bool:
    return all(a <= b for a, b in zip(f.table, f.table[1:]))


def is_min_fiber_ordered(f: FinMap) -> bool:
    """Surjective with ``min f^-1(i) < min f^-1(j)`` whenever ``i < j``."""
    if not is_surjective(f):
        return False
    firsts = [f.table.index(i) for i in range(1, f.m + 1)]
    return firsts == sorted(firsts)


def is_endpoint_preserving(f: FinMap) -> bool:
    if f.n == 0 or f.m == 0:
        return f.n == f.m
    return f.table[0] == 1 and f.table[-1] == f.m


def is_basepoint_preserving(f: FinMap) -> bool:
    """Element 1 plays the marked point."""
    return f.n == 0 or f.table[0] == 1


def classify(f: FinMap) -> dict[str, bool]:
    return {
        "surjective": is_surjective(f),
        "injective": is_injective(f),
        "order_preserving": is_order_preserving(f),
        "min_fiber_ordered": is_min_fiber_ordered(f),
        "endpoint_preserving": is_endpoint_preserving(f),
        "basepoint_preserving": is_basepoint_preserving(f),
    }


def all_maps(n: int, m: int) -> Iterator[FinMap]:
    for t in itertools.product(range(1, m + 1), repeat=n):
        yield FinMap(n, m, t)


def ordered_surjections(n: int, m: int) -> Iterator[FinMap]:
    """Min-fiber-ordered surjections ``n -> m`` (restricted growth strings)."""

    def grow(prefix, top):
        k = len(prefix)
        if k == n:
            if top == m:
                yield FinMap(n, m, tuple(prefix))
            return
        if m - top > n - k:
            return
        for x in range(1, min(top + 1, m) + 1):
            yield from grow(prefix + [x], max(top, x))

    yield from grow([], 0)


def factor_fs(f: FinMap) -> tuple[FinMap, FinMap]:
    """Split a surjection as ``perm ∘ os`` with ``os`` ordered.

    The permutation relabels blocks by the order of their first elements;
    the pair is unique.
    """
    if not is_surjective(f):
        raise ValueError("not a surjection")
    firsts = sorted(range(1, f.m + 1), key=lambda i: f.table.index(i))
    rank = {i: r for r, i in enumerate(firsts, 1)}
    os_map = FinMap(f.n, f.m, tuple(rank[x] for x in f.table))
    perm = FinMap(f.m, f.m, tuple(firsts))
    return perm, os_map


# -- graded ordered surjections -----------------------------------------------

@dataclass(frozen=True)
class GradedSurjection:
    map: FinMap
    grading: tuple[int, ...]

    def __post_init__(self):
        if not is_min_fiber_ordered(self.map):
            raise ValueError(f"{self.map.table} is not an ordered surjection")
        if len(self.grading) != self.map.m or any(g < 0 for g in self.grading):
            raise ValueError("grading must be a nonnegative vector on the codomain")

    @property
    def source(self) -> int:
        return self.map.n

    @property
    def target(self) -> int:
        return self.map.m

    def to_json(self) -> dict:
        return {**self.map.to_json(), "grading": list(self.grading)}


def gos_identity(n: int) -> GradedSurjection:
    return GradedSurjection(identity_map(n), (0,) * n)


def compose_gos(h: GradedSurjection, f: GradedSurjection) -> GradedSurjection:
    """``h ∘ f`` with grading ``g_h(i) + sum_{j in h^-1(i)} g_f(j)``."""
    if f.map.m != h.map.n:
        raise SizeMismatch(f"codomain {f.map.m} vs domain {h.map.n}")
    grading = [g for g in h.grading]
    for j, i in enumerate(h.map.table, 1):
        grading[i - 1] += f.grading[j - 1]
    return GradedSurjection(f.map.then(h.map), tuple(grading))


def graded_surjections(n: int, m: int, max_grade: int) -> Iterator[GradedSurjection]:
    for f in ordered_surjections(n, m):
        for g in itertools.product(range(max_grade + 1), repeat=m):
            yield GradedSurjection(f, g)


# -- categories ------------------------------------------------------------

@dataclass(frozen=True)
class Opposite:
    """A morphism of an opposite category wrapping the underlying one."""

    base: object

    @property
    def source(self):
        return self.base.target

    @property
    def target(self):
        return self.base.source


class FinSetCategory(Category):
    """Subcategories of finite sets cut out by decoration predicates.

    ``kind`` is one of ``FA``, ``FS``, ``OS``, ``OI``; ``min_size`` encodes the
    ``+``/``++`` decorations and ``ep`` the endpoint condition.  With
    ``opposite=True`` morphisms are :class:`Opposite` wrappers.
    """

    def __init__(self, kind: str, min_size: int = 0, ep: bool = False,
                 opposite: bool = False, max_size: int = 6):
        self.kind, self.min_size, self.ep = kind, min_size, ep
        self.opposite, self.max_size = opposite, max_size
        self.name = kind + "+" * min_size + ("ep" if ep else "") + ("^op" if opposite else "")

    def admits(self, f: FinMap) -> bool:
        if f.n < self.min_size or f.m < self.min_size:
            return False
        ok = {
            "FA": True,
            "FS": is_surjective(f),
            "OS": is_min_fiber_ordered(f),
            "OI": is_injective(f) and is_order_preserving(f),
        }[self.kind]
        return ok and (not self.ep or is_endpoint_preserving(f))

    def _base_hom(self, a: int, b: int) -> Iterator[FinMap]:
        if self.kind == "OS":
            maps = ordered_surjections(a, b)
        elif self.kind == "OI":
            maps = (FinMap(a, b, c) for c in itertools.combinations(range(1, b + 1), a))
        else:
            maps = all_maps(a, b)
        return (f for f in maps if self.admits(f))

    def hom(self, x: int, y: int) -> list:
        if self.opposite:
            return [Opposite(f) for f in self._base_hom(y, x)]
        return list(self._base_hom(x, y))

    def out(self, x: int, bound: int):
        for y in range(self.min_size, bound + 1):
            yield from self.hom(x, y)

    def compose(self, g, f):
        if self.opposite:
            return Opposite(compose_maps(f.base, g.base))
        return compose_maps(g, f)

    def identity(self, x: int):
        f = identity_map(x)
        return Opposite(f) if self.opposite else f

    def size(self, x: int) -> int:
        return x


class GOSOpCategory(Category):
    """``gOS^op`` truncated at a maximal grade per codomain element."""

    name = "gOS^op"

    def __init__(self, max_grade: int):
        self.max_grade = max_grade

    def hom(self, x: int, y: int) -> list:
        return [Opposite(f) for f in graded_surjections(y, x, self.max_grade)]

    def out(self, x: int, bound: int):
        for y in range(x, bound + 1):
            yield from self.hom(x, y)

    def compose(self, g, f):
        return Opposite(compose_gos(f.base, g.base))

    def identity(self, x: int):
        return Opposite(gos_identity(x))

    def size(self, x: int) -> int:
        return x
