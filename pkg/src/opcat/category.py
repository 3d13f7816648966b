"""Minimal interface shared by every concrete category in the package.

Morphisms are hashable values carrying their own source and target.  Beyond
composition and identities, a category enumerates hom-sets and the morphisms
out of an object up to a size bound.  Everything downstream talks only to
this interface.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Iterator


class Category:
    name = "category"

    def source(self, f) -> Hashable:
        return f.source

    def target(self, f) -> Hashable:
        return f.target

    def compose(self, g, f):
        """``g ∘ f`` (``f`` first)."""
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def hom(self, x, y) -> list:
        raise NotImplementedError

    def out(self, x, bound: int) -> Iterator:
        """Morphisms from ``x`` whose target has size at most ``bound``."""
        raise NotImplementedError

    def size(self, x) -> int:
        raise NotImplementedError


@dataclass
class Truncation:
    """Full subcategory on finitely many objects with cached hom-sets."""

    category: Category
    objects: list
    _hom: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {x: i for i, x in enumerate(self.objects)}

    def __contains__(self, x) -> bool:
        return x in self._index

    def hom(self, x, y) -> list:
        key = (x, y)
        if key not in self._hom:
            self._hom[key] = list(self.category.hom(x, y))
        return self._hom[key]

    def out(self, x) -> Iterator:
        for y in self.objects:
            yield from self.hom(x, y)

    def morphisms(self) -> Iterator:
        for x in self.objects:
            yield from self.out(x)

    def compose(self, g, f):
        return self.category.compose(g, f)


@dataclass(frozen=True)
class FiniteFunctor:
    """A functor given by its action on objects and on morphisms."""

    source: Category
    target: Category
    on_objects: Callable[[Any], Any]
    on_morphisms: Callable[[Any], Any]
    name: str = "F"

    def __call__(self, f):
        return self.on_morphisms(f)

    def obj(self, x):
        return self.on_objects(x)


def identity_functor(cat: Category) -> FiniteFunctor:
    return FiniteFunctor(cat, cat, lambda x: x, lambda f: f, "id")


def check_functoriality(F: FiniteFunctor, morphisms: Iterable) -> list[tuple]:
    """Return witnesses ``(g, f)`` where ``F(g∘f) != F(g)∘F(f)``.

    Only pairs composable among ``morphisms`` are examined; identities are
    checked for every source object seen.
    """
    ms = list(morphisms)
    by_source: dict = {}
    for f in ms:
        by_source.setdefault(F.source.source(f), []).append(f)
    bad = []
    for x in by_source:
        if F(F.source.identity(x)) != F.target.identity(F.obj(x)):
            bad.append(("identity", x))
    for f in ms:
        for g in by_source.get(F.source.target(f), []):
            if F(F.source.compose(g, f)) != F.target.compose(F(g), F(f)):
                bad.append((g, f))
    return bad



def composition_table(cat: Category, morphisms: Iterable) -> tuple[list, dict]:
    """Index ``morphisms`` and tabulate every composable pair.

    Returns ``(ms, table)`` with ``table[(gi, fi)]`` the index of ``g∘f``,
    or ``-1`` when the composite falls outside the list.
    """
    ms = list(dict.fromkeys(morphisms))
    index = {f: i for i, f in enumerate(ms)}
    by_source: dict = {}
    for i, f in enumerate(ms):
        by_source.setdefault(cat.source(f), []).append(i)
    table = {}
    for fi, f in enumerate(ms):
        for gi in by_source.get(cat.target(f), []):
            table[(gi, fi)] = index.get(cat.compose(ms[gi], f), -1)
    return ms, table


def associativity_violations(cat: Category, morphisms: Iterable) -> tuple[int, list]:
    """Exhaustive associativity check over all composable triples.

    Returns ``(number of triples, witnesses)``; a composite missing from the
    list counts as a violation.
    """
    ms, table = composition_table(cat, morphisms)
    after: dict[int, list[int]] = {}
    for gi, fi in table:
        after.setdefault(fi, []).append(gi)
    bad, n = [], 0
    for (gi, fi), gf in table.items():
        for hi in after.get(gi, []):
            n += 1
            hg = table[(hi, gi)]
            left = table.get((hi, gf), -1) if gf >= 0 else -1
            right = table.get((hg, fi), -1) if hg >= 0 else -1
            if left < 0 or left != right:
                bad.append((ms[hi], ms[gi], ms[fi]))
    return n, bad
