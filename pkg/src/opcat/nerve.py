"""Sequences over a semigroup with substitution morphisms.

A morphism out of ``(s_1, ..., s_n)`` replaces each ``s_i`` by a nonempty
block whose product is ``s_i``; it is stored as its block sizes next to both
endpoints.  Forgetting the letters gives an endpoint-preserving
injection ``[n+1] -> [m+1]`` of cut points, which is faithful.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Sequence

from .category import Category, FiniteFunctor
from .errors import Mismatch
from .finsets import FinMap, FinSetCategory


class Semigroup:
    name = "S"
    identity = None

    def mul(self, a, b):
        raise NotImplementedError

    def product(self, xs: Sequence):
        return reduce(self.mul, xs)

    def decompositions(self, s, k: int) -> Iterator[tuple]:
        """Sequences of length ``k`` with product ``s``."""
        raise NotImplementedError


@dataclass(frozen=True)
class FiniteSemigroup(Semigroup):
    """Multiplication table on ``0..n-1``."""

    table: tuple[tuple[int, ...], ...]
    identity: int | None = None
    name: str = "S"

    def mul(self, a, b):
        return self.table[a][b]

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def decompositions(self, s, k):
        for xs in itertools.product(self.elements, repeat=k):
            if self.product(xs) == s:
                yield xs


def cyclic_group(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0,
                           f"Z/{n}")


def trivial_monoid() -> FiniteSemigroup:
    return FiniteSemigroup(((0,),), 0, "1")


class PositiveIntegers(Semigroup):
    """``(Z_{>0}, +)``: no identity and finitely many decompositions."""

    name = "N+"

    def mul(self, a, b):
        return a + b

    def decompositions(self, s, k):
        for cuts in itertools.combinations(range(1, s), k - 1):
            bounds = (0,) + cuts + (s,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


@dataclass(frozen=True)
class Substitution:
    source: tuple
    target: tuple
    sizes: tuple[int, ...]

    def blocks(self) -> list[tuple]:
        out, k = [], 0
        for n in self.sizes:
            out.append(self.target[k:k + n])
            k += n
        return out

    def to_json(self) -> dict:
        return {"source": list(self.source), "target": list(self.target),
                "sizes": list(self.sizes)}


def _block_sizes(n: int, m: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(1, m), n - 1):
        bounds = (0,) + cuts + (m,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


class NerveCategory(Category):
    """Nonempty sequences over ``S`` up to ``length_bound``, with substitutions."""

    def __init__(self, S: Semigroup, length_bound: int = 8):
        self.S, self.length_bound = S, length_bound
        self.name = f"N({S.name})"

    def is_valid(self, f: Substitution) -> bool:
        return (len(f.sizes) == len(f.source) and all(k >= 1 for k in f.sizes)
                and sum(f.sizes) == len(f.target)
                and all(self.S.product(b) == s for b, s in zip(f.blocks(), f.source)))

    def compose(self, g: Substitution, f: Substitution) -> Substitution:
        if f.target != g.source:
            raise Mismatch("substitutions do not compose")
        sizes, k = [], 0
        for n in f.sizes:
            sizes.append(sum(g.sizes[k:k + n]))
            k += n
        return Substitution(f.source, g.target, tuple(sizes))

    def identity(self, x: tuple) -> Substitution:
        return Substitution(x, x, (1,) * len(x))

    def size(self, x: tuple) -> int:
        return len(x)

    def hom(self, x: tuple, y: tuple) -> list:
        out = []
        for sizes in _block_sizes(len(x), len(y)):
            f = Substitution(x, y, sizes)
            if self.is_valid(f):
                out.append(f)
        return out

    def out(self, x: tuple, bound: int) -> Iterator[Substitution]:
        bound = min(bound, self.length_bound)
        for m in range(len(x), bound + 1):
            for sizes in _block_sizes(len(x), m):
                choices = [list(self.S.decompositions(s, k)) for s, k in zip(x, sizes)]
                for blocks in itertools.product(*choices):
                    yield Substitution(x, tuple(a for b in blocks for a in b), sizes)

    def random_morphism(self, rng: random.Random, x: tuple, max_block: int) -> Substitution:
        blocks = []
        for s in x:
            while True:
                k = rng.randint(1, max_block)
                opts = list(self.S.decompositions(s, k))
                if opts:
                    blocks.append(rng.choice(opts))
                    break
        return Substitution(x, tuple(a for b in blocks for a in b),
                            tuple(len(b) for b in blocks))


def nerve_category(S: Semigroup, length_bound: int = 8) -> NerveCategory:
    return NerveCategory(S, length_bound)


def cut_points(f: Substitution) -> FinMap:
    """The endpoint-preserving injection ``[n+1] -> [m+1]`` of block boundaries."""
    cuts = [1]
    for k in f.sizes:
        cuts.append(cuts[-1] + k)
    return FinMap(len(f.source) + 1, len(f.target) + 1, tuple(cuts))


def projection(N: NerveCategory) -> FiniteFunctor:
    OI = FinSetCategory("OI", min_size=2, ep=True)
    return FiniteFunctor(N, OI, lambda x: len(x) + 1, cut_points, "cut")


def ones_key(f: Substitution) -> tuple:
    """Bucket by the number of ``1`` letters per block, then compare the runs
    of ``0`` letters around them."""
    ones, gaps = [], []
    for b in f.blocks():
        ones.append(sum(1 for a in b if a == 1))
        run = 0
        for a in b:
            if a == 1:
                gaps.append(run)
                run = 0
            else:
                run += 1
        gaps.append(run)
    return tuple(ones), tuple(gaps)


def slice_size(N: NerveCategory, x: tuple) -> int:
    """Number of morphisms out of ``x`` within the length bound."""
    return sum(1 for _ in N.out(x, N.length_bound))
