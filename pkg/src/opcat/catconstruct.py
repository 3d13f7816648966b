"""Categories built from an operad: ``C(P)``, ``Tw(P)``, ``U(P)`` and views.

A morphism of ``C(P)`` is a :class:`TwoLevelTree`: a root operation (the
target) with one upper operation grafted on each input and a labelling of
the upper inputs.  Reading the tree bottom-up and applying the labelling as a
permutation evaluates the source.

A morphism of ``Tw(P)`` is a :class:`ThreeLevelTree`: the source sits in the
middle, uppers are grafted on its inputs, and a lower operation receives the
middle through its first input.  ``C(P)^op`` is the case of an identity
lower.  :class:`UTree` is the same data with only the colours of the middle.

Labels are a permutation in one-line notation over the planar order of the
free inputs: first the inputs of the uppers (left to right), then inputs
``2..k`` of the lower.  Within each vertex the labels increase.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

from . import halfedge as he
from .category import Category
from .errors import BudgetExceeded, ColorMismatch, IndexOutOfRange, Mismatch, NotApplicable
from .finsets import FinMap, is_min_fiber_ordered
from .halfedge import Graph
from .operads import (AssociativeOperad, CommutativeOperad, FreeOperad, GraphOperad, Operad,
                      check_perm, graft, random_operation)


def _blocks(sizes: Sequence[int], labels: Sequence[int]) -> list[tuple[int, ...]]:
    out, k = [], 0
    for s in sizes:
        out.append(tuple(labels[k:k + s]))
        k += s
    return out


def _check_increasing(blocks) -> None:
    for b in blocks:
        if any(x >= y for x, y in zip(b, b[1:])):
            raise ValueError(f"labels {b} do not increase within a vertex")


@dataclass(frozen=True)
class TwoLevelTree:
    operad: Operad = field(compare=False, repr=False)
    target: Any
    uppers: tuple
    leaf_idx: tuple[int, ...]

    def __post_init__(self):
        P = self.operad
        object.__setattr__(self, "uppers", tuple(self.uppers))
        object.__setattr__(self, "leaf_idx", tuple(self.leaf_idx))
        cols = P.in_colors(self.target)
        if len(self.uppers) != len(cols):
            raise Mismatch(f"{len(self.uppers)} uppers on arity {len(cols)}")
        for c, q in zip(cols, self.uppers):
            if P.out_color(q) != c:
                raise ColorMismatch(f"upper of colour {P.out_color(q)} on input {c}")
        check_perm(self.leaf_idx, sum(self.sizes))
        _check_increasing(self.blocks)

    @functools.cached_property
    def sizes(self) -> list[int]:
        return [self.operad.arity(q) for q in self.uppers]

    @functools.cached_property
    def blocks(self) -> list[tuple[int, ...]]:
        return _blocks(self.sizes, self.leaf_idx)

    @functools.cached_property
    def source(self):
        P = self.operad
        return P.act(P.gamma(self.target, self.uppers), self.leaf_idx)

    def to_json(self) -> dict:
        return {"view": "C", "target": op_to_json(self.target),
                "uppers": [op_to_json(q) for q in self.uppers],
                "leafIdx": list(self.leaf_idx)}


class _Lowered:
    """Shared behaviour of three-level trees and their ``U`` shadows."""

    @functools.cached_property
    def sizes(self) -> list[int]:
        P = self.operad
        return [P.arity(q) for q in self.uppers] + [P.arity(self.lower) - 1]

    @functools.cached_property
    def blocks(self) -> list[tuple[int, ...]]:
        return _blocks(self.sizes, self.leaf_idx)

    def _validate(self, middle_out, middle_in):
        P = self.operad
        object.__setattr__(self, "uppers", tuple(self.uppers))
        object.__setattr__(self, "leaf_idx", tuple(self.leaf_idx))
        if len(self.uppers) != len(middle_in):
            raise Mismatch(f"{len(self.uppers)} uppers on arity {len(middle_in)}")
        for c, q in zip(middle_in, self.uppers):
            if P.out_color(q) != c:
                raise ColorMismatch(f"upper of colour {P.out_color(q)} on input {c}")
        if P.arity(self.lower) < 1 or P.in_colors(self.lower)[0] != middle_out:
            raise ColorMismatch("lower operation cannot receive the middle vertex")
        check_perm(self.leaf_idx, sum(self.sizes))
        _check_increasing(self.blocks)

    @property
    def lower_is_identity(self) -> bool:
        return self.operad.is_identity(self.lower)


@dataclass(frozen=True)
class ThreeLevelTree(_Lowered):
    operad: Operad = field(compare=False, repr=False)
    lower: Any
    middle: Any
    uppers: tuple
    leaf_idx: tuple[int, ...]

    def __post_init__(self):
        P = self.operad
        self._validate(P.out_color(self.middle), P.in_colors(self.middle))

    @property
    def source(self):
        return self.middle

    @functools.cached_property
    def target(self):
        P = self.operad
        inner = P.compose(self.lower, 1, P.gamma(self.middle, self.uppers))
        return P.act(inner, self.leaf_idx)

    def to_json(self) -> dict:
        return {"view": "Tw", "middle": op_to_json(self.middle),
                "target": op_to_json(self.target), "lower": op_to_json(self.lower),
                "uppers": [op_to_json(q) for q in self.uppers],
                "leafIdx": list(self.leaf_idx)}


def colors_of(operad: Operad, p) -> tuple:
    """The ``U(P)`` object underlying an operation: (output, inputs)."""
    return (operad.out_color(p), tuple(operad.in_colors(p)))


@dataclass(frozen=True)
class UTree(_Lowered):
    operad: Operad = field(compare=False, repr=False)
    lower: Any
    colors: tuple
    uppers: tuple
    leaf_idx: tuple[int, ...]

    def __post_init__(self):
        self._validate(self.colors[0], self.colors[1])

    @property
    def source(self):
        return self.colors

    @functools.cached_property
    def target(self):
        P = self.operad
        planar = [c for q in self.uppers for c in P.in_colors(q)]
        planar += list(P.in_colors(self.lower)[1:])
        ins = [None] * len(planar)
        for k, c in enumerate(planar):
            ins[self.leaf_idx[k] - 1] = c
        return (P.out_color(self.lower), tuple(ins))


# -- evaluation of C(P) ------------------------------------------------------

def source_of2(f: TwoLevelTree):
    return f.source


def target_of3(f: ThreeLevelTree):
    return f.target


def identity2(operad: Operad, p) -> TwoLevelTree:
    ups = tuple(operad.identity(c) for c in operad.in_colors(p))
    return TwoLevelTree(operad, p, ups, tuple(range(1, len(ups) + 1)))


def identity3(operad: Operad, p) -> ThreeLevelTree:
    ups = tuple(operad.identity(c) for c in operad.in_colors(p))
    return ThreeLevelTree(operad, operad.identity(operad.out_color(p)), p, ups,
                          tuple(range(1, len(ups) + 1)))


def identity_u(operad: Operad, colors: tuple) -> UTree:
    ups = tuple(operad.identity(c) for c in colors[1])
    return UTree(operad, operad.identity(colors[0]), colors, ups,
                 tuple(range(1, len(ups) + 1)))


def _renormalize(operad: Operad, op, labels: list, fixed_first: bool):
    """Act on ``op`` so that its labels increase; a fixed first input stays put."""
    start = 1 if fixed_first else 0
    free = labels[start:]
    order = sorted(range(len(free)), key=lambda k: free[k])
    rank = [0] * len(free)
    for r, k in enumerate(order):
        rank[k] = r + 1 + start
    sigma = ([1] if fixed_first else []) + rank
    return operad.act(op, sigma), sorted(free)


def compose3(g, f):
    """``g ∘ f`` for three-level trees (or ``U`` trees): ``f`` first.

    The uppers of ``g`` are grafted onto the labelled inputs of ``f``, the
    lower of ``g`` receives the lower of ``f`` through its first input, and
    every region off the middle vertex is evaluated and renormalized.
    """
    P = f.operad
    if g.source != f.target:
        raise Mismatch("source of the second morphism is not the target of the first")
    g_blocks = g.blocks
    f_blocks = f.blocks
    uppers, labels = [], []
    for q, a_labels in zip(f.uppers, f_blocks[:-1]):
        op = P.gamma(q, [g.uppers[a - 1] for a in a_labels])
        lab = [x for a in a_labels for x in g_blocks[a - 1]]
        op, lab = _renormalize(P, op, lab, False)
        uppers.append(op)
        labels.extend(lab)
    lower_in = P.in_colors(f.lower)
    parts = [P.identity(lower_in[0])] + [g.uppers[a - 1] for a in f_blocks[-1]]
    op = P.compose(g.lower, 1, P.gamma(f.lower, parts))
    lab = [None] + [x for a in f_blocks[-1] for x in g_blocks[a - 1]] + list(g_blocks[-1])
    op, lab = _renormalize(P, op, lab, True)
    labels.extend(lab)
    if isinstance(f, UTree):
        return UTree(P, op, f.colors, tuple(uppers), tuple(labels))
    return ThreeLevelTree(P, op, f.middle, tuple(uppers), tuple(labels))


def to3(f: TwoLevelTree) -> ThreeLevelTree:
    """A ``C(P)`` morphism read as a ``C(P)^op`` morphism of ``Tw(P)``."""
    P = f.operad
    return ThreeLevelTree(P, P.identity(P.out_color(f.target)), f.target, f.uppers,
                          f.leaf_idx)


def from3(f: ThreeLevelTree) -> TwoLevelTree:
    if not f.lower_is_identity:
        raise NotApplicable("lower vertex is not an identity")
    return TwoLevelTree(f.operad, f.middle, f.uppers, f.leaf_idx)


def compose2(f: TwoLevelTree, g: TwoLevelTree) -> TwoLevelTree:
    """``f ∘ g`` in ``C(P)`` with ``g: r -> q`` and ``f: q -> p``."""
    if g.target != f.source:
        raise Mismatch("target of g differs from source of f")
    return from3(compose3(to3(g), to3(f)))


def cardinality(f: TwoLevelTree) -> FinMap:
    """Leaf label ``j`` goes to the index of the upper vertex holding it."""
    table = [0] * len(f.leaf_idx)
    for i, block in enumerate(f.blocks, 1):
        for j in block:
            table[j - 1] = i
    return FinMap(len(table), len(f.uppers), tuple(table))


def fiber(g: TwoLevelTree, f: TwoLevelTree, i: int) -> TwoLevelTree:
    """The fiber over input ``i`` of ``f`` of the composable ``g``."""
    if g.target != f.source:
        raise Mismatch("g does not land in the source of f")
    if not 1 <= i <= len(f.uppers):
        raise IndexOutOfRange(f"fiber index {i} outside 1..{len(f.uppers)}")
    over = f.blocks[i - 1]
    g_blocks = g.blocks
    ups = [g.uppers[a - 1] for a in over]
    raw = [x for a in over for x in g_blocks[a - 1]]
    rank = {x: r for r, x in enumerate(sorted(raw), 1)}
    return TwoLevelTree(f.operad, f.uppers[i - 1], tuple(ups), tuple(rank[x] for x in raw))


def to_u(f: ThreeLevelTree) -> UTree:
    P = f.operad
    return UTree(P, f.lower, colors_of(P, f.middle), f.uppers, f.leaf_idx)


def lift_u(source, u: UTree) -> ThreeLevelTree:
    P = u.operad
    if colors_of(P, source) != u.colors:
        raise ColorMismatch("source operation has other colours than the U-morphism")
    return ThreeLevelTree(P, u.lower, source, u.uppers, u.leaf_idx)


# -- JSON ------------------------------------------------------------------

def op_to_json(p):
    if isinstance(p, Graph):
        return he.to_json(p)
    if isinstance(p, tuple):
        return [op_to_json(x) for x in p]
    return p


def op_from_json(operad: Operad, data):
    if isinstance(operad, GraphOperad):
        return he.from_json(data)
    if isinstance(operad, AssociativeOperad):
        return tuple(data)
    if isinstance(operad, FreeOperad):
        return _term_from_json(data)
    return data


def _term_from_json(t):
    if isinstance(t, int):
        return t
    name, kids = t
    return (name, tuple(_term_from_json(k) for k in kids))


def morphism_from_json(operad: Operad, data: dict):
    ups = tuple(op_from_json(operad, q) for q in data["uppers"])
    idx = tuple(data["leafIdx"])
    if "middle" in data:
        return ThreeLevelTree(operad, op_from_json(operad, data["lower"]),
                              op_from_json(operad, data["middle"]), ups, idx)
    return TwoLevelTree(operad, op_from_json(operad, data["target"]), ups, idx)


# -- enumeration -------------------------------------------------------------

def shuffles(sizes: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Labellings of blocks of the given sizes, increasing within each block."""
    total = sum(sizes)

    def rec(remaining: tuple[int, ...], k: int):
        if k == len(sizes):
            yield ()
            return
        for chosen in itertools.combinations(remaining, sizes[k]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(rest, k + 1):
                yield chosen + tail

    yield from rec(tuple(range(1, total + 1)), 0)


def _compositions(total: int, parts: int, minimum: int) -> Iterator[tuple[int, ...]]:
    return he._compositions(total, parts, minimum)


VIEWS = ("Tw", "Cop", "active", "R>0", "D", "D'", "Z")


class CCategory(Category):
    """``C(P)`` with two-level trees.  Only table operads are enumerated."""

    def __init__(self, operad: Operad):
        self.operad = operad
        self.name = f"C({operad.name})"

    def compose(self, g, f):
        return compose2(g, f)

    def identity(self, x):
        return identity2(self.operad, x)

    def size(self, x) -> int:
        return self.operad.arity(x)

    def into(self, y, bound: int) -> Iterator[TwoLevelTree]:
        """Morphisms into ``y`` whose source has arity at most ``bound``."""
        for f in TwCategory(self.operad, "Cop").out(y, bound):
            yield from3(f)

    def hom(self, x, y) -> list:
        return [f for f in self.into(y, self.size(x)) if f.source == x]


def _dfs_leaves(q: Graph) -> bool:
    return q.leaves == he.dfs(q, 0).leaf_order


class TwCategory(Category):
    """``Tw(P)`` and its subcategories; morphisms are three-level trees.

    ``view`` selects the subcategory: ``Cop``/``active`` (identity lower),
    ``R>0`` (no arity-0 uppers or lower), and the graph subcategories ``D``
    (planar trees in depth-first order), ``D'`` (the same for symmetric
    trees, uppers with planar leaf order) and ``Z`` (genus graphs in
    depth-first normal form).
    """

    def __init__(self, operad: Operad, view: str = "Tw", max_leaves: int | None = None,
                 budget: int = 10 ** 6):
        if view not in VIEWS:
            raise NotApplicable(f"unknown view {view}")
        self.operad, self.view = operad, view
        self.max_leaves, self.budget = max_leaves, budget
        self._ops: dict = {}
        self.name = f"{view}({operad.name})"

    @property
    def lower_identity(self) -> bool:
        return self.view != "Tw" and self.view != "R>0"

    def compose(self, g, f):
        return compose3(g, f)

    def identity(self, x):
        return identity3(self.operad, x)

    def size(self, x) -> int:
        return self.operad.arity(x)

    # membership

    def is_object(self, x) -> bool:
        if not self.operad.contains(x):
            return False
        if self.view in ("D", "D'"):
            return tuple(he.dfs(x, 0).vertex_order) == tuple(range(x.n_vertices))
        if self.view == "Z":
            return is_z(x)
        return True

    def admits(self, f: ThreeLevelTree) -> bool:
        P = self.operad
        if self.lower_identity and not f.lower_is_identity:
            return False
        if self.view == "R>0":
            return all(P.arity(q) >= 1 for q in f.uppers) and P.arity(f.lower) >= 1
        if self.view in ("D", "D'", "Z"):
            if not (self.is_object(f.source) and self.is_object(f.target)):
                return False
            if not is_min_fiber_ordered(cardinality(from3(f))):
                return False
            if self.view in ("D'", "Z"):
                return all(_dfs_leaves(q) for q in f.uppers)
        return True

    # enumeration

    def hom(self, x, y) -> list:
        if isinstance(self.operad, GraphOperad):
            from .graphhom import graph_hom
            rgs = self.view in ("D", "D'", "Z")
            ok = _dfs_leaves if self.view in ("D'", "Z") else None
            return [f for f in graph_hom(self.operad, x, y, self.lower_identity, rgs, ok)
                    if self.admits(f)]
        return [f for f in self.out(x, self.size(y)) if f.target == y]

    def objects(self, color, k: int) -> list:
        """Objects of a depth-first view with output colour ``color`` and ``k`` vertices."""
        from .operads import _shape_graph, _shapes
        key = ("obj", color, k)
        if key in self._ops:
            return self._ops[key]
        if self.view == "D":
            objs = [_shape_graph(sh) for sh in _shapes(k, color - 1)]
        elif self.view == "D'":
            objs = []
            for sh in _shapes(k, color - 1):
                g = _shape_graph(sh)
                objs += [g.with_leaves((g.leaves[0],) + t)
                         for t in itertools.permutations(g.leaves[1:])]
        elif self.view == "Z":
            objs = [g for g in self._operations(color, k) if is_z(g)]
        else:
            raise NotApplicable(f"objects are not enumerated in view {self.view}")
        self._ops[key] = objs
        return objs

    def out(self, x, bound: int) -> Iterator[ThreeLevelTree]:
        if self.view in ("D", "D'", "Z"):
            for k in range(x.n_vertices, bound + 1):
                for y in self.objects(self.operad.out_color(x), k):
                    yield from self.hom(x, y)
            return
        count = 0
        for f in self._out(x, bound):
            if self.admits(f):
                count += 1
                if count > self.budget:
                    raise BudgetExceeded(f"more than {self.budget} morphisms")
                yield f

    def _operations(self, color, k: int) -> list:
        key = (color, k)
        if key not in self._ops:
            self._ops[key] = list(self.operad.operations(color, k))
        return self._ops[key]

    def _lower_ops(self, x, k0: int) -> Iterator:
        P = self.operad
        c = P.out_color(x)
        if k0 == 1:
            yield P.identity(c)
            return
        if self.lower_identity:
            return
        if not isinstance(P, GraphOperad):
            yield from P.operations(c, k0)
            return
        if self.max_leaves is None:
            raise NotApplicable("graph lowers need max_leaves")
        leaf_colors = range(self.max_leaves + 1)
        if P.has_genus:
            leaf_colors = [(n, g) for n in leaf_colors for g in range(c[1], c[1] + 3)]
        for color in leaf_colors:
            for q in self._operations(color, k0):
                if P.in_colors(q)[0] == c:
                    yield q

    def _out(self, x, bound: int) -> Iterator[ThreeLevelTree]:
        P = self.operad
        cols = P.in_colors(x)
        n = len(cols)
        lo = max(P.min_arity(), 1 if self.view == "R>0" else 0)
        if isinstance(P, GraphOperad):
            lo = 1
        for total in range(bound + 1):
            for k0 in range(1, total + 2):
                rest = total - (k0 - 1)
                if isinstance(P, GraphOperad):
                    rest = total - k0  # bound counts vertices of the target
                if rest < 0:
                    continue
                for ks in _compositions(rest, n, lo):
                    choices = [self._operations(c, k) for c, k in zip(cols, ks)]
                    lowers = list(self._lower_ops(x, k0))
                    for lower in lowers:
                        for ups in itertools.product(*choices):
                            sizes = [P.arity(q) for q in ups] + [P.arity(lower) - 1]
                            for idx in shuffles(sizes):
                                yield ThreeLevelTree(P, lower, x, ups, idx)


class UCategory(Category):
    """``U(P)``: objects are colour profiles ``(out, ins)``."""

    def __init__(self, operad: Operad):
        self.operad = operad
        self.tw = TwCategory(operad, "Tw")
        self.name = f"U({operad.name})"

    def compose(self, g, f):
        return compose3(g, f)

    def identity(self, x):
        return identity_u(self.operad, x)

    def size(self, x) -> int:
        return len(x[1])

    def out(self, x, bound: int) -> Iterator[UTree]:
        rep = self.representative(x)
        for f in self.tw.out(rep, bound):
            yield to_u(f)

    def hom(self, x, y) -> list:
        return [f for f in self.out(x, self.size(y)) if f.target == y]

    def representative(self, x):
        """Some operation with colour profile ``x`` (table operads)."""
        P = self.operad
        n = len(x[1])
        for p in P.operations(x[0], n):
            if colors_of(P, p) == x:
                return p
        raise NotApplicable(f"no operation with colours {x}")


# -- random morphisms ------------------------------------------------------

def random_morphism(rng: random.Random, category: TwCategory, x, extra: int,
                    lower_extra: int | None = None) -> ThreeLevelTree:
    """A random morphism out of ``x`` adding about ``extra`` vertices or inputs.

    Graph operads: ``extra`` new vertices are spread over the uppers, and in
    ``Tw`` views up to ``lower_extra`` are grafted below.  Table operads:
    arities of uppers and lower are drawn so that the target arity grows by
    at most ``extra``.
    """
    P = category.operad
    cols = P.in_colors(x)
    n = len(cols)
    allow_lower = not category.lower_identity
    if isinstance(P, GraphOperad):
        counts = [1] * n
        for _ in range(extra):
            counts[rng.randrange(n)] += 1
        ups = [random_operation(rng, P, c, k) for c, k in zip(cols, counts)]
        lower = P.identity(P.out_color(x))
        if allow_lower:
            for _ in range(rng.randint(0, lower_extra or 0)):
                leaf = rng.randrange(lower.n_leaves) if lower.n_leaves else 0
                deg = rng.randint(1 if leaf else 2, 3)
                if P.has_genus:
                    # lower vertices keep genus 0; the middle keeps its genus
                    g = graft(lower.with_genus((0,) * lower.n_vertices), leaf, deg)
                    lower = g.with_genus(lower.genus + (0,))
                else:
                    lower = graft(lower, leaf, deg)
            if P.name == "sOp" and lower.n_leaves > 2:
                tail = list(lower.leaves[1:])
                rng.shuffle(tail)
                lower = lower.with_leaves((lower.leaves[0],) + tuple(tail))
            if not P.contains(lower):
                lower = P.identity(P.out_color(x))
    else:
        lo = max(P.min_arity(), 1 if category.view == "R>0" else 0)
        arities = [rng.randint(lo, 2) for _ in range(n)]
        k0 = rng.randint(1, 1 + min(extra, 2)) if allow_lower else 1
        ups = [next(iter(_random_op(rng, P, k))) for k in arities]
        lower = next(iter(_random_op(rng, P, k0))) if k0 > 1 else P.identity()
    sizes = [P.arity(q) for q in ups] + [P.arity(lower) - 1]
    labels = list(range(1, sum(sizes) + 1))
    rng.shuffle(labels)
    idx = [x for b in _blocks(sizes, labels) for x in sorted(b)]
    return ThreeLevelTree(P, lower, x, tuple(ups), tuple(idx))


def _random_op(rng: random.Random, P: Operad, k: int):
    if isinstance(P, CommutativeOperad):
        yield k
    else:
        yield random_operation(rng, P, 0, k)


# -- normal forms -----------------------------------------------------------

def _reorder_iso(operad: GraphOperad, x: Graph, rotations: Sequence[int],
                 order: Sequence[int]) -> ThreeLevelTree:
    """Isomorphism out of ``x`` rotating slots and listing vertices in ``order``."""
    ups = []
    for v, e in enumerate(rotations):
        d = x.degrees[v]
        ups.append(he.corolla(d, x.genus[v] if operad.has_genus else 0,
                              [(k - e) % d for k in range(d)] if d else []))
    pos = {v: i for i, v in enumerate(order)}
    idx = tuple(pos[v] + 1 for v in range(x.n_vertices))
    return ThreeLevelTree(operad, operad.identity(operad.out_color(x)), x, tuple(ups), idx)


def normalize_d(x: Graph, operad: GraphOperad | None = None):
    """Depth-first reindexing of a rooted tree; returns ``(rep, iso)``."""
    from .operads import pOp
    P = operad or pOp()
    if not P.rooted or not P.contains(x):
        raise NotApplicable("normal form needs a rooted tree of the operad")
    order = he.dfs(x, 0).vertex_order
    iso = _reorder_iso(P, x, [0] * x.n_vertices, order)
    return iso.target, iso


def normalize_dprime(x: Graph):
    from .operads import sOp
    return normalize_d(x, sOp())


def is_z(x: Graph) -> bool:
    if x.n_leaves == 0 or not x.is_connected() or x.leaves[0] != 0:
        return False
    tr = he.dfs(x, 0)
    return (all(e == 0 for e in tr.entry)
            and tuple(tr.vertex_order) == tuple(range(x.n_vertices)))


def to_z(x: Graph, operad: GraphOperad | None = None):
    """Rotate every vertex so it is entered at slot 0, then reindex by DFS."""
    from .operads import mOpGN
    P = operad or mOpGN()
    if x.n_leaves == 0 or not P.contains(x):
        raise NotApplicable("Z normal form needs a connected graph with a leaf")
    tr = he.dfs(x, 0)
    iso = _reorder_iso(P, x, tr.entry, tr.vertex_order)
    return iso.target, iso


def dfs_reorder(x: Graph) -> Graph:
    return he.relabel(x, he.dfs(x, 0).vertex_order)


def random_dfs_morphism(rng: random.Random, category: TwCategory, x: Graph,
                        extra: int) -> ThreeLevelTree:
    """A random morphism of ``D`` or ``Z``: a random insertion followed by the
    isomorphism onto the normal form of its target."""
    P = category.operad
    f = random_morphism(rng, TwCategory(P, "Cop"), x, extra)
    if category.view == "D":
        _, iso = normalize_d(f.target, P)
    elif category.view == "Z":
        _, iso = to_z(f.target, P)
    else:
        raise NotApplicable(f"no normal form for view {category.view}")
    g = compose3(iso, f)
    if not category.admits(g):
        raise NotApplicable("normalized insertion left the subcategory")
    return g
