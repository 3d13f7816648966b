"""Concrete single-coloured set-operads.

Table operads (``uCom``, ``Com``, ``uAs``, ``As``) store an operation by its
arity or by a word; graph operads (``pOp``, ``sOp``, ``cOp``, ``mOp``,
``mOpGN``) store a :class:`~opcat.halfedge.Graph`; the free symmetric operad
on named generators stores a term tree.

Composition indices ``i`` in ``compose(p, i, q)`` are 1-based.  A permutation
``sigma`` acts in one-line notation: input ``k`` of ``p`` becomes input
``sigma[k-1]`` of ``act(p, sigma)``, so ``act(act(p, s), t) == act(p, t∘s)``.

For graph operads the arity of an operation is its number of vertices; the
colour of a vertex is its degree (paired with its genus for ``mOpGN``) and
the output colour is the leaf count (paired with total genus).
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Any, Hashable, Iterator, Sequence

from . import halfedge as he
from .errors import BadPermutation, ColorMismatch, SlotOutOfRange
from .halfedge import Graph


def check_perm(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise BadPermutation(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def perm_compose(t: Sequence[int], s: Sequence[int]) -> tuple[int, ...]:
    """One-line composite ``t∘s``."""
    return tuple(t[x - 1] for x in s)


def perm_inverse(s: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(s)
    for k, x in enumerate(s, 1):
        out[x - 1] = k
    return tuple(out)


@dataclass(frozen=True)
class Operad:
    name: str
    nu: bool = False

    # subclasses implement these
    def arity(self, p) -> int:
        raise NotImplementedError

    def in_colors(self, p) -> tuple:
        return (0,) * self.arity(p)

    def out_color(self, p) -> Hashable:
        return 0

    def _compose(self, p, i: int, q):
        raise NotImplementedError

    def _act(self, p, sigma: tuple[int, ...]):
        raise NotImplementedError

    def identity(self, color: Hashable = 0):
        raise NotImplementedError

    def contains(self, p) -> bool:
        raise NotImplementedError

    def operations(self, color: Hashable, arity: int) -> Iterator[Any]:
        """All operations with the given output colour and arity."""
        raise NotImplementedError

    # shared behaviour

    def is_identity(self, p) -> bool:
        return self.arity(p) == 1 and p == self.identity(self.out_color(p))

    def compose(self, p, i: int, q):
        n = self.arity(p)
        if not 1 <= i <= n:
            raise SlotOutOfRange(f"slot {i} outside 1..{n}")
        if self.out_color(q) != self.in_colors(p)[i - 1]:
            raise ColorMismatch(
                f"output colour {self.out_color(q)} vs input colour {self.in_colors(p)[i - 1]}")
        return self._compose(p, i, q)

    def act(self, p, sigma: Sequence[int]):
        return self._act(p, check_perm(sigma, self.arity(p)))

    def gamma(self, p, qs: Sequence[Any]):
        """Full composition ``p(q_1, ..., q_n)``."""
        if len(qs) != self.arity(p):
            raise SlotOutOfRange(f"{len(qs)} operations for arity {self.arity(p)}")
        for i in range(len(qs), 0, -1):
            p = self.compose(p, i, qs[i - 1])
        return p

    def nu_restrict(self) -> "Operad":
        from dataclasses import replace
        return replace(self, nu=True)

    def min_arity(self) -> int:
        return 1 if self.nu else 0


# -- table operads ---------------------------------------------------------

@dataclass(frozen=True)
class CommutativeOperad(Operad):
    """``uCom``: one operation ``n`` in each arity; ``Com`` drops arity 0."""

    name: str = "uCom"

    def arity(self, p):
        return p

    def _compose(self, p, i, q):
        return p + q - 1

    def _act(self, p, sigma):
        return p

    def identity(self, color=0):
        return 1

    def contains(self, p):
        return isinstance(p, int) and not isinstance(p, bool) and p >= self.min_arity()

    def operations(self, color, arity):
        if arity >= self.min_arity():
            yield arity


@dataclass(frozen=True)
class AssociativeOperad(Operad):
    """``uAs`` as a symmetric operad: an operation is the order of a product.

    ``(2, 1, 3)`` is ``x2·x1·x3``.  The standard operation of arity ``n`` is
    ``(1, ..., n)``.
    """

    name: str = "uAs"

    def arity(self, p):
        return len(p)

    def _compose(self, p, i, q):
        m = len(q)
        out = []
        for x in p:
            if x < i:
                out.append(x)
            elif x == i:
                out.extend(y + i - 1 for y in q)
            else:
                out.append(x + m - 1)
        return tuple(out)

    def _act(self, p, sigma):
        return tuple(sigma[x - 1] for x in p)

    def identity(self, color=0):
        return (1,)

    def standard(self, n: int) -> tuple[int, ...]:
        return tuple(range(1, n + 1))

    def contains(self, p):
        return (isinstance(p, tuple) and sorted(p) == list(range(1, len(p) + 1))
                and len(p) >= self.min_arity())

    def operations(self, color, arity):
        if arity >= self.min_arity():
            yield from itertools.permutations(range(1, arity + 1))


def uCom() -> CommutativeOperad:
    return CommutativeOperad("uCom")


def Com() -> CommutativeOperad:
    return CommutativeOperad("Com", nu=True)


def uAs() -> AssociativeOperad:
    return AssociativeOperad("uAs")


def As() -> AssociativeOperad:
    return AssociativeOperad("As", nu=True)


# -- free symmetric operad -----------------------------------------------

def _term_leaves(t) -> list[int]:
    if isinstance(t, int):
        return [t]
    return [x for c in t[1] for x in _term_leaves(c)]


def _term_map(t, f):
    if isinstance(t, int):
        return f(t)
    return (t[0], tuple(_term_map(c, f) for c in t[1]))


@dataclass(frozen=True)
class FreeOperad(Operad):
    """Free symmetric operad on named generators.

    A term is either an input label (``int``) or ``(name, children)``.
    Equality of terms is equality in the free operad.
    """

    name: str = "free"
    generators: tuple[tuple[str, int], ...] = ()

    def gen(self, name: str):
        arity = dict(self.generators)[name]
        return (name, tuple(range(1, arity + 1)))

    def arity(self, p):
        return len(_term_leaves(p))

    def _compose(self, p, i, q):
        m = self.arity(q)

        def sub(x):
            if x < i:
                return x
            if x > i:
                return x + m - 1
            return _term_map(q, lambda y: y + i - 1)

        return _term_map(p, sub)

    def _act(self, p, sigma):
        return _term_map(p, lambda x: sigma[x - 1])

    def identity(self, color=0):
        return 1

    def contains(self, p):
        arities = dict(self.generators)

        def ok(t):
            if isinstance(t, int):
                return True
            return arities.get(t[0]) == len(t[1]) and all(ok(c) for c in t[1])

        leaves = _term_leaves(p)
        return ok(p) and sorted(leaves) == list(range(1, len(leaves) + 1))

    def operations(self, color, arity):
        raise NotImplementedError("the free operad is not enumerated")


# -- graph operads -----------------------------------------------------------

GRAPH_FAMILIES = ("pOp", "sOp", "cOp", "mOp", "mOpGN")


@dataclass(frozen=True)
class GraphOperad(Operad):
    """Operads whose algebras are planar/symmetric/cyclic/modular operads.

    Composition ``p ∘_i q`` inserts the graph ``q`` into vertex ``i`` of
    ``p``.  In rooted families slot 0 of every vertex faces the root and
    leaf 0 is the root leaf.
    """

    name: str = "sOp"
    nu: bool = True

    def __post_init__(self):
        if self.name not in GRAPH_FAMILIES:
            raise ValueError(f"unknown graph family {self.name}")

    @property
    def has_genus(self) -> bool:
        return self.name == "mOpGN"

    @property
    def rooted(self) -> bool:
        return self.name in ("pOp", "sOp")

    def arity(self, p: Graph):
        return p.n_vertices

    def vertex_color(self, p: Graph, v: int):
        return (p.degrees[v], p.genus[v]) if self.has_genus else p.degrees[v]

    def in_colors(self, p):
        return tuple(self.vertex_color(p, v) for v in range(p.n_vertices))

    def out_color(self, p):
        return (p.n_leaves, p.total_genus) if self.has_genus else p.n_leaves

    def identity(self, color=1):
        if self.has_genus:
            return he.corolla(color[0], color[1])
        return he.corolla(color)

    def is_identity(self, p):
        return p.n_vertices == 1 and p.n_edges == 0 and p.leaves == tuple(range(p.n_leaves))

    def _compose(self, p, i, q):
        parts = [self.identity(c) for c in self.in_colors(p)]
        parts[i - 1] = q
        return he.insert(p, parts, check_genus=self.has_genus)

    def _act(self, p, sigma):
        order = [0] * len(sigma)
        for k, x in enumerate(sigma):
            order[x - 1] = k
        return he.relabel(p, order)

    def contains(self, p) -> bool:
        if not isinstance(p, Graph) or p.n_vertices == 0 or not p.is_connected():
            return False
        if not self.has_genus and any(p.genus):
            return False
        if self.name in ("pOp", "sOp", "cOp") and he.betti(p) != 0:
            return False
        if self.rooted:
            if p.n_leaves == 0:
                return False
            tr = he.dfs(p, 0)
            if any(e != 0 for e in tr.entry):
                return False
            if self.name == "pOp" and tr.leaf_order != p.leaves:
                return False
        return True

    def operations(self, color, arity, max_betti: int | None = None) -> Iterator[Graph]:
        """Operations with ``arity`` vertices and output colour ``color``.

        For ``mOp`` the number of cycles is unbounded; ``max_betti`` caps it
        (default 0).
        """
        if arity < 1:
            return
        if self.rooted:
            yield from self._rooted_operations(color, arity)
            return
        if self.has_genus:
            leaves, total = color
            betti_range = range(0, total + 1)
        else:
            leaves, total = color, 0
            top = 0 if self.name in ("pOp", "sOp", "cOp") else (max_betti or 0)
            betti_range = range(0, top + 1)
        for b in betti_range:
            n_edges = arity - 1 + b
            for g in he.enumerate_graphs(arity, leaves, n_edges):
                if self.has_genus:
                    for genus in he._compositions(total - b, arity, 0):
                        gg = g.with_genus(genus)
                        if self.contains(gg):
                            yield gg
                elif self.contains(g):
                    yield g


    def _rooted_operations(self, leaves: int, arity: int) -> Iterator[Graph]:
        seen = set()
        for shape in _shapes(arity, leaves - 1):
            g = _shape_graph(shape)
            tails = [g.leaves[1:]]
            if self.name == "sOp":
                tails = itertools.permutations(g.leaves[1:])
            for tail in tails:
                h = g.with_leaves((g.leaves[0],) + tuple(tail))
                for order in itertools.permutations(range(arity)):
                    r = he.relabel(h, order)
                    if r not in seen:
                        seen.add(r)
                        yield r


@functools.lru_cache(maxsize=None)
def _shapes(k: int, l: int) -> tuple:
    """Planar rooted trees with ``k`` vertices and ``l`` input leaves.

    A tree is the tuple of its children; ``None`` marks an input leaf.
    """
    if k < 1 or l < 0:
        return ()
    return tuple(_sequences(k - 1, l))


@functools.lru_cache(maxsize=None)
def _sequences(k: int, l: int) -> tuple:
    if k == 0 and l == 0:
        return ((),)
    out = []
    if l > 0:
        out += [(None,) + rest for rest in _sequences(k, l - 1)]
    for k1 in range(1, k + 1):
        for l1 in range(0, l + 1):
            for sub in _shapes(k1, l1):
                out += [(sub,) + rest for rest in _sequences(k - k1, l - l1)]
    return tuple(out)


def _shape_graph(shape) -> Graph:
    """Depth-first realization: slot 0 faces the root, leaves in planar order."""
    degrees, edges, leaves = [], [], [(0, 0)]

    def visit(node) -> int:
        v = len(degrees)
        degrees.append(1 + len(node))
        for s, child in enumerate(node, 1):
            if child is None:
                leaves.append((v, s))
            else:
                w = visit(child)
                edges.append(((v, s), (w, 0)))
        return v

    visit(shape)
    return he.build(degrees, edges, leaves)


def pOp() -> GraphOperad:
    return GraphOperad("pOp")


def sOp() -> GraphOperad:
    return GraphOperad("sOp")


def cOp() -> GraphOperad:
    return GraphOperad("cOp")


def mOp() -> GraphOperad:
    return GraphOperad("mOp")


def mOpGN() -> GraphOperad:
    return GraphOperad("mOpGN")


def nu_restrict(operad: Operad) -> Operad:
    return operad.nu_restrict()


def by_name(name: str) -> Operad:
    table = {"uCom": uCom, "Com": Com, "uAs": uAs, "As": As, "pOp": pOp, "sOp": sOp,
             "cOp": cOp, "mOp": mOp, "mOpGN": mOpGN}
    if name.startswith("nu") and name[2:] in table:
        return table[name[2:]]().nu_restrict()
    return table[name]()


# -- random operations ---------------------------------------------------------

def _rooted_splitter(rng: random.Random, d: int) -> Graph:
    """Random two-vertex planar tree with ``d`` leaves (leaf 0 is the root)."""
    a = rng.randint(1, d)
    b = rng.randint(a, d)
    da = d - (b - a) + 1
    edges = [((0, a), (1, 0))]
    leaves = [(0, 0)]
    leaves += [(0, k) for k in range(1, a)]
    leaves += [(1, k - a + 1) for k in range(a, b)]
    leaves += [(0, k - (b - a) + 1) for k in range(b, d)]
    return he.build([da, b - a + 1], edges, leaves)


def _modular_splitter(rng: random.Random, d: int, genus: int) -> Graph:
    """Random connected two-vertex graph with ``d`` leaves and total genus ``genus``."""
    e = rng.randint(1, genus + 1)
    rest = genus - (e - 1)
    ga = rng.randint(0, rest)
    to_b = [k for k in range(d) if rng.random() < 0.5]
    to_a = [k for k in range(d) if k not in to_b]
    slots_a = [("leaf", k) for k in to_a] + [("edge", j) for j in range(e)]
    slots_b = [("leaf", k) for k in to_b] + [("edge", j) for j in range(e)]
    rng.shuffle(slots_a)
    rng.shuffle(slots_b)
    leaf_at = {}
    ends: dict[int, list] = {}
    for v, slots in ((0, slots_a), (1, slots_b)):
        for s, (kind, x) in enumerate(slots):
            if kind == "leaf":
                leaf_at[x] = (v, s)
            else:
                ends.setdefault(x, []).append((v, s))
    edges = [tuple(ends[j]) for j in range(e)]
    return he.build([len(slots_a), len(slots_b)], edges, [leaf_at[k] for k in range(d)],
                    genus=[ga, rest - ga])


def random_operation(rng: random.Random, operad: Operad, color, n_vertices: int):
    """A random operation of ``operad`` with ``n_vertices`` vertices (graph
    operads) or arity ``n_vertices`` (table operads)."""
    if isinstance(operad, CommutativeOperad):
        return n_vertices
    if isinstance(operad, AssociativeOperad):
        p = list(range(1, n_vertices + 1))
        rng.shuffle(p)
        return tuple(p)
    if not isinstance(operad, GraphOperad):
        raise TypeError(f"cannot sample from {operad.name}")
    p = operad.identity(color)
    while p.n_vertices < n_vertices:
        v = rng.randrange(p.n_vertices)
        if operad.has_genus:
            q = _modular_splitter(rng, p.degrees[v], p.genus[v])
        elif operad.rooted:
            q = _rooted_splitter(rng, p.degrees[v])
        else:
            q = _modular_splitter(rng, p.degrees[v], 0)
            if operad.name == "mOp":
                q = q.with_genus((0, 0))
        if rng.random() < 0.5:
            q = operad.act(q, (2, 1))
        p = operad.compose(p, v + 1, q)
    if operad.name in ("sOp", "cOp", "mOp", "mOpGN") and p.n_leaves > 1:
        tail = list(p.leaves[1:])
        rng.shuffle(tail)
        head = [p.leaves[0]] if operad.rooted else []
        if not operad.rooted:
            tail = [p.leaves[0]] + tail
            rng.shuffle(tail)
        p = p.with_leaves(head + tail)
    sigma = list(range(1, p.n_vertices + 1))
    rng.shuffle(sigma)
    return operad.act(p, sigma)


def graft(g: Graph, leaf: int, degree: int, through_slot: int = 1) -> Graph:
    """Attach a new last vertex of ``degree`` at leaf number ``leaf``.

    Away from the root the new vertex hangs by its slot 0 and its other
    slots replace the leaf in the leaf order.  At the root leaf (``leaf ==
    0``) the new vertex goes underneath: its slot ``through_slot`` meets the
    old root and its slot 0 becomes the root leaf.
    """
    h = g.leaves[leaf]
    base = g.n_half_edges
    inv = list(g.inv) + list(range(base, base + degree))
    leaves = list(g.leaves)
    if leaf == 0 and g.n_leaves and degree >= 2:
        j = through_slot
        inv[h], inv[base + j] = base + j, h
        before = [base + s for s in range(1, j)]
        after = [base + s for s in range(j + 1, degree)]
        leaves = [base] + before + leaves[1:] + after
    else:
        inv[h], inv[base] = base, h
        leaves[leaf:leaf + 1] = [base + s for s in range(1, degree)]
    return Graph(g.genus + (0,), g.degrees + (degree,), tuple(inv), tuple(leaves))
