"""Probes for property (G2): the divisibility preorder ``f <= g`` (some ``h``
with ``h f = g``), antichain search and comparable-pair extraction, plus the
functors between planar rooted trees and the depth-first tree category.

Every positive answer carries a witness that is re-checked by composing.
Negative answers are only ever claims about an explicitly enumerated
hom-set, and are tagged with the bound used.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import halfedge as he
from .catconstruct import ThreeLevelTree, cardinality, from3
from .category import Category
from .halfedge import Graph
from .operads import _shape_graph, _shapes, pOp

FOUND, NONE, NOT_FOUND = "found", "none", "not-found"


@dataclass
class ProbeResult:
    result: str
    witness: Any = None
    bound: int | None = None
    elapsed: float = 0.0
    pair: tuple[int, int] | None = None
    candidates: int = 0

    def __bool__(self) -> bool:
        return self.result == FOUND

    def to_json(self) -> dict:
        w = self.witness
        if hasattr(w, "to_json"):
            w = w.to_json()
        elif w is not None:
            w = repr(w)
        return {"result": self.result, "witnesses": [] if w is None else [w],
                "pair": list(self.pair) if self.pair else None,
                "bound": self.bound, "elapsed": round(self.elapsed, 6)}


def leq(category: Category, f, g, bound: int | None = None) -> ProbeResult:
    """Search ``h`` with ``h ∘ f = g``.

    The candidates are the whole hom-set between the two targets, so when
    its target fits under ``bound`` a ``none`` answer is exhaustive.  A target
    above the bound is not searched and yields ``not-found``.
    """
    t0 = time.perf_counter()
    if category.source(f) != category.source(g):
        return ProbeResult(NONE, bound=bound, elapsed=time.perf_counter() - t0)
    a, b = category.target(f), category.target(g)
    if bound is not None and category.size(b) > bound:
        return ProbeResult(NOT_FOUND, bound=bound, elapsed=time.perf_counter() - t0)
    n = 0
    for h in category.hom(a, b):
        n += 1
        if category.compose(h, f) == g:
            return ProbeResult(FOUND, h, bound, time.perf_counter() - t0, candidates=n)
    return ProbeResult(NONE, None, bound, time.perf_counter() - t0, candidates=n)


@dataclass
class DivPoset:
    """The preorder ``<=`` on a finite list of morphisms out of one object."""

    category: Category
    base: Any
    morphisms: list
    bound: int | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def probe(self, i: int, j: int) -> ProbeResult:
        if (i, j) not in self._cache:
            self._cache[i, j] = leq(self.category, self.morphisms[i], self.morphisms[j],
                                    self.bound)
        return self._cache[i, j]

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.probe(i, j))

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def is_antichain(self, idx: Sequence[int]) -> bool:
        return all(not self.comparable(i, j) for i, j in itertools.combinations(idx, 2))


def antichain_search(category: Category, c, k: int, bound: int,
                     candidates: list | None = None) -> ProbeResult:
    """Find ``k`` pairwise incomparable morphisms out of ``c``.

    ``candidates`` defaults to everything out of ``c`` up to ``bound``.
    Backtracking keeps the candidate order, so the answer is deterministic.
    """
    t0 = time.perf_counter()
    ms = list(candidates) if candidates is not None else list(category.out(c, bound))
    poset = DivPoset(category, c, ms, bound)

    def extend(chosen: list[int], start: int):
        if len(chosen) == k:
            return chosen
        for i in range(start, len(ms)):
            if all(not poset.comparable(i, j) for j in chosen):
                found = extend(chosen + [i], i + 1)
                if found:
                    return found
        return None

    hit = extend([], 0)
    if hit is None:
        return ProbeResult(NOT_FOUND, bound=bound, elapsed=time.perf_counter() - t0)
    return ProbeResult(FOUND, [ms[i] for i in hit], bound, time.perf_counter() - t0)


def _dominates(u: Sequence, v: Sequence) -> bool:
    return len(u) == len(v) and all(a <= b for a, b in zip(u, v))


def comparable_pair(category: Category, seq: Sequence, bound: int | None = None,
                    key: Callable[[Any], tuple] | None = None) -> ProbeResult:
    """Find ``i < j`` with ``seq[i] <= seq[j]``, certified by a witness.

    ``key`` maps a morphism to ``(bucket, counts)``.  Pairs in the same bucket
    whose counts grow componentwise are tried first, in the spirit of the
    subsequence arguments; all remaining pairs follow.  Indices are 0-based.
    """
    t0 = time.perf_counter()
    n = len(seq)
    pairs = list(itertools.combinations(range(n), 2))
    if key is not None:
        keys = [key(f) for f in seq]

        def rank(p):
            (bi, ci), (bj, cj) = keys[p[0]], keys[p[1]]
            return (0 if bi == bj and _dominates(ci, cj) else 1 if bi == bj else 2, p)

        pairs.sort(key=rank)
    for i, j in pairs:
        if seq[i] == seq[j]:
            h = category.identity(category.target(seq[i]))
            return ProbeResult(FOUND, h, bound, time.perf_counter() - t0, pair=(i, j))
        r = leq(category, seq[i], seq[j], bound)
        if r:
            return ProbeResult(FOUND, r.witness, bound, time.perf_counter() - t0, pair=(i, j))
    return ProbeResult(NOT_FOUND, bound=bound, elapsed=time.perf_counter() - t0)


def certify(category: Category, seq: Sequence, result: ProbeResult) -> bool:
    """Independent re-check of a comparable pair."""
    if not result:
        return False
    i, j = result.pair
    return i < j and category.compose(result.witness, seq[i]) == seq[j]


# -- bucketing keys ------------------------------------------------------------

def _splice(g: Graph, drop: set[int], partner: dict[int, int], leaves: list[int]) -> Graph:
    """Rebuild ``g`` without the vertices in ``drop``; ``partner`` and
    ``leaves`` describe the surviving half-edges by their old ids."""
    keep = [v for v in range(g.n_vertices) if v not in drop]
    new_id, k = {}, 0
    for v in keep:
        for s in range(g.degrees[v]):
            new_id[g.half(v, s)] = k
            k += 1
    inv = [new_id[partner[h]] for v in keep for h in (g.half(v, s) for s in range(g.degrees[v]))]
    return Graph(tuple(g.genus[v] for v in keep), tuple(g.degrees[v] for v in keep),
                 tuple(inv), tuple(new_id[h] for h in leaves))


def suppress_degree_two(g: Graph) -> tuple[Graph, int]:
    """Contract genus-0 vertices of degree 2; returns the graph and their number."""
    partner = {h: g.inv[h] for h in range(g.n_half_edges)}
    leaves = list(g.leaves)
    drop: set[int] = set()
    for v in range(g.n_vertices):
        if g.degrees[v] != 2 or g.genus[v] or len(drop) == g.n_vertices - 1:
            continue
        a, b = g.half(v, 0), g.half(v, 1)
        pa, pb = partner[a], partner[b]
        if pa == b:
            continue
        if pa == a and pb == b:
            continue
        if pa == a:
            partner[pb] = pb
            leaves[leaves.index(a)] = pb
        elif pb == b:
            partner[pa] = pa
            leaves[leaves.index(b)] = pa
        else:
            partner[pa], partner[pb] = pb, pa
        drop.add(v)
    return _splice(g, drop, partner, leaves), len(drop)


def d_key(f: ThreeLevelTree) -> tuple:
    """Homeomorphism types of the inserted trees, then their degree-2 counts."""
    types, counts = [], []
    for q in f.uppers:
        r, n = suppress_degree_two(q)
        types.append(he.canonical_form(r)[0])
        counts.append(n)
    return tuple(types), tuple(counts)


def gos_key(f) -> tuple:
    base = f.base
    return base.map.table, base.grading


# -- planar rooted trees and the depth-first tree category ---------------------

@dataclass(frozen=True)
class PlanarTree:
    """A planar rooted tree given by nested child tuples; vertices are
    numbered in preorder."""

    shape: tuple

    @property
    def children(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = []

        def visit(node):
            v = len(out)
            out.append([])
            for c in node:
                out[v].append(visit(c))
            return v

        visit(self.shape)
        return tuple(tuple(c) for c in out)

    @property
    def size(self) -> int:
        return len(self.children)

    def parents(self) -> tuple[int, ...]:
        par = [-1] * self.size
        for v, cs in enumerate(self.children):
            for c in cs:
                par[c] = v
        return tuple(par)


def planar_trees(n: int) -> list[PlanarTree]:
    return [PlanarTree(s) for s in _shapes(n, 0)]


def _ancestors(par: Sequence[int], v: int) -> list[int]:
    out = [v]
    while par[out[-1]] >= 0:
        out.append(par[out[-1]])
    return out


@dataclass(frozen=True)
class PTMorphism:
    source: PlanarTree
    target: PlanarTree
    table: tuple[int, ...]


def pt_morphisms(s: PlanarTree, t: PlanarTree) -> list[PTMorphism]:
    """Root-preserving injections that keep the preorder and both preserve
    and reflect the ancestor relation."""
    ps, pt = s.parents(), t.parents()
    anc_s = [set(_ancestors(ps, v)) for v in range(s.size)]
    anc_t = [set(_ancestors(pt, v)) for v in range(t.size)]
    out = []
    for table in itertools.combinations(range(1, t.size), s.size - 1):
        table = (0,) + table
        if all((a in anc_s[b]) == (table[a] in anc_t[table[b]])
               for a, b in itertools.combinations(range(s.size), 2)):
            out.append(PTMorphism(s, t, table))
    return out


def pt_compose(h: PTMorphism, f: PTMorphism) -> PTMorphism:
    return PTMorphism(f.source, h.target, tuple(h.table[x] for x in f.table))


def g_pt(T: PlanarTree) -> Graph:
    """The tree with its root leaf added and no input leaves."""
    return _shape_graph(T.shape)


def g_pt_morphism(f: PTMorphism) -> ThreeLevelTree:
    """Insert into each vertex ``v`` the part of the target between ``f(v)``
    and the images of the children of ``v``."""
    s, t = f.source, f.target
    pt, ct = t.parents(), t.children
    img = set(f.table)
    pre = {x: v for v, x in enumerate(f.table)}
    region = [0] * t.size
    for u in range(t.size):
        region[u] = next(pre[a] for a in _ancestors(pt, u) if a in img)
    uppers = []
    for v in range(s.size):
        verts = [u for u in range(t.size) if region[u] == v]
        loc = {u: i for i, u in enumerate(verts)}
        degrees = [1 + len(ct[u]) for u in verts]
        edges, leaves = [], [(0, 0)]

        def walk(u):
            for k, c in enumerate(ct[u], 1):
                if c in loc:
                    edges.append(((loc[u], k), (loc[c], 0)))
                    walk(c)
                else:
                    leaves.append((loc[u], k))

        walk(verts[0])
        uppers.append(he.build(degrees, edges, leaves))
    idx = tuple(u + 1 for v in range(s.size) for u in range(t.size) if region[u] == v)
    P = pOp()
    return ThreeLevelTree(P, P.identity(1), g_pt(s), tuple(uppers), idx)


def _j_numbering(x: Graph) -> tuple[PlanarTree, list[int], list[int]]:
    """Preorder walk of ``x`` turning input leaves into stumps.

    Returns the tree, the new id of every vertex and of every input leaf.
    """
    vid, lid = [0] * x.n_vertices, [0] * x.n_leaves
    counter = itertools.count()

    def visit(v: int):
        vid[v] = next(counter)
        kids = []
        for s in range(1, x.degrees[v]):
            h = x.half(v, s)
            if x.inv[h] == h:
                lid[x.leaf_index(h)] = next(counter)
                kids.append(())
            else:
                kids.append(visit(x.vertex(x.inv[h])))
        return tuple(kids)

    return PlanarTree(visit(0)), vid, lid


def j_d(x: Graph) -> PlanarTree:
    return _j_numbering(x)[0]


def j_d_morphism(f: ThreeLevelTree) -> PTMorphism:
    """Vertex ``v`` goes to the lowest vertex inserted into it; stumps over
    input leaves go to the stumps over the matching leaves."""
    p, q = f.source, f.target
    sp, vp, lp = _j_numbering(p)
    tq, vq, lq = _j_numbering(q)
    card = cardinality(from3(f))
    table = [0] * sp.size
    for v in range(p.n_vertices):
        lowest = min(card.fiber(v + 1)) - 1
        table[vp[v]] = vq[lowest]
    for k in range(1, p.n_leaves):
        table[lp[k]] = lq[k]
    return PTMorphism(sp, tq, tuple(table))
