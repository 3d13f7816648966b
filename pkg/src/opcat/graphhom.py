"""Hom-sets between graph operations by decomposing the target.

A morphism ``x -> y`` in ``Tw(P)`` for a graph operad ``P`` is recovered from
which vertices of ``y`` come from which vertex of ``x`` (or from the lower
operation) together with a matching of the half-edges of ``x`` to the
boundary half-edges of the pieces.  Every valid choice gives one tree and
every tree arises once.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from . import halfedge as he
from .catconstruct import ThreeLevelTree
from .halfedge import Graph
from .operads import GraphOperad

BOTTOM = -1


def _boundary(y: Graph, part: set[int], vertices: list[int],
              cut: frozenset = frozenset()) -> list[int]:
    out = []
    for v in vertices:
        for s in range(y.degrees[v]):
            h = y.half(v, s)
            k = y.inv[h]
            if k == h or y.vertex(k) not in part or h in cut:
                out.append(h)
    return out


def _cut_induced(y: Graph, vertices: list[int], cut: frozenset, leaf_order) -> Graph:
    """Induced subgraph with the half-edges in ``cut`` turned into leaves."""
    inside = set(vertices)
    hmap, nxt = {}, 0
    for v in vertices:
        for s in range(y.degrees[v]):
            hmap[y.half(v, s)] = nxt
            nxt += 1
    inv = [0] * nxt
    for h, new in hmap.items():
        k = y.inv[h]
        keep = k != h and h not in cut and y.vertex(k) in inside
        inv[new] = hmap[k] if keep else new
    return Graph(tuple(y.genus[v] for v in vertices), tuple(y.degrees[v] for v in vertices),
                 tuple(inv), tuple(hmap[h] for h in leaf_order))


def _self_loops(x: Graph, i: int) -> int:
    return sum(1 for h, k in x.edges() if x.vertex(h) == i and x.vertex(k) == i)


def _cuts(y: Graph, part: list[int], n: int) -> Iterator[frozenset]:
    inside = set(part)
    intra = [(h, k) for h, k in y.edges() if y.vertex(h) in inside and y.vertex(k) in inside]
    for chosen in itertools.combinations(intra, n):
        yield frozenset(h for e in chosen for h in e)


def _assignments(nx: int, ny: int, allow_bottom: bool, rgs: bool) -> Iterator[tuple[int, ...]]:
    if rgs:
        def grow(prefix, top):
            if len(prefix) == ny:
                if top == nx:
                    yield tuple(prefix)
                return
            if nx - top > ny - len(prefix):
                return
            for c in range(min(top + 1, nx)):
                yield from grow(prefix + [c], max(top, c + 1))
        yield from grow([], 0)
        return
    values = list(range(nx)) + ([BOTTOM] if allow_bottom else [])
    for pi in itertools.product(values, repeat=ny):
        if len(set(pi) - {BOTTOM}) == nx:
            yield pi


def _connected(y: Graph, verts: list[int], cut: frozenset = frozenset()) -> bool:
    if not verts:
        return False
    inside = set(verts)
    seen, stack = {verts[0]}, [verts[0]]
    while stack:
        v = stack.pop()
        for s in range(y.degrees[v]):
            h = y.half(v, s)
            if h in cut:
                continue
            k = y.inv[h]
            w = y.vertex(k)
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(inside)


def _matchings(x: Graph, y: Graph, pi, boundaries, region: set[int], fixed_leaves: bool):
    """Backtrack over maps from half-edges of ``x`` to boundary half-edges."""
    beta: dict[int, int] = {}
    used: set[int] = set()
    order = list(range(x.n_half_edges))

    def options(h: int) -> list[int]:
        i = x.vertex(h)
        cands = [b for b in boundaries[i] if b not in used]
        if x.is_leaf(h):
            k = x.leaf_index(h)
            if fixed_leaves:
                want = y.leaves[k]
                return [want] if want in cands else []
            return [b for b in cands if y.inv[b] == b or y.vertex(y.inv[b]) not in region]
        partner = x.inv[h]
        if partner in beta:
            b = y.inv[beta[partner]]
            return [b] if b in cands and b != beta[partner] else []
        j = x.vertex(partner)
        return [b for b in cands if y.inv[b] != b and pi[y.vertex(y.inv[b])] == j]

    def rec(t: int):
        if t == len(order):
            yield dict(beta)
            return
        h = order[t]
        for b in options(h):
            beta[h] = b
            used.add(b)
            yield from rec(t + 1)
            used.discard(b)
            del beta[h]

    yield from rec(0)


def _lower(x: Graph, y: Graph, bottoms: list[int], leaf_images: list[int],
           has_genus: bool) -> Graph:
    """Contract the region of ``y`` coming from ``x`` to a single first vertex."""
    nl = len(leaf_images)
    hmap = {b: k for k, b in enumerate(leaf_images)}
    nxt = nl
    for v in bottoms:
        for s in range(y.degrees[v]):
            hmap[y.half(v, s)] = nxt
            nxt += 1
    inv = [0] * nxt
    for h, new in hmap.items():
        k = y.inv[h]
        inv[new] = new if k == h else hmap[k]
    genus = (x.total_genus if has_genus else 0,) + tuple(y.genus[v] for v in bottoms)
    return Graph(genus, (nl,) + tuple(y.degrees[v] for v in bottoms), tuple(inv),
                 tuple(hmap[h] for h in y.leaves))


def _intra_edges(y: Graph, part: list[int]) -> int:
    inside = set(part)
    return sum(1 for h, k in y.edges() if y.vertex(h) in inside and y.vertex(k) in inside)


def graph_hom(operad: GraphOperad, x: Graph, y: Graph, lower_identity: bool = True,
              rgs: bool = False, upper_ok=None) -> Iterator[ThreeLevelTree]:
    """All morphisms ``x -> y`` of ``Tw(P)`` (or ``C(P)^op`` if ``lower_identity``).

    ``rgs`` restricts to vertex assignments whose first occurrences come in
    order, as in the depth-first subcategories; ``upper_ok`` filters the
    inserted graphs before the composite is evaluated.
    """
    P = operad
    if P.out_color(x) != P.out_color(y) and lower_identity:
        return
    nx, ny = x.n_vertices, y.n_vertices
    loops = [_self_loops(x, i) for i in range(nx)]
    for pi in _assignments(nx, ny, not lower_identity, rgs):
        parts = [[v for v in range(ny) if pi[v] == i] for i in range(nx)]
        sets = [set(p) for p in parts]
        region = set().union(*sets)
        bottoms = [v for v in range(ny) if pi[v] == BOTTOM]
        if not lower_identity and len(_boundary(y, region, sorted(region))) != x.n_leaves:
            continue
        if P.has_genus and any(
                sum(y.genus[v] for v in part) + _intra_edges(y, part) - loops[i]
                - len(part) + 1 != x.genus[i] for i, part in enumerate(parts)):
            continue
        per_part = []
        for i, (part, pset) in enumerate(zip(parts, sets)):
            opts = []
            for cut in _cuts(y, part, loops[i]):
                b = _boundary(y, pset, part, cut)
                if len(b) == x.degrees[i] and _connected(y, part, cut):
                    opts.append((cut, b))
            per_part.append(opts)
        for choice in itertools.product(*per_part):
            cuts = [c for c, _ in choice]
            boundaries = [b for _, b in choice]
            for f in _trees(P, x, y, pi, parts, cuts, boundaries, region, bottoms,
                            lower_identity, upper_ok):
                yield f


def _trees(P, x, y, pi, parts, cuts, boundaries, region, bottoms, lower_identity,
           upper_ok=None):
    nx = x.n_vertices
    for beta in _matchings(x, y, pi, boundaries, region, lower_identity):
        ups = []
        for i in range(nx):
            lo = [beta[x.half(i, s)] for s in range(x.degrees[i])]
            ups.append(_cut_induced(y, parts[i], cuts[i], lo))
        if P.has_genus and any(q.total_genus != x.genus[i] for i, q in enumerate(ups)):
            continue
        if not all(P.contains(q) for q in ups):
            continue
        if upper_ok is not None and not all(upper_ok(q) for q in ups):
            continue
        if lower_identity:
            lower = P.identity(P.out_color(x))
        else:
            images = [beta[h] for h in x.leaves]
            lower = _lower(x, y, bottoms, images, P.has_genus)
            if not P.contains(lower):
                continue
        idx = tuple(v + 1 for p in parts for v in p) + tuple(v + 1 for v in bottoms)
        try:
            f = ThreeLevelTree(P, lower, x, tuple(ups), idx)
        except ValueError:
            continue
        if f.target == y:
            yield f
