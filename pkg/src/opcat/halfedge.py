"""Half-edge graphs with a genus map and explicit orderings.

A graph is stored densely.  Vertices are ``0..n-1`` in vertex order, and the
half-edges of vertex ``v`` are numbered consecutively in slot order, so the
half-edge ``(v, s)`` has id ``offset(v) + s``.  With that convention the whole
structure fits in four flat tuples (see :class:`Graph`).  Equality of :class:`Graph` values is therefore equality of
operadic graphs (orders included), not isomorphism; see :func:`canonical_form`
for the latter.

Leaves are indexed from 0.  Vertex order positions are reported 1-based only
where operadic composition indices are involved (see :mod:`opcat.operads`).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import ArityMismatch, Disconnected, GenusMismatch, ParseError


@dataclass(frozen=True)
class Graph:
    genus: tuple[int, ...]
    degrees: tuple[int, ...]
    inv: tuple[int, ...]
    leaves: tuple[int, ...]

    def __post_init__(self):
        if len(self.genus) != len(self.degrees):
            raise ValueError("genus and degrees differ in length")
        if any(g < 0 for g in self.genus) or any(d < 0 for d in self.degrees):
            raise ValueError("negative genus or degree")
        nh = sum(self.degrees)
        if len(self.inv) != nh:
            raise ValueError("involution has wrong length")
        for h, k in enumerate(self.inv):
            if not 0 <= k < nh or self.inv[k] != h:
                raise ValueError(f"inv is not an involution at {h}")
        fixed = sorted(h for h in range(nh) if self.inv[h] == h)
        if sorted(self.leaves) != fixed:
            raise ValueError("leaf order must list every fixed point once")

    # -- structure -----------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.degrees)

    @property
    def n_half_edges(self) -> int:
        return len(self.inv)

    @property
    def n_leaves(self) -> int:
        return len(self.leaves)

    @property
    def n_edges(self) -> int:
        return (self.n_half_edges - self.n_leaves) // 2

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate(self.degrees, initial=0))[:-1]

    @cached_property
    def _owner(self) -> tuple[int, ...]:
        return tuple(v for v, d in enumerate(self.degrees) for _ in range(d))

    @cached_property
    def _leaf_pos(self) -> dict[int, int]:
        return {h: k for k, h in enumerate(self.leaves)}

    def half(self, v: int, s: int) -> int:
        if not 0 <= s < self.degrees[v]:
            raise IndexError(f"vertex {v} has no slot {s}")
        return self.offsets[v] + s

    def vertex(self, h: int) -> int:
        return self._owner[h]

    def slot(self, h: int) -> int:
        return h - self.offsets[self._owner[h]]

    def is_leaf(self, h: int) -> bool:
        return self.inv[h] == h

    def leaf_index(self, h: int) -> int:
        return self._leaf_pos[h]

    def edges(self) -> list[tuple[int, int]]:
        return [(h, k) for h, k in enumerate(self.inv) if h < k]

    @cached_property
    def total_genus(self) -> int:
        """Sum of vertex genera plus the first Betti number."""
        return sum(self.genus) + betti(self)

    def components(self) -> list[list[int]]:
        return [list(c) for c in self._components]

    @cached_property
    def _components(self) -> tuple[tuple[int, ...], ...]:
        parent = list(range(self.n_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        own = self._owner
        for h, k in self.edges():
            a, b = find(own[h]), find(own[k])
            if a != b:
                parent[a] = b
        groups: dict[int, list[int]] = {}
        for v in range(self.n_vertices):
            groups.setdefault(find(v), []).append(v)
        return tuple(tuple(g) for g in sorted(groups.values()))

    def is_connected(self) -> bool:
        return self.n_vertices > 0 and len(self._components) == 1

    def with_genus(self, genus: Sequence[int]) -> "Graph":
        return Graph(tuple(genus), self.degrees, self.inv, self.leaves)

    def with_leaves(self, leaves: Sequence[int]) -> "Graph":
        return Graph(self.genus, self.degrees, self.inv, tuple(leaves))

    def __repr__(self):
        return (f"Graph(genus={self.genus}, degrees={self.degrees}, "
                f"inv={self.inv}, leaves={self.leaves})")


def corolla(degree: int, genus: int = 0, leaf_order: Sequence[int] | None = None) -> Graph:
    """One vertex, no edges; ``leaf_order[k]`` is the slot carrying leaf ``k``."""
    leaves = tuple(range(degree)) if leaf_order is None else tuple(leaf_order)
    return Graph((genus,), (degree,), tuple(range(degree)), leaves)


def build(degrees: Sequence[int], edges: Iterable[tuple[tuple[int, int], tuple[int, int]]],
          leaves: Sequence[tuple[int, int]], genus: Sequence[int] | None = None) -> Graph:
    """Convenience constructor from ``(vertex, slot)`` pairs."""
    offs = list(itertools.accumulate(degrees, initial=0))
    inv = list(range(offs[-1]))
    for (v, s), (w, t) in edges:
        a, b = offs[v] + s, offs[w] + t
        inv[a], inv[b] = b, a
    genus = tuple(genus) if genus is not None else (0,) * len(degrees)
    return Graph(genus, tuple(degrees), tuple(inv), tuple(offs[v] + s for v, s in leaves))


def betti(g: Graph) -> int:
    """First Betti number: edges - vertices + connected components."""
    return g.n_edges - g.n_vertices + len(g._components)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Reorder vertices: new vertex ``i`` is old vertex ``order[i]``.

    Slot orders and the leaf order are carried along unchanged.
    """
    degrees = tuple(g.degrees[v] for v in order)
    new_offs = list(itertools.accumulate(degrees, initial=0))
    pos = {v: i for i, v in enumerate(order)}
    hmap = [0] * g.n_half_edges
    for h in range(g.n_half_edges):
        hmap[h] = new_offs[pos[g.vertex(h)]] + g.slot(h)
    inv = [0] * g.n_half_edges
    for h in range(g.n_half_edges):
        inv[hmap[h]] = hmap[g.inv[h]]
    return Graph(tuple(g.genus[v] for v in order), degrees, tuple(inv),
                 tuple(hmap[h] for h in g.leaves))


def insert(p: Graph, parts: Sequence[Graph], check_genus: bool = True) -> Graph:
    """Insert ``parts[l]`` into vertex ``l`` of ``p``.

    The ``i``-th leaf of ``parts[l]`` takes the place of slot ``i`` of vertex
    ``l``.  Vertices of the result are the parts' vertices concatenated in
    order.
    """
    if len(parts) != p.n_vertices:
        raise ArityMismatch(f"{len(parts)} parts for {p.n_vertices} vertices")
    for l, q in enumerate(parts):
        if q.n_leaves != p.degrees[l]:
            raise ArityMismatch(
                f"part {l} has {q.n_leaves} leaves, vertex has degree {p.degrees[l]}")
        if check_genus and p.genus[l] != q.total_genus:
            raise GenusMismatch(
                f"vertex {l} has genus {p.genus[l]}, part has {q.total_genus}")
    base = list(itertools.accumulate((q.n_half_edges for q in parts), initial=0))
    inv: list[int] = []
    for l, q in enumerate(parts):
        inv.extend(base[l] + k for k in q.inv)
    leaves = [0] * p.n_leaves
    for l, q in enumerate(parts):
        for i, hq in enumerate(q.leaves):
            hp = p.half(l, i)
            me = base[l] + hq
            if p.is_leaf(hp):
                leaves[p.leaf_index(hp)] = me
            else:
                other = p.inv[hp]
                j, k = p.vertex(other), p.slot(other)
                inv[me] = base[j] + parts[j].leaves[k]
    return Graph(tuple(x for q in parts for x in q.genus),
                 tuple(x for q in parts for x in q.degrees), tuple(inv), tuple(leaves))


def induced(g: Graph, vertices: Sequence[int], leaf_order: Sequence[int]) -> Graph:
    """Subgraph on ``vertices`` (kept in the given order).

    Half-edges whose partner lies outside become leaves; ``leaf_order`` lists
    the original ids of the new graph's leaves in order.
    """
    inside = set(vertices)
    hmap: dict[int, int] = {}
    nxt = 0
    for v in vertices:
        for s in range(g.degrees[v]):
            hmap[g.half(v, s)] = nxt
            nxt += 1
    inv = [0] * nxt
    for h, new in hmap.items():
        k = g.inv[h]
        inv[new] = hmap[k] if g.vertex(k) in inside and k != h else new
    return Graph(tuple(g.genus[v] for v in vertices), tuple(g.degrees[v] for v in vertices),
                 tuple(inv), tuple(hmap[h] for h in leaf_order))


# -- depth-first search --------------------------------------------------

@dataclass(frozen=True)
class Traversal:
    vertex_order: tuple[int, ...]
    leaf_order: tuple[int, ...]
    entry: tuple[int, ...]          # entry slot per vertex (indexed by vertex)
    tree_edges: frozenset = field(default_factory=frozenset)  # (parent half, child half)


def dfs_from(g: Graph, v0: int, entry_slot: int, first_leaf: int | None = None) -> Traversal:
    """Clockwise depth-first search.

    A vertex entered through slot ``s`` continues through ``s+1, s+2, ...``
    cyclically.  Edges already traversed are skipped; an edge to a visited
    vertex is traversed without descending.
    """
    order: list[int] = []
    leaf_order: list[int] = [] if first_leaf is None else [first_leaf]
    entry = [-1] * g.n_vertices
    traversed: set[int] = set()
    tree: set[tuple[int, int]] = set()
    stack = [(v0, entry_slot, 1)]
    entry[v0] = entry_slot
    order.append(v0)
    while stack:
        v, e, t = stack.pop()
        d = g.degrees[v]
        while t < d:
            h = g.half(v, (e + t) % d)
            t += 1
            if g.is_leaf(h):
                leaf_order.append(h)
                continue
            if h in traversed:
                continue
            k = g.inv[h]
            traversed.update((h, k))
            w = g.vertex(k)
            if entry[w] < 0:
                entry[w] = g.slot(k)
                order.append(w)
                tree.add((h, k))
                stack.append((v, e, t))
                stack.append((w, g.slot(k), 1))
                break
    return Traversal(tuple(order), tuple(leaf_order), tuple(entry), frozenset(tree))


def dfs(g: Graph, start_leaf: int = 0) -> Traversal:
    if not 0 <= start_leaf < g.n_leaves:
        raise IndexError(f"no leaf {start_leaf}")
    h = g.leaves[start_leaf]
    tr = dfs_from(g, g.vertex(h), g.slot(h), first_leaf=h)
    if len(tr.vertex_order) != g.n_vertices:
        raise Disconnected("graph is not connected")
    return tr


def dfs_order(g: Graph, start_leaf: int = 0) -> list[int]:
    """Vertices in order of first visit by :func:`dfs`."""
    return list(dfs(g, start_leaf).vertex_order)


# -- canonical forms -----------------------------------------------------

def _encode(g: Graph) -> tuple:
    return (g.genus, g.degrees, g.inv, g.leaves)


def _component_candidates(g: Graph, comp: list[int]) -> Iterator[list[int]]:
    leaves_here = [k for k, h in enumerate(g.leaves) if g.vertex(h) in set(comp)]
    if leaves_here:
        h = g.leaves[leaves_here[0]]
        yield list(dfs_from(g, g.vertex(h), g.slot(h), h).vertex_order)
        return
    for v in comp:
        for s in range(max(g.degrees[v], 1)):
            yield list(dfs_from(g, v, s).vertex_order)


def canonical_form(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Isomorphism-class representative and the vertex relabeling used.

    Isomorphisms are vertex bijections that keep genus as well as the slot
    and leaf orders.  A DFS numbering started from a fixed leaf (or, for leafless
    components, from every possible start) is preserved by isomorphisms, so
    the minimum encoding over those numberings is a complete invariant.
    Returns ``(canon, order)`` with ``canon == relabel(g, order)``.
    """
    blocks = []
    for comp in g.components():
        best = None
        for cand in _component_candidates(g, comp):
            sub = relabel(g, cand + [v for v in range(g.n_vertices) if v not in set(cand)])
            key = _encode(sub)
            if best is None or key < best[0]:
                best = (key, cand)
        # leafful components sort before leafless ones via their first leaf
        first_leaf = min((k for k, h in enumerate(g.leaves) if g.vertex(h) in set(comp)),
                         default=len(g.leaves))
        local = induced(g, best[1], [h for h in g.leaves if g.vertex(h) in set(comp)])
        blocks.append(((first_leaf, _encode(local)), best[1]))
    blocks.sort(key=lambda b: b[0])
    order = tuple(v for _, cand in blocks for v in cand)
    return relabel(g, order), order


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return canonical_form(a)[0] == canonical_form(b)[0]


# -- enumeration ---------------------------------------------------------

def _matchings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    a = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for m in _matchings(rest):
            yield [(a, items[i])] + m


def _compositions(total: int, parts: int, minimum: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def enumerate_graphs(n_vertices: int, n_leaves: int, n_edges: int,
                     connected: bool = True) -> Iterator[Graph]:
    """Every operadic graph (genus 0) of the given size, orders included."""
    nh = n_leaves + 2 * n_edges
    minimum = 1 if n_vertices > 1 or nh > 0 else 0
    for degrees in _compositions(nh, n_vertices, minimum if connected else 0):
        for leaves in itertools.permutations(range(nh), n_leaves):
            rest = [h for h in range(nh) if h not in set(leaves)]
            for m in _matchings(rest):
                inv = list(range(nh))
                for a, b in m:
                    inv[a], inv[b] = b, a
                g = Graph((0,) * n_vertices, degrees, tuple(inv), leaves)
                if not connected or g.is_connected():
                    yield g


# -- serialization -------------------------------------------------------

def to_json(g: Graph) -> dict:
    return {
        "vertices": [{"id": v, "genus": g.genus[v]} for v in range(g.n_vertices)],
        "halfEdges": [{"id": h, "vertex": g.vertex(h), "slot": g.slot(h)}
                      for h in range(g.n_half_edges)],
        "edges": [list(e) for e in g.edges()],
        "leaves": list(g.leaves),
        "vertexOrder": list(range(g.n_vertices)),
    }


def from_json(data: dict) -> Graph:
    try:
        vorder = list(data["vertexOrder"])
        genus_of = {v["id"]: int(v["genus"]) for v in data["vertices"]}
        if sorted(vorder) != sorted(genus_of):
            raise ParseError("vertexOrder must list every vertex once")
        pos = {v: i for i, v in enumerate(vorder)}
        halves = sorted(data["halfEdges"], key=lambda h: (pos[h["vertex"]], h["slot"]))
        degrees = [0] * len(vorder)
        for h in halves:
            degrees[pos[h["vertex"]]] += 1
        hid = {h["id"]: i for i, h in enumerate(halves)}
        for i, h in enumerate(halves):
            if h["slot"] != i - sum(degrees[:pos[h["vertex"]]]):
                raise ParseError("slots of a vertex must be 0..deg-1")
        inv = list(range(len(halves)))
        for a, b in data["edges"]:
            inv[hid[a]], inv[hid[b]] = hid[b], hid[a]
        return Graph(tuple(genus_of[v] for v in vorder), tuple(degrees), tuple(inv),
                     tuple(hid[h] for h in data["leaves"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def dumps(g: Graph) -> str:
    return json.dumps(to_json(g), sort_keys=True)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n_vertices):
        lines.append(f'  v{v} [shape=circle, style=filled, label="{v + 1}:g{g.genus[v]}"];')
    for k, h in enumerate(g.leaves):
        lines.append(f'  l{k} [shape=circle, style="", label="{k}"];')
        lines.append(f'  v{g.vertex(h)} -- l{k} [taillabel="{g.slot(h)}"];')
    for h, k in g.edges():
        lines.append(f'  v{g.vertex(h)} -- v{g.vertex(k)} '
                     f'[taillabel="{g.slot(h)}", headlabel="{g.slot(k)}"];')
    lines.append("}")
    return "\n".join(lines)
