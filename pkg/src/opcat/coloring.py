"""Coloured genus graphs over the depth-first category ``Z``.

A colouring assigns a natural number to every half-edge.  Validity is
checked on two derived structures: the *pruned* graph (genus-0 stumps
removed with their edges, repeatedly) and the *contracted* graph (maximal
runs of genus-0 degree-2 vertices of the pruned graph merged into single
edges).  Each element of the contracted graph is a set of half-edges that
must share a colour; distinct elements get distinct colours.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .catconstruct import ThreeLevelTree, from3
from .errors import InvalidColoring, NoLift
from .halfedge import Graph

BOUND_CONSTANT = 9


@dataclass(frozen=True)
class ColoredGraph:
    graph: Graph
    col: tuple[int, ...]

    def __post_init__(self):
        if len(self.col) != self.graph.n_half_edges:
            raise InvalidColoring("one colour per half-edge")
        if any(c < 0 for c in self.col):
            raise InvalidColoring("colours are natural numbers")

    def to_json(self) -> dict:
        from .halfedge import to_json
        return {"graph": to_json(self.graph), "col": list(self.col)}


def color_bound(g: Graph, constant: int = BOUND_CONSTANT) -> int:
    """``constant * (sum of vertex genera + cycle rank + leaves)``."""
    from .halfedge import betti
    return constant * (sum(g.genus) + betti(g) + g.n_leaves)


def pruned(g: Graph) -> tuple[set[int], set[int]]:
    """Vertices and half-edges removed when pruning genus-0 stumps."""
    alive = {h for h in range(g.n_half_edges)}
    gone_v: set[int] = set()
    changed = True
    while changed:
        changed = False
        for v in range(g.n_vertices):
            if v in gone_v or g.genus[v]:
                continue
            hs = [g.half(v, s) for s in range(g.degrees[v]) if g.half(v, s) in alive]
            if len(hs) != 1 or g.inv[hs[0]] == hs[0]:
                continue
            if len(gone_v) == g.n_vertices - 1:
                break
            h = hs[0]
            alive -= {h, g.inv[h]}
            gone_v.add(v)
            changed = True
    return gone_v, set(range(g.n_half_edges)) - alive


def elements(g: Graph) -> list[frozenset[int]]:
    """Half-edge classes of the contracted graph, in order of their least member."""
    gone_v, gone_h = pruned(g)
    alive = [h for h in range(g.n_half_edges) if h not in gone_h]
    parent = {h: h for h in alive}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for h in alive:
        union(h, g.inv[h])
    for v in range(g.n_vertices):
        if v in gone_v or g.genus[v]:
            continue
        hs = [g.half(v, s) for s in range(g.degrees[v]) if g.half(v, s) not in gone_h]
        if len(hs) == 2:
            union(hs[0], hs[1])
    classes: dict[int, set[int]] = {}
    for h in alive:
        classes.setdefault(find(h), set()).add(h)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def color_validate(cg: ColoredGraph, constant: int = BOUND_CONSTANT) -> list[tuple[int, str]]:
    """List of ``(condition, message)``; empty when the colouring is valid."""
    g, col = cg.graph, cg.col
    bad: list[tuple[int, str]] = []
    for a, b in g.edges():
        if col[a] != col[b]:
            bad.append((1, f"edge ({a},{b}) has colours {col[a]} and {col[b]}"))
    _, gone_h = pruned(g)
    for h in range(g.n_half_edges):
        if h in gone_h and col[h] != 0:
            bad.append((2, f"pruned half-edge {h} has colour {col[h]}"))
        if h not in gone_h and g.inv[h] != h and col[h] == 0:
            bad.append((2, f"surviving half-edge {h} has colour 0"))
    els = elements(g)
    seen: dict[int, int] = {}
    for k, e in enumerate(els):
        cs = {col[h] for h in e}
        if len(cs) > 1:
            bad.append((3, f"run {sorted(e)} is not monochromatic"))
            continue
        c = cs.pop()
        if c in seen:
            bad.append((3, f"elements {seen[c]} and {k} share colour {c}"))
        seen[c] = k
    top = color_bound(g, constant)
    for h, c in enumerate(col):
        if c > top:
            bad.append((4, f"colour {c} of half-edge {h} exceeds {top}"))
    return bad


def greedy_coloring(g: Graph, constant: int = BOUND_CONSTANT) -> ColoredGraph:
    """Colour 0 on pruned half-edges, then ``1, 2, ...`` on elements."""
    col = [0] * g.n_half_edges
    for k, e in enumerate(elements(g), 1):
        for h in e:
            col[h] = k
    cg = ColoredGraph(g, tuple(col))
    bad = color_validate(cg, constant)
    if bad:
        raise InvalidColoring(f"greedy colouring fails: {bad[0][1]}")
    return cg


def half_edge_images(f: ThreeLevelTree) -> list[int]:
    """For every half-edge of the source, the half-edge of the target it
    becomes: slot ``s`` of vertex ``v`` is leaf ``s`` of the graph inserted
    at ``v``."""
    x, y = f.source, f.target
    t = from3(f)
    images = []
    for v, (q, block) in enumerate(zip(t.uppers, t.blocks)):
        for s in range(x.degrees[v]):
            h = q.leaves[s]
            w = block[q.vertex(h)] - 1
            images.append(y.half(w, q.slot(h)))
    return images


def color_lift(f: ThreeLevelTree, target: ColoredGraph,
               constant: int = BOUND_CONSTANT) -> ColoredGraph:
    """The colouring of the source pulled back along ``f``."""
    if target.graph != f.target:
        raise InvalidColoring("colouring is not on the target of the morphism")
    cg = ColoredGraph(f.source, tuple(target.col[h] for h in half_edge_images(f)))
    bad = color_validate(cg, constant)
    if bad:
        raise NoLift(f"pulled-back colouring is invalid: {bad[0][1]}")
    return cg


def count_compatible(f: ThreeLevelTree, target: ColoredGraph,
                     constant: int = BOUND_CONSTANT) -> int:
    """Number of valid source colourings compatible with ``f``.

    Valid colourings are constant on each element and zero on pruned
    half-edges, so they are enumerated element by element over the full
    colour range, keeping those that agree with the target.
    """
    x = f.source
    img = half_edge_images(f)
    top = color_bound(x, constant)
    _, gone_h = pruned(x)
    if any(target.col[img[h]] != 0 for h in gone_h):
        return 0
    els = elements(x)
    options = [[c for c in range(top + 1) if all(target.col[img[h]] == c for h in e)]
               for e in els]
    count = 0
    for choice in itertools.product(*options):
        if len(set(choice)) != len(choice):
            continue
        col = [0] * x.n_half_edges
        for e, c in zip(els, choice):
            for h in e:
                col[h] = c
        if not color_validate(ColoredGraph(x, tuple(col)), constant):
            count += 1
    return count
