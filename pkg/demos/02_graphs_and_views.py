"""Half-edge graphs, their normal forms, and the colouring attached to
genus graphs."""

from opcat import catconstruct as C
from opcat import coloring as K
from opcat import halfedge as he
from opcat import operads as O

# a theta graph: two vertices joined by two edges, one leaf each
g = he.build([3, 3], [((0, 1), (1, 1)), ((0, 2), (1, 2))], [(0, 0), (1, 0)], genus=[1, 0])
canon, _ = he.canonical_form(g)
print("cycle rank:", he.betti(g), "| canonical degrees:", canon.degrees)

cg = K.greedy_coloring(g)
print("colours:", cg.col, "| bound:", K.color_bound(g))

# morphisms in the depth-first subcategory of planar trees
D = C.TwCategory(O.pOp(), "D")
x = he.build([3, 2], [((0, 1), (1, 0))], [(0, 0), (1, 1), (0, 2)])
by_size = {}
for f in D.out(x, 4):
    by_size[f.target.n_vertices] = by_size.get(f.target.n_vertices, 0) + 1
print("morphisms out of a 2-vertex tree by target size:", by_size)

# every Z morphism pulls colourings back uniquely
Z = C.TwCategory(O.mOpGN(), "Z")
src = Z.objects((1, 1), 1)[0]
for f in list(Z.out(src, 2))[:3]:
    lift = K.color_lift(f, K.greedy_coloring(f.target))
    print("lifted colouring:", lift.col)
