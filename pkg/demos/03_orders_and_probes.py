"""Admissible orders on truncations, and searching random sequences for a
comparable pair."""

import random

from opcat import catconstruct as C
from opcat import finsets as FS
from opcat import grobner as G
from opcat import halfedge as he
from opcat import noether as N
from opcat import operads as O

os_op = FS.FinSetCategory("OS", opposite=True)
r = G.check_admissible(G.os_op_order(2), os_op, 2, 5)
print("OS^op lex order:", r.checked, "triples,", len(r.violations), "violations")

r = G.check_admissible(G.scrambled(G.os_op_order(2)), os_op, 2, 4)
print("a scrambled order is caught:", bool(r.violations))

D = C.TwCategory(O.pOp(), "D")
x = he.build([3, 2], [((0, 1), (1, 0))], [(0, 0), (1, 1), (0, 2)])
rng = random.Random(1)
seq = [C.random_dfs_morphism(rng, D, x, rng.randint(0, 6)) for _ in range(20)]
res = N.comparable_pair(D, seq, 8, key=N.d_key)
print("comparable pair:", res.pair, "certified:", N.certify(D, seq, res))

# planar trees embed in D
t = N.planar_trees(4)[2]
print("tree round trip:", N.j_d(N.g_pt(t)) == t)
