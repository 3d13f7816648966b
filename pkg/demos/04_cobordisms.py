"""Gluing surfaces and factoring nc-cobordisms through graded surjections."""

from opcat import cobordism as CB
from opcat import finsets as FS

pants = CB.Cobordism(2, 1, (((1, 2), (1,), 0),))
copants = CB.Cobordism(1, 2, (((1,), (1, 2), 0),))
torus = CB.compose_cob(pants, copants)
print("pants after copants:", torus.components, "euler", torus.euler)

f = CB.Cobordism(2, 3, (((1,), (1, 3), 1), ((2,), (2,), 0)))
s, g = CB.factor_via_gos(f)
print("splitter:", s.components)
print("graded surjection:", g.map.table, g.grading)
print("recomposes:", CB.compose_cob(CB.phi(g), s) == f)

h = FS.GradedSurjection(FS.FinMap(3, 2, (1, 2, 1)), (1, 0))
k = FS.GradedSurjection(FS.FinMap(2, 1, (1, 1)), (2,))
print("grading of k∘h:", FS.compose_gos(k, h).grading)
