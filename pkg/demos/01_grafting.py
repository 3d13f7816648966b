"""Composing two-level trees over a free operad, then reading them as
morphisms of the twisted arrow category."""

from opcat import catconstruct as C
from opcat import operads as O

F = O.FreeOperad("free", generators=(("p", 2), ("q1", 2), ("q2", 1), ("r1", 2), ("r2", 0),
                                     ("r3", 1)))
g = {n: F.gen(n) for n, _ in F.generators}

f = C.TwoLevelTree(F, g["p"], (g["q1"], g["q2"]), (1, 3, 2))
print("source of f:", C.source_of2(f))

h = C.TwoLevelTree(F, f.source, (g["r1"], g["r2"], g["r3"]), (2, 3, 1))
fh = C.compose2(f, h)
print("uppers of f∘h:", fh.uppers)
print("cardinality of f:", C.cardinality(f).table)

# the same data as a C(P)^op morphism inside Tw(P)
t = C.to3(f)
print("as a three-level tree:", t.lower, "|", t.leaf_idx)

# counting morphisms: C(uCom) has m^n maps n -> m
cat = C.CCategory(O.uCom())
print("|Hom(3, 2)| in C(uCom):", len(cat.hom(3, 2)))
