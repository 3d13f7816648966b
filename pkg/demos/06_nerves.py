"""Sequences over a semigroup with substitutions."""

import random

from opcat import grobner as G
from opcat import nerve as Nv
from opcat import noether as N

Z2 = Nv.nerve_category(Nv.cyclic_group(2), 8)
x = (1, 0, 1)
print("morphisms out of", x, "up to length 5:", sum(1 for _ in Z2.out(x, 5)))

proj = Nv.projection(Z2)
order = G.lift_faithful(G.oi_order(), proj)
print("lifted order admissible:", G.check_admissible(order, Z2, x, 6).ok)

rng = random.Random(0)
seq = [Z2.random_morphism(rng, x, 3) for _ in range(20)]
r = N.comparable_pair(Z2, seq, key=Nv.ones_key)
print("comparable pair", r.pair, "certified", N.certify(Z2, seq, r))

S = Nv.PositiveIntegers()
print("slice sizes over positive integers:",
      [Nv.slice_size(Nv.nerve_category(S, 10), (k,)) for k in range(1, 6)])
