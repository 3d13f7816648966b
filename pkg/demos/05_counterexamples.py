"""Submodules that keep needing generators, computed on truncations."""

from opcat import counterexamples as X

w = X.omega_counterexample(5)
print("dendroidal trees, new generators by degree")
print(w.report.to_csv())
print("new generators at p_i:", w.checks["new_at_p"])

cs = X.cs_counterexample(3)
print("surfaces:", cs.checks["new_at_closed_genus"])

a = X.mop_antichain(4)
print("theta-graph antichain of size", len(a.morphisms), "incomparable:", a.ok)
