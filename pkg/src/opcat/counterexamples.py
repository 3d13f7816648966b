"""Witnesses of non-Noetherian behaviour, computed on finite truncations."""

from __future__ import annotations

from dataclasses import dataclass

from . import halfedge as he
from .catconstruct import ThreeLevelTree, TwCategory
from .category import Truncation
from .cobordism import CSCategory
from .modules import (GrowthReport, constant_module, full_subspaces, is_submodule,
                      min_generators_by_degree, principal)
from .noether import NONE, antichain_search, leq
from .operads import _shape_graph, mOp, sOp


def graph_degree(x: he.Graph) -> int:
    return x.n_vertices + x.total_genus + x.n_leaves


def surface_degree(x) -> int:
    return x.genus + x.boundary


# -- dendroidal trees ----------------------------------------------------------------

def corolla_tree(k: int) -> he.Graph:
    """One vertex with ``k`` inputs."""
    return _shape_graph((None,) * k)


def two_vertex_tree(a: int, b: int) -> he.Graph:
    """Root with ``a`` inputs; a vertex with ``b`` inputs sits on the first one."""
    return _shape_graph(((None,) * b,) + (None,) * (a - 1))


def p_tree(i: int) -> he.Graph:
    return two_vertex_tree(2, i)


@dataclass
class Witness:
    report: GrowthReport
    truncation: Truncation
    checks: dict

    def to_json(self) -> dict:
        return {"checks": self.checks, "total": self.report.total,
                "csv": self.report.to_csv()}


def omega_counterexample(kmax: int = 6, ring="QQ") -> Witness:
    """``N`` inside ``Q Hom(id_2, -)`` over ``Tw(sOp)``, kept on trees with at
    least three inputs.

    The truncation is the support of the principal module among trees with
    at most two vertices and at most ``kmax + 2`` inputs.
    """
    T = TwCategory(sOp(), "Tw")
    id2 = corolla_tree(2)
    cands = [corolla_tree(a) for a in range(kmax + 3)]
    cands += [two_vertex_tree(a, b) for a in range(1, kmax + 2) for b in range(kmax + 1)
              if a - 1 + b <= kmax + 2]
    objs = [x for x in dict.fromkeys(cands) if T.hom(id2, x)]
    trunc = Truncation(T, objs)
    M = principal(id2, trunc, ring)
    N = full_subspaces(M, lambda x: x.n_leaves >= 4)
    report = min_generators_by_degree(N, M, graph_degree)
    big = [x for x in objs if x.n_leaves >= 4]
    common = {}
    for i in range(3, kmax + 1):
        for j in range(i + 1, kmax + 1):
            common[f"{i},{j}"] = sum(1 for q in big
                                     if trunc.hom(q, p_tree(i)) and trunc.hom(q, p_tree(j)))
    checks = {
        "submodule": is_submodule(N, M),
        "new_at_p": {i: report.new_at(repr(p_tree(i))) for i in range(3, kmax + 1)},
        "homs_from_id2_up_to_aut": {i: len(trunc.hom(id2, p_tree(i))) // 2
                                    for i in range(3, kmax + 1)},
        "common_sources": common,
    }
    return Witness(report, trunc, checks)


# -- surfaces ------------------------------------------------------------------------

def cs_counterexample(max_genus: int = 3, max_boundary: int = 2, ring="QQ") -> Witness:
    """Constant module over ``CS`` and its part on closed surfaces."""
    C = CSCategory(nc=False, max_genus=max_genus)
    trunc = Truncation(C, C.objects(max_genus, max_boundary))
    M = constant_module(trunc, ring)
    N = full_subspaces(M, lambda x: x.boundary == 0)
    report = min_generators_by_degree(N, M, surface_degree)
    closed = [x for x in trunc.objects if x.boundary == 0]
    checks = {
        "submodule": is_submodule(N, M),
        "new_at_closed_genus": {x.genus: report.new_at(repr(x)) for x in closed},
    }
    return Witness(report, trunc, checks)


# -- modular operads -----------------------------------------------------------------

def theta_graph(i: int) -> he.Graph:
    """Two vertices joined by ``i + 1`` edges, one leaf on each."""
    return he.build([i + 2, i + 2], [((0, s), (1, s)) for s in range(1, i + 2)],
                    [(0, 0), (1, 0)])


def theta_morphism(i: int) -> ThreeLevelTree:
    P = mOp()
    return ThreeLevelTree(P, P.identity(2), he.corolla(2), (theta_graph(i),), (1, 2))


@dataclass
class AntichainWitness:
    morphisms: list
    verdicts: dict

    @property
    def ok(self) -> bool:
        return all(v == NONE for (i, j), v in self.verdicts.items() if i != j)

    def to_json(self) -> dict:
        return {"size": len(self.morphisms), "ok": self.ok,
                "targets": [he.to_json(f.target) for f in self.morphisms],
                "verdicts": {f"{i},{j}": v for (i, j), v in sorted(self.verdicts.items())}}


def mop_antichain(imax: int = 4, bounds=(2, 3, 4)) -> AntichainWitness:
    """Morphisms out of the two-leaf corolla in ``C(mOp)^op`` onto theta graphs."""
    C = TwCategory(mOp(), "Cop")
    fs = [theta_morphism(i) for i in range(1, imax + 1)]
    hit = antichain_search(C, he.corolla(2), imax, max(bounds), candidates=fs)
    verdicts = {}
    for b in bounds:
        for i, f in enumerate(fs):
            for j, g in enumerate(fs):
                if i != j:
                    r = leq(C, f, g, b).result
                    verdicts[i, j] = r if verdicts.get((i, j), r) == r else "inconsistent"
    return AntichainWitness(hit.witness or [], verdicts)
