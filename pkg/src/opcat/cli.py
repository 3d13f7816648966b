"""Command-line driver.

Exit status 0 means the run completed, whatever it found; 2 means bad input
or an unsupported bound; 3 means an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import catconstruct as C
from . import cobordism as CB
from . import coloring as K
from . import counterexamples as X
from . import finsets as FS
from . import functors as Fn
from . import grobner as G
from . import halfedge as he
from . import nerve as Nv
from . import noether as N
from . import operads as O
from .category import FiniteFunctor
from .errors import BoundError, OpcatError, ParseError

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3
MAX_BOUND = 12


def threads() -> int:
    try:
        return max(1, int(os.environ.get("OPCAT_THREADS", "1")))
    except ValueError:
        raise ParseError("OPCAT_THREADS must be an integer") from None


def _load(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _operad(name: str, data: dict | None = None):
    if name == "free":
        gens = (data or {}).get("generators")
        if not gens:
            raise ParseError("the free operad needs a 'generators' list in the input")
        return O.FreeOperad("free", generators=tuple((str(n), int(a)) for n, a in gens))
    try:
        return O.by_name(name)
    except (KeyError, ValueError) as exc:
        raise ParseError(f"unknown operad {name}") from exc


def _bound(b: int) -> int:
    if b < 0 or b > MAX_BOUND:
        raise BoundError(f"bound {b} outside 0..{MAX_BOUND}")
    return b


def _emit(args, payload, rows=None, dot=None) -> None:
    if args.format == "csv":
        if rows is None:
            raise ParseError("this command has no CSV output")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in rows:
            w.writerow(r)
        text = buf.getvalue()
    elif args.format == "dot":
        if dot is None:
            raise ParseError("this command has no DOT output")
        text = dot + "\n"
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _morphism(operad, data):
    try:
        return C.morphism_from_json(operad, data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad morphism: {exc}") from exc


# -- subcommands --------------------------------------------------------------

def cmd_compose(args):
    """``A ∘ B``: ``B`` is applied first."""
    da, db = _load(args.a), _load(args.b)
    P = _operad(args.operad, da)
    a, b = _morphism(P, da), _morphism(P, db)
    if args.view == "C":
        res = C.compose2(a, b)
        out = {"composite": res.to_json(), "source": C.op_to_json(C.source_of2(res))}
    else:
        res = C.compose3(a, b)
        out = {"composite": res.to_json()}
    _emit(args, out)


def _category(args):
    P = _operad(args.operad)
    if args.view == "C":
        return C.TwCategory(P, "Cop"), P
    if args.view == "U":
        return C.UCategory(P), P
    return C.TwCategory(P, args.view), P


def cmd_enumerate(args):
    cat, P = _category(args)
    bound = _bound(args.bound)
    x = C.op_from_json(P, _load(args.object)) if args.object else P.identity(args.color)
    ms = list(cat.out(x, bound))
    by_size: dict = {}
    for f in ms:
        k = cat.size(cat.target(f))
        by_size[k] = by_size.get(k, 0) + 1
    out = {"category": cat.name, "bound": bound, "count": len(ms),
           "bySize": {str(k): v for k, v in sorted(by_size.items())}}
    if args.list:
        out["morphisms"] = [f.to_json() for f in ms]
    _emit(args, out, rows=[["size", "count"]] + [[k, v] for k, v in sorted(by_size.items())])


def cmd_canonicalize(args):
    g = he.from_json(_load(args.graph))
    canon, _ = he.canonical_form(g)
    dfs = C.dfs_reorder(g)
    out = {"canonical": he.to_json(canon), "dfs": he.to_json(dfs),
           "betti": he.betti(g), "colorBound": K.color_bound(g, args.constant_nine)}
    try:
        out["coloring"] = list(K.greedy_coloring(g, args.constant_nine).col)
    except OpcatError as exc:
        out["coloring"] = None
        out["coloringError"] = str(exc)
    _emit(args, out, dot=he.to_dot(canon))


def _order_setup(args, c):
    if args.order == "os":
        return G.os_op_order(c), FS.FinSetCategory("OS", opposite=True)
    if args.order == "gos":
        return G.gos_order(c), FS.GOSOpCategory(args.grading)
    if args.order == "oi":
        return G.oi_order(c), FS.FinSetCategory("OI", min_size=1)
    raise ParseError(f"unknown order {args.order}")


def cmd_check_order(args):
    """Every base object ``c <= size`` against targets up to ``bound``
    (default ``size``)."""
    bound = _bound(args.bound if args.bound is not None else args.size)
    rows = [["base", "checked", "violations", "ties"]]
    per = {}
    for c in range(1, args.size + 1):
        order, cat = _order_setup(args, c)
        r = G.check_admissible(order, cat, c, bound)
        per[str(c)] = {**r.to_json(), "ok": r.ok}
        rows.append([c, r.checked, len(r.violations), len(r.ties)])
    out = {"order": args.order, "size": args.size, "bound": bound, "bases": per,
           "violations": sum(len(v["violations"]) for v in per.values()),
           "ok": all(v["ok"] for v in per.values())}
    _emit(args, out, rows=rows)


def _g2_sequences(args):
    rng = random.Random(args.seed)
    if args.view == "D":
        cat = C.TwCategory(O.pOp(), "D")
        x = he.build([3, 2], [((0, 1), (1, 0))], [(0, 0), (1, 1), (0, 2)])
        seqs = [[C.random_dfs_morphism(rng, cat, x, rng.randint(0, 6))
                 for _ in range(args.length)] for _ in range(args.count)]
        return cat, seqs, N.d_key, 8
    if args.view == "gos":
        cat = FS.GOSOpCategory(args.grading)
        ms = list(cat.out(2, 5))
        return cat, [[rng.choice(ms) for _ in range(args.length)]
                     for _ in range(args.count)], N.gos_key, None
    if args.view == "nerve":
        cat = Nv.nerve_category(Nv.cyclic_group(2), 12)
        x = (1, 0, 1)
        return cat, [[cat.random_morphism(rng, x, 3) for _ in range(args.length)]
                     for _ in range(args.count)], Nv.ones_key, None
    raise ParseError(f"no G2 probe for view {args.view}")


def cmd_probe_g2(args):
    cat, seqs, key, bound = _g2_sequences(args)

    def run(seq):
        r = N.comparable_pair(cat, seq, bound, key=key)
        return r, bool(r) and N.certify(cat, seq, r)

    with ThreadPoolExecutor(threads()) as pool:
        results = list(pool.map(run, seqs))
    if any(r and not ok for r, ok in results):
        raise AssertionError("a returned pair failed re-certification")
    rows = [["sequence", "result", "i", "j"]]
    items = []
    for k, (r, ok) in enumerate(results):
        pair = list(r.pair) if r.pair else None
        items.append({"result": r.result, "pair": pair, "certified": ok})
        rows.append([k, r.result, *(pair or ["", ""])])
    out = {"view": args.view, "seed": args.seed, "sequences": items,
           "certified": sum(ok for _, ok in results)}
    _emit(args, out, rows=rows)


def cmd_antichain(args):
    w = X.mop_antichain(args.k)
    _emit(args, w.to_json())


def _functor(name: str):
    if name in ("tw-u-ucom", "tw-u-uas"):
        P = O.uCom() if name.endswith("ucom") else O.uAs()
        T, U = C.TwCategory(P, "Tw"), C.UCategory(P)
        F = FiniteFunctor(T, U, lambda p: C.colors_of(P, p), C.to_u, "G")
        return F, lambda b: [p for n in range(b + 1) for p in P.operations(0, n)]
    if name == "nccs":
        cs = CB.CSCategory(nc=True, max_genus=2)
        F = FiniteFunctor(cs, cs.cob, lambda x: x.boundary, cs.project, "pi")
        return F, lambda b: cs.objects(2, b)
    if name == "card-pop":
        P = O.pOp()
        F = FiniteFunctor(C.TwCategory(P, "Cop"), FS.FinSetCategory("FS", opposite=True),
                          lambda x: x.n_vertices,
                          lambda f: FS.Opposite(C.cardinality(C.from3(f))), "card")
        return F, lambda b: [he.corolla(k) for k in range(1, b + 1)]
    if name == "oi-ep":
        F = FiniteFunctor(FS.FinSetCategory("OI", min_size=1, ep=True),
                          FS.FinSetCategory("OI", min_size=1), lambda x: x, lambda f: f, "inc")
        return F, lambda b: list(range(1, b + 1))
    raise ParseError(f"unknown functor {name}")


def cmd_check_functor(args):
    bound = _bound(args.bound)
    if args.functor == "property-f-uas":
        P = O.uAs()
        inc = FiniteFunctor(C.TwCategory(P, "R>0"), C.TwCategory(P, "Tw"),
                            lambda x: x, lambda f: f, "inc")
        d = P.standard(2)
        r = Fn.search_property_f(inc, d, bound)
        bad = Fn.verify_covering(inc, d, bound, r.covering)
        if r.status == Fn.VERIFIED and bad:
            raise AssertionError("covering failed re-verification")
        _emit(args, {"functor": args.functor, **r.to_json()})
        return
    F, objects = _functor(args.functor)
    objs = objects(bound)
    if args.property == "opfibration":
        r = Fn.is_discrete_opfibration(F, objs, bound)
    else:
        r = Fn.check_property_s(F, objs, bound)
    _emit(args, {"functor": args.functor, "property": args.property, "bound": bound,
                 **r.to_json()},
          rows=[["checked", "violations"], [r.checked, len(r.violations)]])


def cmd_counterexample(args):
    if args.which == "omega":
        w = X.omega_counterexample(args.kmax)
    elif args.which == "cs":
        w = X.cs_counterexample(args.genus)
    else:
        return cmd_antichain(args)
    rows = [r.split(",") for r in w.report.to_csv().splitlines()]
    _emit(args, {"which": args.which, **w.to_json()}, rows=rows)


def cmd_cobordism(args):
    if args.action == "compose":
        h, f = (CB.Cobordism.from_json(_load(p)) for p in args.files)
        res = CB.compose_cob(h, f)
        if res.euler != h.euler + f.euler:
            raise AssertionError("Euler characteristic is not additive")
        out = {"composite": res.to_json(), "euler": res.euler}
    elif args.action == "factor":
        (f,) = (CB.Cobordism.from_json(_load(p)) for p in args.files)
        s, g = CB.factor_via_gos(f)
        out = {"splitter": s.to_json(), "gos": g.to_json(),
               "phi": CB.phi(g).to_json()}
    else:
        raise ParseError(f"unknown action {args.action}")
    _emit(args, out)


def cmd_nerve(args):
    S = {"z2": Nv.cyclic_group(2), "z3": Nv.cyclic_group(3), "trivial": Nv.trivial_monoid(),
         "positive": Nv.PositiveIntegers()}.get(args.semigroup)
    if S is None:
        raise ParseError(f"unknown semigroup {args.semigroup}")
    try:
        x = tuple(int(a) for a in args.object.split(","))
    except ValueError as exc:
        raise ParseError(f"bad object {args.object}") from exc
    bound = _bound(args.bound)
    cat = Nv.nerve_category(S, bound)
    counts: dict = {}
    for f in cat.out(x, bound):
        counts[len(f.target)] = counts.get(len(f.target), 0) + 1
    out = {"semigroup": S.name, "object": list(x), "bound": bound,
           "bySize": {str(k): v for k, v in sorted(counts.items())}}
    if args.samples:
        rng = random.Random(args.seed)
        seq = [cat.random_morphism(rng, x, 3) for _ in range(args.samples)]
        r = N.comparable_pair(cat, seq, key=Nv.ones_key)
        out["probe"] = {**r.to_json(), "certified": bool(r) and N.certify(cat, seq, r)}
    _emit(args, out, rows=[["size", "count"]] + [[k, v] for k, v in sorted(counts.items())])


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "dot"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the result here instead of stdout")

    p = argparse.ArgumentParser(prog="opcat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compose", parents=[common], help="compose two morphisms")
    s.add_argument("--view", choices=("C", "Tw"), default="C")
    s.add_argument("--operad", default="free")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("enumerate", parents=[common], help="morphisms out of an object")
    s.add_argument("--view", default="C", choices=("C", "Tw", "R>0", "U", "D", "D'", "Z"))
    s.add_argument("--operad", default="uCom")
    s.add_argument("--bound", type=int, default=3)
    s.add_argument("--object", help="JSON file with the source operation")
    s.add_argument("--color", type=int, default=0)
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("canonicalize", parents=[common], help="normal forms of a graph")
    s.add_argument("graph")
    s.add_argument("--constant-nine", type=int, default=K.BOUND_CONSTANT)
    s.set_defaults(func=cmd_canonicalize)

    s = sub.add_parser("check-order", parents=[common], help="admissibility on a truncation")
    s.add_argument("--order", choices=("os", "gos", "oi"), default="os")
    s.add_argument("--size", type=int, default=2)
    s.add_argument("--grading", type=int, default=2)
    s.add_argument("--bound", type=int)
    s.set_defaults(func=cmd_check_order)

    s = sub.add_parser("probe-g2", parents=[common], help="comparable pairs in sequences")
    s.add_argument("--view", choices=("D", "gos", "nerve"), default="D")
    s.add_argument("--grading", type=int, default=3)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--length", type=int, default=20)
    s.set_defaults(func=cmd_probe_g2)

    s = sub.add_parser("antichain", parents=[common], help="theta-graph antichain")
    s.add_argument("--k", type=int, default=4)
    s.set_defaults(func=cmd_antichain)

    s = sub.add_parser("check-functor", parents=[common], help="functor properties")
    s.add_argument("functor", choices=("tw-u-ucom", "tw-u-uas", "nccs", "card-pop", "oi-ep",
                                       "property-f-uas"))
    s.add_argument("--property", choices=("opfibration", "S"), default="opfibration")
    s.add_argument("--bound", type=int, default=3)
    s.set_defaults(func=cmd_check_functor)

    s = sub.add_parser("counterexample", parents=[common], help="growth witnesses")
    s.add_argument("which", choices=("omega", "cs", "mop"))
    s.add_argument("--kmax", type=int, default=6)
    s.add_argument("--genus", type=int, default=3)
    s.add_argument("--k", type=int, default=4, help="antichain size for mop")
    s.set_defaults(func=cmd_counterexample)

    s = sub.add_parser("cobordism", parents=[common], help="compose or factor cobordisms")
    s.add_argument("action", choices=("compose", "factor"))
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_cobordism)

    s = sub.add_parser("nerve", parents=[common], help="semigroup nerve categories")
    s.add_argument("--semigroup", default="z2")
    s.add_argument("--object", default="1,0,1")
    s.add_argument("--bound", type=int, default=6)
    s.add_argument("--samples", type=int, default=20)
    s.set_defaults(func=cmd_nerve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except OpcatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
