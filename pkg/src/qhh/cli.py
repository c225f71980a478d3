"""Command-line front end.

    qhh hh preproj-D4 --n 2 --field gf3
    qhh compare preproj-D4 nonstd-D4 --n 2 --json

Exit status: 0 ok, 1 internal pipeline error, 2 input error, 3 completion
failure, 4 dimension cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import corpus
from .bar import OracleTooLargeError, RelativeBarComplex
from .cohomology import Cochains
from .field import FieldError, parse_field
from .groebner import (DEFAULT_DEGREE_BOUND, DimensionCapError, IncompleteBasisError,
                       certificate_triples, complete)
from .algebra import AlgebraBasis
from .parser import ParseError, SemanticError
from .resolution import ConsistencyError, build_resolution

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_COMPLETION, EXIT_CAP = 0, 1, 2, 3, 4


class StageError(Exception):
    def __init__(self, stage, exc, code):
        super().__init__(f"{stage}: {exc}")
        self.stage, self.exc, self.code = stage, exc, code


def _stage(name, fn, *args, **kw):
    try:
        return fn(*args, **kw)
    except (ParseError, SemanticError, FieldError, FileNotFoundError) as exc:
        raise StageError(name, exc, EXIT_PARSE) from exc
    except IncompleteBasisError as exc:
        raise StageError(name, exc, EXIT_COMPLETION) from exc
    except (DimensionCapError, OracleTooLargeError) as exc:
        raise StageError(name, exc, EXIT_CAP) from exc
    except ConsistencyError as exc:
        raise StageError(name, exc, EXIT_INTERNAL) from exc


def _load(args, name):
    field = _stage("parse", parse_field, args.field) if args.field else None
    return _stage("parse", corpus.load, name, field)


def _fmt(el, q):
    return el.format(q)


def _cert(cof_triples, q):
    return [{"left": _fmt(l, q), "generator": i, "right": _fmt(r, q)} for l, i, r in cof_triples]


def _slices(alg):
    q = alg.quiver
    return [{"origin": q.vertices[o], "terminus": q.vertices[t], "dim": d}
            for (o, t), d in alg.slice_table().items()]


def _resolution(args, pres):
    return _stage("resolve", build_resolution, pres, degree_bound=args.degree_bound)


# -- commands -----------------------------------------------------------

def cmd_basis(args):
    pres = _load(args, args.algebra)
    G = _stage("groebner", complete, pres.relations, pres.quiver, pres.field, args.degree_bound)
    alg = _stage("basis", AlgebraBasis, G)
    q = pres.quiver
    return {
        "nontip_count": alg.dim,
        "nontips": [q.format_path(p) for p in alg.nontips],
        "slices": _slices(alg),
        "loewy_length": alg.loewy_length(),
    }, pres


def cmd_groebner(args):
    pres = _load(args, args.algebra)
    G = _stage("groebner", complete, pres.relations, pres.quiver, pres.field, args.degree_bound)
    q = pres.quiver
    rules = [{"tip": q.format_path(r.tip), "tail": _fmt(r.tail, q),
              "certificate": _cert(certificate_triples(r.cofactor, pres.field), q)} for r in G.rules]
    return {"rules": rules, "complete": G.complete, "degree_bound": G.degree_bound,
            "max_degree": G.max_degree}, pres


def cmd_minimize(args):
    from .groebner import minimize_generators
    pres = _load(args, args.algebra)
    q = pres.quiver
    rels = pres.relations
    kept = _stage("minimize", minimize_generators, rels, q, pres.field, args.degree_bound)
    G = _stage("groebner", complete, [rels[i] for i in kept], q, pres.field, args.degree_bound)
    dropped = []
    for i in range(len(rels)):
        if i in kept:
            continue
        ok, cert = G.ideal_membership(rels[i])
        dropped.append({"index": i, "relation": _fmt(rels[i], q), "member": ok,
                        "certificate": [{"left": _fmt(l, q), "generator": kept[g], "right": _fmt(r, q)}
                                        for l, g, r in cert]})
    return {"relations": [_fmt(r, q) for r in rels], "retained": kept,
            "retained_relations": [_fmt(rels[i], q) for i in kept], "dropped": dropped}, pres


def cmd_resolve(args):
    pres = _load(args, args.algebra)
    res = _resolution(args, pres)
    q = pres.quiver
    f2, f3 = res.f[2], res.f[3]
    v = q.vertices
    return {
        "retained": res.retained,
        "f2": [{"element": _fmt(x, q), "origin": v[o], "terminus": v[t]}
               for x, (o, t) in zip(f2.elements, f2.endpoints)],
        "f3": [{"element": _fmt(y, q), "origin": v[o], "terminus": v[t],
                "left": {str(i): _fmt(p, q) for i, p in left.items()},
                "two_sided": {str(i): [[_fmt(a, q), _fmt(b, q)] for a, b in pairs]
                              for i, pairs in two.items()}}
               for y, (o, t), left, two in zip(f3.elements, f3.endpoints, f3.left_decomp, f3.two_sided)],
        "summands": [len(fn) for fn in res.f],
        "complex_checks": res.complex_checks(),
    }, pres


def _hh_payload(res):
    rep = Cochains(res).report()
    return {
        "nontip_count": res.algebra.dim,
        "slices": _slices(res.algebra),
        "f3_count": len(res.f[3]),
        "hom_dims": rep.hom_dims,
        "ranks": rep.ranks,
        "kernel_dims": rep.kernel_dims,
        "hh": rep.hh,
    }


def cmd_hh(args):
    pres = _load(args, args.algebra)
    res = _resolution(args, pres)
    out = _stage("cohomology", _hh_payload, res)
    out["n"] = args.n
    out["value"] = out["hh"][args.n]
    out["engine"] = "resolution"
    return out, pres


def cmd_oracle(args):
    pres = _load(args, args.algebra)
    G = _stage("groebner", complete, pres.relations, pres.quiver, pres.field, args.degree_bound)
    alg = _stage("basis", AlgebraBasis, G)
    bar = RelativeBarComplex(alg)
    n = args.n
    dims = _stage("oracle", lambda: [bar.dim(k) for k in range(n + 2)])
    ranks = _stage("oracle", lambda: [bar.rank(k) for k in range(n + 1)])
    hh = [dims[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(n + 1)]
    return {"n": n, "engine": "bar", "nontip_count": alg.dim, "cochain_dims": dims,
            "ranks": ranks, "hh": hh, "value": hh[n]}, pres


def cmd_compare(args):
    out = {"n": args.n, "engine": "resolution", "algebras": []}
    values = []
    for name in (args.first, args.second):
        pres = _load(args, name)
        res = _resolution(args, pres)
        payload = _stage("cohomology", _hh_payload, res)
        payload["algebra"] = pres.name
        payload["value"] = payload["hh"][args.n]
        values.append(payload["value"])
        out["algebras"].append(payload)
        field = pres.field
    out["distinguishes"] = values[0] != values[1]
    return out, field


def cmd_corpus(args):
    return {"entries": corpus.names()}, None


# -- output -------------------------------------------------------------

def _human(command, rep):
    lines = []
    head = [f"{k}: {rep[k]}" for k in ("algebra", "field", "engine") if k in rep]
    if head:
        lines.append("  ".join(head))
    if command == "basis":
        lines.append(f"dimension: {rep['nontip_count']}   Loewy length: {rep['loewy_length']}")
        lines.append("slices (origin terminus dim):")
        lines += [f"  {s['origin']:>4} {s['terminus']:>4} {s['dim']:>4}" for s in rep["slices"]]
        lines.append("nontips: " + ", ".join(rep["nontips"]))
    elif command == "groebner":
        lines.append(f"{len(rep['rules'])} rules, complete={rep['complete']}, max overlap degree {rep['max_degree']}")
        lines += [f"  {r['tip']} -> {r['tail']}" for r in rep["rules"]]
    elif command == "minimize":
        lines.append("retained:")
        lines += [f"  [{i}] {r}" for i, r in zip(rep["retained"], rep["retained_relations"])]
        for d in rep["dropped"]:
            lines.append(f"dropped [{d['index']}] {d['relation']}  (certificate: {len(d['certificate'])} terms)")
    elif command == "resolve":
        lines.append("f2:")
        lines += [f"  {x['element']}   at ({x['origin']},{x['terminus']})" for x in rep["f2"]]
        lines.append("f3:")
        lines += [f"  {y['element']}   at ({y['origin']},{y['terminus']})" for y in rep["f3"]]
        lines.append("summands |f0..f3|: " + " ".join(map(str, rep["summands"])))
        lines.append("complex checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}"
                                                     for k, v in rep["complex_checks"].items()))
    elif command == "hh":
        lines.append(f"dim Hom(Q^n, L), n=0..3: {rep['hom_dims']}")
        lines.append(f"rank d1..d3: {rep['ranks']}   dim Ker d1..d3: {rep['kernel_dims']}")
        lines.append(f"dim HH^0..2: {rep['hh']}")
        lines.append(f"dim HH^{rep['n']} = {rep['value']}")
    elif command == "oracle":
        lines.append(f"dim C^0..: {rep['cochain_dims']}   ranks: {rep['ranks']}")
        lines.append(f"dim HH^0..{rep['n']}: {rep['hh']}")
        lines.append(f"dim HH^{rep['n']} = {rep['value']}")
    elif command == "compare":
        a, b = rep["algebras"]
        n = rep["n"]
        lines.append(f"dim HH^{n}({a['algebra']}) = {a['value']}")
        lines.append(f"dim HH^{n}({b['algebra']}) = {b['value']}")
        lines.append(f"HH^{n} distinguishes: {'yes' if rep['distinguishes'] else 'no'}")
    elif command == "corpus":
        lines += rep["entries"]
    if "wall_time" in rep:
        lines.append(f"wall time: {rep['wall_time']:.3f} s")
    return "\n".join(lines)


COMMANDS = {
    "basis": cmd_basis, "groebner": cmd_groebner, "minimize": cmd_minimize,
    "resolve": cmd_resolve, "hh": cmd_hh, "oracle": cmd_oracle,
    "compare": cmd_compare, "corpus": cmd_corpus,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="gf<p> or q (default: the file's field, else gf2)")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND)
    common.add_argument("--timing", action="store_true", help="include wall time in the report")

    p = argparse.ArgumentParser(prog="qhh", description="Hochschild cohomology of quiver algebras")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("basis", "groebner", "minimize", "resolve"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("algebra", help="corpus name or path to an algebra file")
    sp = sub.add_parser("hh", parents=[common])
    sp.add_argument("algebra")
    sp.add_argument("--n", type=int, choices=(0, 1, 2), default=2)
    sp = sub.add_parser("oracle", parents=[common])
    sp.add_argument("algebra")
    sp.add_argument("--n", type=int, default=2)
    sp = sub.add_parser("compare", parents=[common])
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--n", type=int, choices=(0, 1, 2), default=2)
    sub.add_parser("corpus", parents=[common])
    return p


def run(argv):
    """Execute a command; returns ``(exit code, report dict or None, message)``."""
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        payload, ctx = COMMANDS[args.command](args)
    except StageError as err:
        return err.code, None, f"error [{err.stage}]: {err.exc}"
    report = {"command": args.command}
    if ctx is not None and hasattr(ctx, "quiver"):
        report["algebra"] = ctx.name
        report["field"] = ctx.field.name
    elif ctx is not None:
        report["field"] = ctx.name
    report.update(payload)
    if args.timing:
        report["wall_time"] = time.perf_counter() - t0
    text = json.dumps(report, sort_keys=True, indent=2) if args.json else _human(args.command, report)
    return EXIT_OK, report, text


def main(argv=None):
    code, _, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == EXIT_OK else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
