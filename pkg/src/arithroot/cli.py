"""Command line interface: ``arithroot classify|groupoid|equiv|table``.

Input is a JSON document::

    {"rank": 2, "torsion_order": 12, "free": ["q"],
     "matrix": [[{"free": [1], "tors": 0}, "1"], ["z^4", "-z^2"]]}

Matrix entries are either canonical objects ``{"free": [...], "tors": k}``
or shorthand strings ``q^a*z^b`` where ``z`` is the fixed primitive root of
order ``torsion_order`` and a leading ``-`` multiplies by ``z^(N/2)``.

Exit codes: 0 finite, 2 not arithmetic, 3 cap exceeded, 4 certified
infinite, 1 usage or input error (and a failed ``table`` regression).
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from .bicharacter import BraidingMatrix, twist_equivalent
from .dimension import nichols_dimension
from .equivalence import NotFiniteError, common_group, weyl_equivalent, weyl_orbit
from .figure1 import FIGURE1, instantiate
from .groupoid import DEFAULT_CAP, generate
from .notation import NotationError, parse_monomial
from .rank2 import figure1_classify, rank2_chain
from .values import GroupValue

EXIT_USAGE = 1


class InputError(ValueError):
    pass


@dataclass
class ProblemSpec:
    rank: int
    torsion_order: int
    free: list
    matrix: BraidingMatrix
    cap: int = None
    options: dict = field(default_factory=dict)


def _parse_entry(entry, names, N):
    F = len(names)
    if isinstance(entry, dict):
        free = entry.get("free", [0] * F)
        tors = entry.get("tors", 0)
        if not isinstance(free, list) or len(free) != F or not all(isinstance(x, int) for x in free):
            raise InputError(f"entry {entry!r}: 'free' must be {F} integers")
        if not isinstance(tors, int) or not 0 <= tors < N:
            raise InputError(f"entry {entry!r}: 'tors' must lie in [0, {N})")
        return GroupValue(tuple(free), tors, N)
    if isinstance(entry, (str, int)):
        try:
            negative, exps = parse_monomial(str(entry))
        except NotationError as exc:
            raise InputError(str(exc)) from None
        free = [0] * F
        tors = 0
        for name, k in exps.items():
            if name == "z":
                tors += k
            elif name in names:
                free[names.index(name)] += k
            else:
                raise InputError(f"unknown parameter {name!r} in {entry!r}")
        if negative:
            if N % 2:
                raise InputError(f"'-' needs an even torsion order, got N={N}")
            tors += N // 2
        return GroupValue(tuple(free), tors, N)
    raise InputError(f"cannot read matrix entry {entry!r}")


def parse_input(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    try:
        rows = doc["matrix"]
    except KeyError:
        raise InputError("missing 'matrix'") from None
    N = doc.get("torsion_order", 1)
    names = doc.get("free", [])
    if not isinstance(N, int) or N < 1:
        raise InputError("'torsion_order' must be a positive integer")
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise InputError("'free' must be a list of parameter names")
    if "z" in names:
        raise InputError("'z' is reserved for the root of unity")
    n = doc.get("rank", len(rows) if isinstance(rows, list) else None)
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise InputError(f"'matrix' must be a square {n}x{n} array")
    entries = tuple(tuple(_parse_entry(e, names, N) for e in row) for row in rows)
    cap = doc.get("cap")
    if cap is not None and (not isinstance(cap, int) or cap < 1):
        raise InputError("'cap' must be a positive integer")
    return ProblemSpec(n, N, list(names), BraidingMatrix(entries), cap, doc.get("options", {}))


def serialize(spec):
    doc = {
        "rank": spec.rank,
        "torsion_order": spec.torsion_order,
        "free": list(spec.free),
        "matrix": [[{"free": list(v.free), "tors": v.tors} for v in row] for row in spec.matrix.entries],
    }
    if spec.cap is not None:
        doc["cap"] = spec.cap
    if spec.options:
        doc["options"] = spec.options
    return json.dumps(doc, sort_keys=True)


def _outcome_json(out):
    doc = {"outcome": out.kind}
    if out.kind == "not_arithmetic":
        doc["basis"] = [list(v) for v in out.basis]
        doc["index"] = out.index + 1
    elif out.kind == "cap_exceeded":
        doc["visited"] = out.visited
    elif out.kind == "certified_infinite":
        w = out.witness
        doc["witness"] = {
            "chain": w.chain,
            "period": w.period,
            "m": list(w.ms),
            "product": [list(r) for r in w.product.rows()],
        }
    return doc


def classify_report(spec, cap):
    Q = spec.matrix
    out = generate(Q, cap=cap)
    report = _outcome_json(out)
    report.update(roots=None, row=None, dimension=None, orbit=None)
    if out.kind == "finite":
        R = out.roots
        report["roots"] = sorted(list(r) for r in R.positive)
        dim = nichols_dimension(Q, R)
        if dim.kind == "finite_dim":
            report["dimension"] = {"finite": True, "value": dim.value,
                                   "factors": [[list(r), h] for r, h in dim.factors]}
        else:
            report["dimension"] = {"finite": False, "witness": list(dim.witness)}
        report["orbit"] = len(weyl_orbit(Q, cap))
    if Q.n == 2:
        match = figure1_classify(Q)
        if match is not None:
            report["row"] = {"row": match.row, "variant": match.variant + 1,
                             "transposed": match.transposed, "tree": match.tree}
    return out, report


def groupoid_report(spec, cap):
    out = generate(spec.matrix, cap=cap)
    report = _outcome_json(out)
    if out.kind == "finite":
        W = out.groupoid
        report["nodes"] = [[list(v) for v in E] for E in W.nodes]
        report["edges"] = [[[list(v) for v in E], i + 1, [list(v) for v in F]] for E, i, F in W.edges]
    return out, report


def to_dot(W):
    """Exchange graph of a finite groupoid; node ids follow sorted basis order."""
    nodes = sorted(W.nodes)
    ids = {E: k for k, E in enumerate(nodes)}
    lines = ["graph weyl_groupoid {"]
    for E in nodes:
        label = " ".join("(" + ",".join(map(str, v)) + ")" for v in E)
        lines.append(f'  n{ids[E]} [label="{label}"];')
    edges = {(*sorted((ids[E], ids[F])), i) for E, i, F in W.edges}
    for a, b, i in sorted(edges):
        lines.append(f'  n{a} -- n{b} [label="{i + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def table_report(cap):
    rows = []
    for row in FIGURE1:
        insts = instantiate(row)
        finite = [generate(i.braiding, cap=cap).kind == "finite" for i in insts]
        matched = [(m := figure1_classify(i.braiding)) is not None and m.row == row.id for i in insts]
        periodic = [rank2_chain(i.braiding, s).periodic for i in insts for s in ("E0", "tau")]
        equiv = all(
            weyl_equivalent(a.braiding, b.braiding, cap)
            for a in insts for b in insts if a.root_order == b.root_order
        )
        ok = all(finite) and all(matched) and all(periodic) and equiv
        rows.append({"row": row.id, "instances": len(insts), "finite": all(finite),
                     "classified": all(matched), "chains_periodic": all(periodic),
                     "equivalent": equiv, "pass": ok})
    return {"rows": rows, "passed": sum(r["pass"] for r in rows), "total": len(rows)}


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _emit(report, fmt, text):
    if fmt == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(text)


def _classify_text(spec, report):
    lines = [f"outcome: {report['outcome']}"]
    if report.get("roots") is not None:
        lines.append(f"positive roots ({len(report['roots'])}): "
                     + ", ".join("(" + ",".join(map(str, r)) + ")" for r in report["roots"]))
    if report.get("row"):
        r = report["row"]
        lines.append(f"figure 1: row {r['row']}, variant {r['variant']}"
                     + (" (transposed)" if r["transposed"] else "") + f", tree {r['tree']}")
    elif spec.rank == 2:
        lines.append("figure 1: no match")
    d = report.get("dimension")
    if d is not None:
        lines.append(f"dimension: {d['value']}" if d["finite"] else f"dimension: infinite (root {tuple(d['witness'])})")
    if report.get("witness"):
        w = report["witness"]
        lines.append(f"witness: chain {w['chain']} period {w['period']} m={w['m']} product={w['product']}")
    if report.get("basis"):
        lines.append(f"undefined reflection {report['index']} at basis {report['basis']}")
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="maximal number of visited bases")
    common.add_argument("--format", choices=("json", "text"), default="text")

    parser = _Parser(prog="arithroot", description="Arithmetic root systems of diagonal braidings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("classify", parents=[common], help="decide finiteness and report roots")
    p.add_argument("input")
    p = sub.add_parser("groupoid", parents=[common], help="dump the Weyl groupoid")
    p.add_argument("input")
    p.add_argument("--dot", help="write the exchange graph in DOT format")
    p = sub.add_parser("equiv", parents=[common], help="twist or Weyl equivalence of two inputs")
    p.add_argument("--mode", choices=("twist", "weyl"), default="weyl")
    p.add_argument("a")
    p.add_argument("b")
    sub.add_parser("table", parents=[common], help="run the Figure 1 regression")
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except InputError as exc:
        print(f"arithroot: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args):
    if args.cap is not None and args.cap < 1:
        raise InputError("--cap must be positive")

    if args.command == "table":
        report = table_report(args.cap or DEFAULT_CAP)
        text = "\n".join(f"row {r['row']:2d}: {'pass' if r['pass'] else 'FAIL'} ({r['instances']} instances)"
                         for r in report["rows"])
        text += f"\n{report['passed']}/{report['total']} rows pass"
        _emit(report, args.format, text)
        return 0 if report["passed"] == report["total"] else EXIT_USAGE

    if args.command == "equiv":
        a, b = parse_input(_read(args.a)), parse_input(_read(args.b))
        cap = args.cap or a.cap or b.cap or DEFAULT_CAP
        if a.rank != b.rank:
            raise InputError("inputs have different ranks")
        Qa, Qb = common_group(a.matrix, b.matrix)
        if args.mode == "twist":
            eq = twist_equivalent(Qa, Qb)
        else:
            try:
                eq = weyl_equivalent(Qa, Qb, cap)
            except NotFiniteError as exc:
                report = {"mode": "weyl", "equivalent": None, **_outcome_json(exc.outcome)}
                _emit(report, args.format, f"not decidable: {exc.outcome.kind}")
                return exc.outcome.exit_code
        _emit({"mode": args.mode, "equivalent": eq}, args.format, "equivalent" if eq else "not equivalent")
        return 0

    spec = parse_input(_read(args.input))
    cap = args.cap or spec.cap or DEFAULT_CAP
    if args.command == "classify":
        out, report = classify_report(spec, cap)
        _emit(report, args.format, _classify_text(spec, report))
        return out.exit_code

    out, report = groupoid_report(spec, cap)
    if args.dot and out.kind == "finite":
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(out.groupoid))
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        lines = [f"outcome: {out.kind}"]
        if out.kind == "finite":
            lines.append(f"{len(out.groupoid.nodes)} bases, {len(out.groupoid.edges)} edges")
            for k, E in enumerate(out.groupoid.nodes):
                lines.append(f"  {k}: " + " ".join("(" + ",".join(map(str, v)) + ")" for v in E))
        print("\n".join(lines))
    return out.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
