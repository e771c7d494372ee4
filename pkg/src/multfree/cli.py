"""Command-line front end.

    multfree decompose "wr(S3,S2)"
    multfree check named:M12
    multfree table 4 --row 8 --param k=5,6
    multfree verify hook-sets
    multfree qi --n 9 --k 3 --commute --clique

Exit codes: 0 success (or multiplicity free), 1 not multiplicity free or a
failed check, 2 infeasible request, 3 unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from .induction import NoMethodAvailable, decompose_spec, is_multiplicity_free, rank
from .permgroups.catalog import ENV_VAR, CatalogError, UnknownGroup
from .permgroups.group import DEFAULT_CENSUS_CAP, CensusInfeasible
from .permgroups.spec import SpecError, construct, parse_spec

EXIT_OK, EXIT_NOT_MF, EXIT_INFEASIBLE, EXIT_PARSE = 0, 1, 2, 3


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def cmd_decompose(args) -> int:
    spec = parse_spec(args.spec)
    dec = decompose_spec(spec, args.method, args.census_cap, args.threads, args.catalog)
    lines = [f"{lam}: {m}" for lam, m in dec.items()]
    payload = {
        "spec": str(spec),
        "provenance": dec.provenance,
        "decomposition": [{"partition": list(lam), "multiplicity": m} for lam, m in dec.items()],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_check(args) -> int:
    spec = parse_spec(args.spec)
    dec = decompose_spec(spec, args.method, args.census_cap, args.threads, args.catalog)
    group = construct(spec, args.catalog)
    index = factorial(group.n) // group.order()
    mf = is_multiplicity_free(dec)
    text = "\n".join(
        [
            f"multiplicity free: {'yes' if mf else 'no'}",
            f"rank: {rank(dec)}",
            f"index: {index}",
        ]
    )
    payload = {"spec": str(spec), "multiplicity_free": mf, "rank": rank(dec), "index": index, "provenance": dec.provenance}
    _emit(args, text, payload)
    return EXIT_OK if mf else EXIT_NOT_MF


def cmd_table(args) -> int:
    from .tables import FAIL, parse_param_override, run_table

    params = parse_param_override(args.param) if args.param else None
    results = run_table(args.id, args.row, params, args.census_cap, args.threads, args.catalog)
    counts: dict[str, int] = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    text = "\n".join([r.line() for r in results] + [f"table {args.id}: {summary}"])
    _emit(args, text, {"table": args.id, "rows": [r.as_dict() for r in results], "summary": counts})
    return EXIT_NOT_MF if counts.get(FAIL) else EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    results = run_suite(args.suite, cap=args.census_cap, threads=args.threads, catalog=args.catalog)
    text = "\n".join(r.report() for r in results)
    payload = [{"suite": r.name, "ok": r.ok, "lines": r.lines, "seconds": round(r.seconds, 2)} for r in results]
    _emit(args, text, payload)
    return EXIT_OK if all(r.ok for r in results) else EXIT_NOT_MF


def cmd_qi(args) -> int:
    from . import qi

    s = qi.scheme(args.n, args.k, args.vertex_cap)
    lines = [f"QI({args.n},{args.k}): {len(s.vertices)} uniform partitions, {len(s.classes) - 1} meet-table classes"]
    payload: dict = {"n": args.n, "k": args.k, "vertices": len(s.vertices)}
    if args.classes:
        payload["classes"] = []
        for c, table in enumerate(s.classes):
            flat = " ".join(str(x) for row in table for x in row)
            lines.append(f"class {c}: {flat}")
            payload["classes"].append([list(r) for r in table])
    ok = True
    if args.commute:
        ok, witness = qi.commuting_check(s.matrices())
        lines.append("scheme matrices commute" if ok else f"classes {witness[0] + 1} and {witness[1] + 1} do not commute")
        payload["commute"] = ok
    adj = None
    if args.clique or args.edges:
        import numpy as np

        adj = np.isin(s.index, qi.qi_classes(s)).astype(np.int64)
    if args.edges:
        with open(args.edges, "w") as fh:
            for u, v in qi.edge_list(adj):
                fh.write(f"{u} {v}\n")
        lines.append(f"edge list written to {args.edges}")
    if args.clique:
        r = qi.qi_max_clique(args.n, args.k, args.budget, args.vertex_cap)
        if r.exact:
            lines.append(f"maximum clique: {r.lower}")
        else:
            lines.append(f"clique bounds: [{r.lower}, {r.upper}] (budget exhausted)")
        lines.append("witness: " + " ".join(str(v) for v in r.witness))
        payload["clique"] = {"lower": r.lower, "upper": r.upper, "exact": r.exact, "witness": r.witness}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if ok else EXIT_NOT_MF


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multfree", description="Multiplicity-free permutation characters of S_n.")
    parser.add_argument("--method", choices=("auto", "brute", "closed"), default="auto")
    parser.add_argument("--census-cap", type=int, default=DEFAULT_CENSUS_CAP, help="largest group order to enumerate")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--catalog", default=None, help=f"catalog file (default: ${ENV_VAR} or the shipped one)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose ind_G^{S_n}(1)")
    p.add_argument("spec")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", help="multiplicity-free verdict, rank and index")
    p.add_argument("spec")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", help="reproduce a table and diff it against the stored values")
    p.add_argument("id", choices=("1", "2", "3", "4"))
    p.add_argument("--row", type=int, action="append", help="row number (repeatable)")
    p.add_argument("--param", action="append", help="override parameters, e.g. k=5,6 or k=5..8")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("closed-vs-brute", "hook-sets", "qi-commute", "cliques", "all"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qi", help="uniform partitions, meet-table schemes and QI cliques")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--commute", action="store_true", help="check that the scheme matrices commute")
    p.add_argument("--clique", action="store_true", help="maximum clique of QI(n,k)")
    p.add_argument("--classes", action="store_true", help="print the canonical meet tables")
    p.add_argument("--edges", metavar="PATH", help="write QI(n,k) as an edge list")
    p.add_argument("--budget", type=int, default=None, help="node budget for the clique search")
    p.add_argument("--vertex-cap", type=int, default=10_000)
    p.set_defaults(func=cmd_qi)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, UnknownGroup, CatalogError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_PARSE
    except (NoMethodAvailable, CensusInfeasible, LookupError, RuntimeError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
