"""Command-line front end.

Exit codes: 0 ok, 2 usage or parse error, 3 invalid or unanalysable graph,
4 bad edge selector, 5 corpus caps exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .classify import classify, format_ratio, report_document
from .constructions import cartesian_product, lexicographic_product, square_replacement, subdivision
from .errors import (
    CapExceeded,
    EdgeNotFound,
    GraphError,
    InvalidClaimParams,
    ParseError,
    UnknownClaim,
)
from .graph import FAMILIES, FamilySpec, all_pairs_distances, generate
from .graphio import parse_graph, read_graph, serialize_graph
from .metrics import distance_partition
from .theorems import (
    CARTESIAN_CLAIMS,
    GRAPH_CLAIMS,
    LEX_CLAIMS,
    PARAM_CLAIMS,
    ClaimId,
    CorpusSpec,
    Instance,
    run_corpus,
    summarize,
    verify_claim,
)

EXIT_OK, EXIT_USAGE, EXIT_GRAPH, EXIT_SELECTOR, EXIT_CAPS = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _family_spec(args) -> FamilySpec:
    if args.family == "complete_bipartite":
        if args.m is None or args.n is None:
            raise UsageError("complete_bipartite needs --m and --n")
        return FamilySpec("complete_bipartite", (args.m, args.n))
    k = args.k if args.k is not None else args.n
    if k is None:
        raise UsageError(f"{args.family} needs --k (or --n)")
    return FamilySpec(args.family, (k,))


def _load(path: str | None):
    if path is None:
        raise UsageError("missing input file")
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text, encoding="ascii", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    chosen = [x for x in (args.family, args.transform, args.product) if x]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --family, --transform, --product")
    if args.family:
        g = generate(_family_spec(args))
        comment = _family_spec(args).label
    elif args.transform:
        a = _load(args.i)
        g = subdivision(a) if args.transform == "subdivision" else square_replacement(a)
        comment = f"{args.transform} of {args.i}"
    else:
        a, b = _load(args.i), _load(args.j)
        g = cartesian_product(a, b) if args.product == "cartesian" else lexicographic_product(a, b)
        comment = f"{args.product} product of {args.i} and {args.j}"
    _emit(serialize_graph(g, comment), args.o)
    return EXIT_OK


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, Fraction):
        return format_ratio(x)
    if isinstance(x, tuple):
        return ", ".join(_fmt(v) for v in x)
    return str(x)


def render_table(report) -> str:
    r = report
    lines = [
        f"vertices     {r.vertices}",
        f"edges        {r.edges}",
        f"diameter     {r.diameter}",
        f"bipartite    {r.bipartite}",
        f"szeged       {r.szeged}",
        f"edge_szeged  {r.edge_szeged}",
        "",
        f"edb          {r.edb}",
        f"nedb gamma   {_fmt(r.nedb_gamma)}",
        f"sedb         {r.sedb}",
        f"eqdb lambda  {_fmt(r.eqdb_lambda)}",
        f"qdb lambda   {_fmt(r.qdb_lambda)}",
        f"nqedb        {_fmt(r.nqedb)}",
        f"nqdb         {_fmt(r.nqdb)}",
        f"sqedb lambda {_fmt(r.sqedb_lambda)}" + (f"  ({r.sqedb_note})" if r.sqedb_note else ""),
        "",
    ]
    header = ("g", "h", "m_g", "m_h", "m_0", "n_g", "n_h", "n_0")
    rows = [tuple(str(x) for x in (e.g, e.h, e.m_g, e.m_h, e.m_0, v.n_g, v.n_h, v.n_0))
            for e, v in r.edge_table]
    widths = [max(len(c) for c in col) for col in zip(header, *rows)]
    for row in (header, *rows):
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    report = classify(_load(args.i))
    if args.format == "json":
        text = json.dumps(report_document(report), indent=2) + "\n"
    else:
        text = render_table(report)
    _emit(text, args.o)
    return EXIT_OK


def _parse_edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise EdgeNotFound(f"edge selector {text!r} is not 'u,v'") from None
    return u, v


def cmd_partition(args) -> int:
    g = _load(args.i)
    edge = _parse_edge(args.edge)
    p = distance_partition(all_pairs_distances(g), edge)
    lines = [f"D[i_to_g={i}, j_to_h={j}] = {c}" for (i, j), c in p.cells]
    m_g, m_h, m_0 = p.balance()
    lines.append(f"m_g={m_g} m_h={m_h} m_0={m_0}")
    _emit("\n".join(lines) + "\n", args.o)
    return EXIT_OK


def _param_value(text: str):
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


def _instance_for(claim: ClaimId, args) -> Instance | None:
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key.strip()] = _param_value(value)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad parameter value {value!r}") from None
    if claim in PARAM_CLAIMS:
        if not params and args.family:
            spec = _family_spec(args)
            names = ("m", "n") if len(spec.params) == 2 else ("m",)
            params = dict(zip(names, spec.params))
        return Instance.of_params(**params) if params else None
    if claim in GRAPH_CLAIMS:
        if args.family:
            spec = _family_spec(args)
            return Instance.of_graph(spec.label, generate(spec))
        if args.i:
            return Instance.of_graph(args.i, _load(args.i))
        return None
    if args.i and args.j:
        kind = "cartesian" if claim in CARTESIAN_CLAIMS else "lexicographic"
        return Instance.of_product(kind, (args.i, _load(args.i)), (args.j, _load(args.j)))
    return None


def dump_results(results) -> str:
    """JSON array with one compact result object per line."""
    if not results:
        return "[]\n"
    body = ",\n".join(json.dumps(r.to_json(), separators=(", ", ": ")) for r in results)
    return "[\n" + body + "\n]\n"


def cmd_verify(args) -> int:
    if args.claim == "all":
        claims = list(ClaimId)
    else:
        claims = [ClaimId.parse(c) for c in args.claim.split(",")]
    results = []
    corpus_claims = []
    for c in claims:
        inst = None if args.claim == "all" else _instance_for(c, args)
        if inst is None:
            corpus_claims.append(c)
        else:
            results.extend(r for r in verify_claim(c, inst))
    if corpus_claims:
        spec = CorpusSpec(
            max_vertices=args.max_vertices,
            max_edges=args.max_edges,
            family_max_vertices=min(40, args.max_vertices),
        )
        results.extend(run_corpus(spec, corpus_claims))
    _emit(dump_results(results), args.o)
    counts = summarize(results)
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return EXIT_OK if counts["fail"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgebalance", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def family_flags(p):
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)

    gen = sub.add_parser("gen", help="write a family member, transform or product")
    family_flags(gen)
    gen.add_argument("--transform", choices=("subdivision", "square_replacement"))
    gen.add_argument("--product", choices=("cartesian", "lexicographic"))
    gen.add_argument("-i")
    gen.add_argument("-j")
    gen.add_argument("-o")
    gen.set_defaults(func=cmd_gen)

    an = sub.add_parser("analyze", help="classify a graph")
    an.add_argument("-i", required=True)
    an.add_argument("-o")
    an.add_argument("--format", choices=("json", "table"), default="table")
    an.set_defaults(func=cmd_analyze)

    part = sub.add_parser("partition", help="dump the distance partition of one edge")
    part.add_argument("-i", required=True)
    part.add_argument("--edge", required=True, help="edge selector 'u,v'; u plays g")
    part.add_argument("-o")
    part.set_defaults(func=cmd_partition)

    ver = sub.add_parser("verify", help="check claims on an instance or on the corpus")
    ver.add_argument("--claim", required=True, help="claim id, comma list, or 'all'")
    ver.add_argument("--param", action="append", help="key=value, repeatable")
    family_flags(ver)
    ver.add_argument("-i")
    ver.add_argument("-j")
    ver.add_argument("-o")
    ver.add_argument("--max-vertices", type=int, default=64)
    ver.add_argument("--max-edges", type=int, default=256)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ParseError, UnknownClaim, InvalidClaimParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeNotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SELECTOR
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPS
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRAPH


if __name__ == "__main__":
    sys.exit(main())
