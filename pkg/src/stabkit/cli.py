"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch or failed invariant,
2 unparsable input or arguments, 3 unmet precondition (disconnected or
bipartite graph, bad vertex set), 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .corpus import atlas_graphs, random_graphs, run_suite
from .ears import min_critical_making, nu_star_mask, optimal_generalized_decomposition, phi_psi
from .errors import InputError, ParseError, ResourceLimitError
from .graph import Graph, format_label, parse_edge_list, read_edge_list, require_connected_nonbipartite
from .limits import Limits, default_limits
from .oracle import edge_ideal, irreducible_decomposition, irreducible_text, power, product
from .replication import make_factor_critical
from .stab import analyze, ass_chain

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabkit",
        description="Associated primes of powers of edge ideals, with an ideal-theoretic cross-check.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-vertices", type=_positive, help="largest graph for subset enumeration")
    common.add_argument("--max-subset-size", type=_nonneg, help="largest edge set tried by phi searches")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--input", "-i", required=True, metavar="PATH", help="edge-list file, '-' for stdin")

    def fmt(p: argparse.ArgumentParser, choices: tuple[str, ...] = ("json", "text")) -> None:
        p.add_argument("--format", "-f", choices=choices, default="json")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("analyze", parents=[graph_in, common], help="astab, dstab, Ass chain and bounds")
    p.add_argument("--k-max", type=_positive, help="extend the Ass chain to this power")
    fmt(p)

    p = sub.add_parser("ass", parents=[graph_in, common], help="associated primes of I^k")
    p.add_argument("--k", type=_positive, required=True)
    fmt(p)

    p = sub.add_parser("phi", parents=[graph_in, common], help="phi, psi, nu* and a factor-critical replication")
    fmt(p)

    p = sub.add_parser("decompose", parents=[graph_in, common], help="optimal generalized ear decomposition")
    fmt(p, ("json", "text", "dot"))

    p = sub.add_parser("oracle", parents=[graph_in, common], help="irreducible decomposition of I^k")
    p.add_argument("--k", type=_positive, required=True)
    fmt(p)

    p = sub.add_parser("verify", parents=[graph_in, common], help="compare formula and oracle for k = 1..k-max")
    p.add_argument("--k-max", type=_positive, default=3)
    fmt(p)

    p = sub.add_parser("corpus", parents=[common], help="run the invariant suite over small graphs")
    p.add_argument("--size", type=_positive, required=True, help="largest vertex count")
    p.add_argument("--samples", type=_positive, help="random mode: number of graphs (exhaustive if omitted)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=_positive, default=1)
    fmt(p)
    return parser


def _limits(args: argparse.Namespace) -> Limits:
    return default_limits().override(max_vertices=args.max_vertices, max_subset_size=args.max_subset_size)


def _read_graph(path: str) -> Graph:
    g = parse_edge_list(sys.stdin.read()) if path == "-" else read_edge_list(path)
    require_connected_nonbipartite(g)
    return g


def _labels(g: Graph, s) -> list[str]:
    return [format_label(v) for v in g.sort_labels(s)]


def _prime_sort(g: Graph, primes) -> list[list[str]]:
    return [_labels(g, u) for u in sorted(primes, key=lambda u: (-len(u), sorted(g.index(v) for v in u)))]


def _emit(obj: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    report = analyze(g, args.k_max, _limits(args))
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_ass(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    primes = _prime_sort(g, ass_chain(g, [args.k], _limits(args))[args.k])
    text = f"Ass(I^{args.k}): {len(primes)} primes\n" + "".join("  {" + ", ".join(u) + "}\n" for u in primes)
    _emit({"k": args.k, "primes": primes}, text, args.format)
    return EXIT_OK


def cmd_phi(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    limits = _limits(args)
    phi, psi = phi_psi(g, limits)
    making = min_critical_making(g, limits)
    fc = make_factor_critical(g, limits)
    nu = nu_star_mask(g, g.full_mask, limits)
    edges = sorted(g.edge_key(u, v) for u, v in making.witness)
    witness = [[format_label(g.vertices[a]), format_label(g.vertices[b])] for a, b in edges]
    a = {format_label(v): k for v, k in zip(g.vertices, fc.a)}
    obj = {"phi": phi, "psi": psi, "nuStar": nu, "criticalMaking": witness, "replication": a}
    text = (
        f"phi = {phi}\npsi = {psi}\nnu* = {nu}\n"
        f"critical-making edges: {' '.join('-'.join(e) for e in witness)}\n"
        f"replication: {' '.join(f'{v}:{k}' for v, k in a.items() if k)}\n"
    )
    _emit(obj, text, args.format)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    dec = optimal_generalized_decomposition(g, _limits(args))
    if args.format == "json":
        sys.stdout.write(dec.to_json() + "\n")
    elif args.format == "dot":
        sys.stdout.write(dec.to_dot())
    else:
        sys.stdout.write(dec.to_text())
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    limits = _limits(args)
    if args.k > limits.max_oracle_power:
        raise ResourceLimitError(f"k={args.k} exceeds max_oracle_power={limits.max_oracle_power}")
    comps = irreducible_decomposition(power(edge_ideal(g), args.k), limits)
    vs = g.vertices
    primes = {frozenset(vs[i] for i, e in enumerate(a) if e) for a in comps}
    obj = {
        "k": args.k,
        "variables": [format_label(v) for v in vs],
        "components": [list(a) for a in comps],
        "associatedPrimes": _prime_sort(g, primes),
    }
    text = f"I^{args.k} = intersection of {len(comps)} irreducible components\n"
    text += "".join(f"  {irreducible_text(vs, a)}\n" for a in comps)
    _emit(obj, text, args.format)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    limits = _limits(args)
    if g.n > limits.max_oracle_vertices or args.k_max > limits.max_oracle_power:
        raise ResourceLimitError(
            f"verify needs |V| <= {limits.max_oracle_vertices} and k <= {limits.max_oracle_power}"
        )
    ks = list(range(1, args.k_max + 1))
    formula = ass_chain(g, ks, limits)
    rows = []
    ideal = edge_ideal(g)
    current = ideal
    vs = g.vertices
    for k in ks:
        if k > 1:
            current = product(current, ideal)
        comps = irreducible_decomposition(current, limits)
        oracle = {frozenset(vs[i] for i, e in enumerate(a) if e) for a in comps}
        rows.append(
            {
                "k": k,
                "agree": oracle == formula[k],
                "formula": _prime_sort(g, formula[k]),
                "oracle": _prime_sort(g, oracle),
            }
        )
    ok = all(r["agree"] for r in rows)
    lines = []
    for r in rows:
        lines.append(f"k={r['k']}: {'agree' if r['agree'] else 'MISMATCH'} ({len(r['formula'])} primes)")
        if not r["agree"]:
            lines.append("  formula: " + " ".join("{" + ",".join(u) + "}" for u in r["formula"]))
            lines.append("  oracle:  " + " ".join("{" + ",".join(u) + "}" for u in r["oracle"]))
    _emit({"agree": ok, "rows": rows}, "\n".join(lines) + "\n", args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_corpus(args: argparse.Namespace) -> int:
    limits = _limits(args)
    if args.samples is None:
        graphs = list(atlas_graphs(args.size, limits))
    else:
        if args.size > limits.max_vertices:
            raise ResourceLimitError(f"size {args.size} exceeds max_vertices={limits.max_vertices}")
        graphs = random_graphs(args.size, args.samples, args.seed)
    report = run_suite(graphs, limits, args.jobs)
    _emit(report.to_json_obj(), report.to_text(), args.format)
    return EXIT_OK if report.ok else EXIT_MISMATCH


COMMANDS = {
    "analyze": cmd_analyze,
    "ass": cmd_ass,
    "phi": cmd_phi,
    "decompose": cmd_decompose,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "corpus": cmd_corpus,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
