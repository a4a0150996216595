"""Command line front end.

Exit codes: 0 for success or a verified/PASS result, 1 for negative
verdicts (exhausted searches, INCONCLUSIVE or FAIL reports, failed
verification, generator exhaustion), 2 for usage, input, and size-gate
errors. Rationals always print as "p/q", never as decimals.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arboricity import arboricity, fractional_arboricity, partition_into_forests
from .decompose import (
    REMAINDER_KINDS,
    Decomposition,
    decompose_forests_bounded,
    decompose_forests_matching,
    verify_decomposition,
)
from .domination import edge_domination, two_path_domination
from .experiment import SELECTORS, ExperimentConfig, emit_report, run_experiment
from .generate import GenSpec, GenerationError, generate
from .graphs import Graph, parse_graph, serialize_graph
from .prooftrace import VERDICT_PASS, run_prooftrace
from .rationals import format_value, parse_fraction


def _load_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _parse_range(text: str) -> tuple[int, ...]:
    """Comma list of integers and lo:hi spans, e.g. "1,2" or "4:8"."""
    out: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if ":" in token:
            lo_text, hi_text = token.split(":", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError(f"bad span {token!r}: upper end below lower")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(token))
    return tuple(out)


def cmd_arboricity(args) -> int:
    graph = _load_graph(args.file)
    res = arboricity(graph)
    if args.json:
        print(
            json.dumps(
                {
                    "arboricity": format_value(res.value),
                    "witness_vertices": sorted(res.witness_vertices),
                }
            )
        )
    else:
        print(format_value(res.value))
    return 0


def cmd_frac(args) -> int:
    graph = _load_graph(args.file)
    res = fractional_arboricity(graph, mode=args.mode)
    if args.json:
        print(
            json.dumps(
                {
                    "fractional_arboricity": format_value(res.value),
                    "witness_vertices": sorted(res.witness_vertices),
                }
            )
        )
    else:
        print(format_value(res.value))
    return 0


def cmd_partition(args) -> int:
    graph = _load_graph(args.file)
    res = partition_into_forests(graph, args.k)
    if res.ok:
        if args.json:
            print(
                json.dumps(
                    {
                        "status": "ok",
                        "k": args.k,
                        "forests": [sorted(f) for f in res.forests],
                    }
                )
            )
        else:
            for i, forest in enumerate(res.forests):
                print(f"forest {i}: {' '.join(map(str, sorted(forest)))}")
        return 0
    if args.json:
        print(
            json.dumps(
                {
                    "status": "violation",
                    "k": args.k,
                    "violating_edges": sorted(res.violation),
                }
            )
        )
    else:
        print(f"violating edges: {' '.join(map(str, sorted(res.violation)))}")
    return 1


def _decomposition_doc(dec: Decomposition, k: int) -> dict:
    return {
        "status": "ok",
        "k": k,
        "kind": dec.kind,
        "d": dec.degree_bound,
        "forests": [sorted(f) for f in dec.forests],
        "remainder": sorted(dec.remainder),
    }


def cmd_decompose(args) -> int:
    graph = _load_graph(args.file)
    if args.remainder == "matching":
        if args.d is not None:
            raise ValueError("--d applies to forest and graph remainders only")
        dec = decompose_forests_matching(graph, args.k)
    else:
        if args.d is None:
            raise ValueError(f"--d is required for remainder {args.remainder!r}")
        dec = decompose_forests_bounded(graph, args.k, args.d, args.remainder)
    if dec is None:
        if args.json:
            print(
                json.dumps(
                    {"status": "exhausted", "k": args.k, "kind": args.remainder, "d": args.d}
                )
            )
        else:
            print("status: exhausted")
        return 1
    if args.json:
        print(json.dumps(_decomposition_doc(dec, args.k), indent=2))
    else:
        for i, forest in enumerate(dec.forests):
            print(f"forest {i}: {' '.join(map(str, sorted(forest)))}")
        print(f"remainder ({dec.kind}): {' '.join(map(str, sorted(dec.remainder)))}")
        print("status: ok")
    return 0


def cmd_verify(args) -> int:
    graph = _load_graph(args.file)
    doc = json.loads(Path(args.decomposition).read_text(encoding="utf-8"))
    if not isinstance(doc, dict) or "forests" not in doc:
        raise ValueError("decomposition document needs a 'forests' array")
    forests = tuple(frozenset(f) for f in doc["forests"])
    if doc.get("remainder") is not None:
        remainder = frozenset(doc["remainder"])
    else:
        covered: set[int] = set()
        for f in forests:
            covered |= f
        remainder = graph.full_edge_set() - covered
    kind = doc.get("kind", "matching")
    d = args.d if args.d is not None else doc.get("d")
    dec = Decomposition(forests=forests, remainder=remainder, kind=kind, degree_bound=d)
    ok, reason = verify_decomposition(graph, dec, args.k, d)
    if ok:
        print("verified")
        return 0
    print(f"invalid: {reason}")
    return 1


def cmd_domination(args) -> int:
    graph = _load_graph(args.file)
    if args.kind == "edge":
        res = edge_domination(graph)
    else:
        res = two_path_domination(graph)
    if args.json:
        doc = {
            "kind": args.kind,
            "value": format_value(res.value),
            "witness": None if res.witness is None else [
                list(w) if isinstance(w, tuple) else w for w in res.witness
            ],
        }
        if args.kind == "two-path":
            doc["witness_pairs"] = (
                None if res.witness_pairs is None else [list(p) for p in res.witness_pairs]
            )
        print(json.dumps(doc))
    else:
        print(format_value(res.value))
    return 0


def cmd_prooftrace(args) -> int:
    graph = _load_graph(args.file)
    report = run_prooftrace(graph, args.k, max_edges=args.max_edges)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(f"flats: {report.flat_count}")
        print(f"link: {'ok' if report.link_ok else 'FAIL'}")
        print(f"basic sets: {'ok' if report.basic_obs_ok else 'FAIL'}")
        mindeg = all(r.mindeg_ok for r in report.records)
        print(f"flat min degree: {'ok' if mindeg else 'FAIL'}")
        inters = all(r.inters_status == "pass" for r in report.records)
        print(f"domination condition: {'ok' if inters else 'inconclusive'}")
        print(f"hypothesis: {'ok' if report.hypothesis_ok else 'not satisfied'}")
        print(report.verdict)
    return 0 if report.verdict == VERDICT_PASS else 1


def cmd_gen(args) -> int:
    spec = GenSpec(
        n=args.n,
        target_bound=parse_fraction(args.bound),
        allow_parallel=args.parallel_edges,
        seed=args.seed,
        max_rejections=args.max_rejections,
    )
    graph = generate(spec)
    text = serialize_graph(graph)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output} (n={graph.vertex_count}, m={graph.edge_count})")
    return 0


def cmd_experiment(args) -> int:
    config = ExperimentConfig(
        selector=args.selector,
        k_values=_parse_range(args.k_range),
        n_values=_parse_range(args.n_range),
        trials=args.trials,
        seed=args.seed,
        d=args.d,
        custom_bound=None if args.bound is None else parse_fraction(args.bound),
        remainder=args.remainder,
        allow_parallel=args.parallel_edges,
        max_rejections=args.max_rejections,
    )
    rows = run_experiment(config, jobs=args.jobs)
    text, payload = emit_report(config, rows)
    sys.stdout.write(text)
    if args.json is not None:
        blob = json.dumps(payload, indent=2) + "\n"
        if args.json == "-":
            sys.stdout.write(blob)
        else:
            Path(args.json).write_text(blob, encoding="utf-8")
    return 0 if all(r.clean for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arborkit",
        description="exact arboricity, forest decompositions, and domination checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arboricity", help="minimum number of covering forests")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_arboricity)

    p = sub.add_parser("frac", help="fractional arboricity as an exact rational")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--mode", choices=("exact", "brute"), default="exact")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frac)

    p = sub.add_parser("partition", help="split the edges into k forests")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("decompose", help="k forests plus a small remainder")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--remainder", choices=REMAINDER_KINDS, default="matching")
    p.add_argument("--d", type=int, help="remainder degree bound (forest/graph kinds)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="re-check a decomposition document")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--decomposition", required=True, help="JSON from decompose --json")
    p.add_argument("--d", type=int, help="override the document's degree bound")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("domination", help="edge or 2-path domination number")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--kind", choices=("edge", "two-path"), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_domination)

    p = sub.add_parser("prooftrace", help="desk-scale structural check battery")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-edges", type=int, help="override the size gate")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_prooftrace)

    p = sub.add_parser("gen", help="seeded random graph below a density bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", required=True, help="rational p/q")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--parallel-edges", action="store_true")
    p.add_argument("--max-rejections", type=int, default=10000)
    p.add_argument("-o", "--output", required=True, help="file path, or - for stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("experiment", help="generate/decompose/verify sweep")
    p.add_argument("--selector", choices=SELECTORS, required=True)
    p.add_argument("--k-range", default="1", help="e.g. 1,2 or 1:3")
    p.add_argument("--n-range", required=True, help="e.g. 6:10")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--bound", help="rational p/q (selector custom)")
    p.add_argument("--remainder", choices=REMAINDER_KINDS, default="matching")
    p.add_argument("--parallel-edges", action="store_true")
    p.add_argument("--max-rejections", type=int, default=10000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="write the JSON report here, - for stdout")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
