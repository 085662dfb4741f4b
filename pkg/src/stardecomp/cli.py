"""Batch command line front end.

Subcommands: decompose, embed, family, sweep, bounds. All outputs are
deterministic JSON or CSV; the sweep's runtime column is the only field that
varies between runs. Budgets come from flags first, then the STARDEC_BUDGET
environment variable, then defaults.

Exit codes: 0 decision reached, 1 malformed input, 2 budget or search limit
exceeded, 4 a family claim was refuted, 5 a sweep row broke its cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import families, oracle
from .embedding import bound_report, embed
from .graphs import read_graph
from .solver import (
    StarDecomposition,
    decide_star_decomposition,
    decompose_complete,
    decomposition_to_dot,
    two_star_decompose,
)

SWEEP_HEADER = "# stardecomp sweep v1: k,n,seed,s,minimality,general_cap,within_general_cap,large_n_cap,within_large_n_cap,runtime_ms"
SWEEP_COLUMNS = [
    "k",
    "n",
    "seed",
    "s",
    "minimality",
    "general_cap",
    "within_general_cap",
    "large_n_cap",
    "within_large_n_cap",
    "runtime_ms",
]


def _env_budget(flag_value: int | None, default: int) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("STARDEC_BUDGET")
    if env is not None:
        return int(env)
    return default


def _dump_json(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_decompose(args: argparse.Namespace) -> int:
    k = args.k
    if args.complete is not None:
        dec = decompose_complete(args.complete, k)
        if dec is None:
            _dump_json({"exists": False, "n": args.complete, "k": k}, args.out)
        else:
            _dump_json(
                {"exists": True, "n": args.complete, "k": k, "decomposition": dec.to_json_dict()},
                args.out,
            )
        return 0
    g = read_graph(args.graph)
    if args.gamma is not None:
        gamma = json.loads(Path(args.gamma).read_text())
        result = decide_star_decomposition(g, k, gamma)
        if isinstance(result, StarDecomposition):
            payload = {"exists": True, "decomposition": result.to_json_dict()}
            if args.dot:
                Path(args.dot).write_text(decomposition_to_dot(g, result))
        else:
            payload = {"exists": False, "witness": result.to_json_dict()}
        _dump_json(payload, args.out)
        return 0
    if k == 2:
        dec = two_star_decompose(g)
        if dec is None:
            odd = [
                comp
                for comp in g.components()
                if g.induced_edge_count(set(comp)) % 2 == 1
            ]
            _dump_json({"exists": False, "odd_components": odd}, args.out)
        else:
            _dump_json({"exists": True, "decomposition": dec.to_json_dict()}, args.out)
            if args.dot:
                Path(args.dot).write_text(decomposition_to_dot(g, dec))
        return 0
    budget = _env_budget(args.budget, oracle.DEFAULT_GAMMA_BUDGET)
    transcript = oracle.exhaustive_gamma_search(g, k, budget)
    if transcript.outcome == oracle.BUDGET_EXCEEDED:
        _dump_json({"outcome": transcript.outcome, "tried": transcript.nodes_explored}, args.out)
        return 2
    if transcript.outcome == oracle.FOUND:
        payload = {"exists": True, "decomposition": transcript.decomposition.to_json_dict()}
        if args.dot:
            Path(args.dot).write_text(decomposition_to_dot(g, transcript.decomposition))
    else:
        payload = {"exists": False, "gamma_candidates_tried": transcript.nodes_explored}
    _dump_json(payload, args.out)
    return 0


def _cmd_embed(args: argparse.Namespace) -> int:
    g = read_graph(args.leave)
    budget = _env_budget(args.budget, 2000)
    try:
        cert = embed(g, args.k, max_s=args.max_s, gamma_budget=budget)
    except RuntimeError as exc:
        print(f"no embedding within limits: {exc}", file=sys.stderr)
        return 2
    _dump_json(cert.to_json_dict(), args.out)
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    inst = families.generate(args.id, k=args.k, n=args.n, t=args.t)
    if not args.verify:
        _dump_json(inst.to_json_dict(), args.out)
        return 0
    budget = families.VerifyBudget(flow_edge_limit=args.flow_limit)
    report = families.verify_instance(inst, budget)
    _dump_json(report.to_json_dict(), args.out)
    return 0 if report.all_ok() else 4


def _sweep_cell(task: tuple[int, int, int, int]) -> dict:
    k, n, seed, budget = task
    _, leave = oracle.sample_maximal_partial(n, k, seed)
    start = time.perf_counter()
    cert = embed(leave, k, gamma_budget=budget)
    elapsed_ms = int(1000 * (time.perf_counter() - start))
    if k % 2 == 1:
        general_cap = 9 * k / 4
        within = 4 * cert.s < 9 * k
        s1_cap = 2 * k - 2
    else:
        from .exactnum import Surd

        cap = Surd.of(6 * k, -2 * k, 2)
        general_cap = float(cap)
        within = cap > cert.s
        s1_cap = 3 * k - 2
    if k >= 3:
        above_threshold = bound_report(n, k).n_above_threshold()
    else:
        above_threshold = True
    return {
        "k": k,
        "n": n,
        "seed": seed,
        "s": cert.s,
        "minimality": cert.minimality,
        "general_cap": f"{general_cap:.6f}",
        "within_general_cap": int(within),
        "large_n_cap": s1_cap,
        "within_large_n_cap": int(cert.s <= s1_cap) if above_threshold else "",
        "runtime_ms": elapsed_ms,
    }


def run_sweep(
    k_values: list[int], n_values: list[int], seeds: int, budget: int, jobs: int = 1
) -> list[dict]:
    tasks = [
        (k, n, seed, budget)
        for k in k_values
        for n in n_values
        if n >= k + 1
        for seed in range(seeds)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_cell, tasks, chunksize=8))
    else:
        rows = [_sweep_cell(t) for t in tasks]
    rows.sort(key=lambda r: (r["k"], r["n"], r["seed"]))
    return rows


def _parse_int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def _parse_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return _parse_int_list(text)


def _cmd_sweep(args: argparse.Namespace) -> int:
    budget = _env_budget(args.budget, 2000)
    rows = run_sweep(
        _parse_int_list(args.k), _parse_range(args.n), args.seeds, budget, args.jobs
    )
    buf = io.StringIO()
    buf.write(SWEEP_HEADER + "\n")
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS)
    writer.writeheader()
    writer.writerows(rows)
    _write_text(buf.getvalue(), args.out)
    violations = [r for r in rows if not r["within_general_cap"]]
    violations += [r for r in rows if r["within_large_n_cap"] == 0]
    return 5 if violations else 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    n_values = _parse_range(args.n) if args.n else [None]
    buf = io.StringIO()
    buf.write("# stardecomp bounds v1\n")
    columns = [
        "k",
        "n",
        "s_lower_general",
        "s_lower_general_min_s",
        "s_lower_clique",
        "s_lower_clique_min_s",
        "n_threshold",
        "n_above_threshold",
        "general_cap",
        "large_n_cap",
    ]
    writer = csv.DictWriter(buf, fieldnames=columns)
    writer.writeheader()
    for n in n_values:
        report = bound_report(n if n is not None else 1, args.k)
        data = report.to_json_dict()
        row = {
            "k": args.k,
            "n": "" if n is None else n,
            "s_lower_general": "" if n is None else f"{data['s_lower_general']['approx']:.6f}",
            "s_lower_general_min_s": "" if n is None else data["s_lower_general"]["min_integer_s_above"],
            "s_lower_clique": "",
            "s_lower_clique_min_s": "",
            "n_threshold": f"{data['n_threshold']['approx']:.6f}",
            "n_above_threshold": "" if n is None else int(data["n_threshold"]["n_above_threshold"]),
            "general_cap": f"{data['general_cap']['approx']:.6f}",
            "large_n_cap": data["large_n_cap"],
        }
        if n is not None and data["s_lower_clique"] is not None:
            row["s_lower_clique"] = f"{data['s_lower_clique']['approx']:.6f}"
            row["s_lower_clique_min_s"] = data["s_lower_clique"]["min_integer_s_above"]
        writer.writerow(row)
    _write_text(buf.getvalue(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stardecomp",
        description="Exact k-star decomposition solver, embedder, and family verifier",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a graph into k-stars")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--complete", type=int, help="use K_n for the given n")
    p.add_argument("--graph", help="graph file (edge list or JSON)")
    p.add_argument("--gamma", help="JSON list of per-vertex center counts")
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    p.add_argument("--dot", help="write a DOT rendering of the decomposition")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("embed", help="embed a leave into a larger complete graph")
    p.add_argument("--leave", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-s", type=int, dest="max_s")
    p.add_argument("--budget", type=int, help="gamma candidates tried per sub-k s")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("family", help="generate or verify a tightness family")
    p.add_argument("--id", required=True, choices=families.FAMILY_IDS)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--flow-limit", type=int, default=5000, dest="flow_limit")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("sweep", help="sample leaves and embed across a (k, n) grid")
    p.add_argument("--k", required=True, help="comma-separated list, e.g. 3,5")
    p.add_argument("--n", required=True, help="range lo:hi or comma list")
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bounds", help="tabulate the embedding-size bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", help="range lo:hi or comma list")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
