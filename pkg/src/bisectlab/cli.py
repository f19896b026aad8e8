"""Command-line entry point.

Exit codes: 0 when all requested checks pass, 1 when violations were found,
2 for usage or IO errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import generators
from .analyzer import (
    analyze_graph,
    degeneracy_chain_check,
    hou_yan_bound,
    shearer_bisection_bound,
)
from .bisection import audit_run, run_bisection
from .experiment import (
    ExperimentConfig,
    default_corpus_specs,
    report_to_csv,
    run_experiment,
)
from .graphs import (
    connected_components,
    degree_sequence,
    is_free,
    load_graph,
    min_degree,
    save_graph,
    write_graph,
)
from .matching import qpm_to_json, quasi_perfect_matching
from .oracle import cut_probability_exact, estimate_cut_probability, \
    max_bisection_exact, max_matching_exact
from .tails import (
    verify_eight_term_grid,
    verify_tail_difference_identity,
    verify_diagonal_four_term,
    verify_shifted_four_term,
)


def _emit(args, payload: dict | str) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_gen(args) -> int:
    if args.family == "cycle":
        g = generators.cycle(args.n)
    elif args.family == "two-subdivision":
        base = {
            "k4": generators.complete_graph(4),
            "petersen": generators.petersen(),
        }[args.base]
        g = generators.two_subdivision(base)
    elif args.family == "tutte-coxeter":
        g = generators.tutte_coxeter()
    elif args.family == "random":
        g = generators.random_free_graph(args.n, args.target_m, args.seed)
    else:
        raise ValueError(f"unknown family {args.family}")
    if args.out:
        save_graph(g, args.out)
    else:
        sys.stdout.write(write_graph(g))
    return 0


def _cmd_check(args) -> int:
    g = load_graph(args.graph)
    lens = tuple(int(x) for x in args.lens.split(","))
    free, witness = is_free(g, lens)
    payload = {
        "n": g.n,
        "m": g.m,
        "free": free,
        "forbidden_lengths": list(lens),
        "witness_cycle": witness,
        "min_degree": min_degree(g),
        "components": len(connected_components(g)),
        "degree_sequence": degree_sequence(g),
    }
    _emit(args, payload)
    return 0 if free else 1


def _cmd_bisect(args) -> int:
    g = load_graph(args.graph)
    run = run_bisection(
        g, seed=args.seed, restarts=args.restarts, qpm_restarts=args.qpm_restarts
    )
    audit = audit_run(run.graph_even, run.qpm, run.raw_result)
    payload = run.result.to_json()
    payload["audit_ok"] = audit.ok
    payload["audit_failures"] = [name for name, _ in audit.failures()]
    _emit(args, payload)
    return 0 if audit.ok else 1


def _cmd_prob(args) -> int:
    g = load_graph(args.graph)
    if g.n % 2:
        print("graph has odd order; probabilities need the even-order form",
              file=sys.stderr)
        return 2
    q = quasi_perfect_matching(g, seed=args.seed, restarts=args.qpm_restarts)
    try:
        cut_p, p_uv, q_uv = cut_probability_exact(g, q, args.u, args.v)
    except ValueError as exc:
        from .analyzer import edge_partition

        e1 = edge_partition(g, q).e1
        print(f"error: {exc}\nsingly connecting edges under this matching: {e1}",
              file=sys.stderr)
        return 2
    payload = {
        "edge": [args.u, args.v],
        "cut_probability": str(cut_p),
        "p_uv": str(p_uv),
        "q_uv": str(q_uv),
        "identity": str(Fraction(1, 2) + (p_uv - q_uv) / 4),
        "qpm": qpm_to_json(q),
    }
    if args.samples:
        est, err = estimate_cut_probability(
            g, q, args.u, args.v, args.samples, seed=args.seed
        )
        payload["estimate"] = est
        payload["std_error"] = err
    _emit(args, payload)
    return 0


def _cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    g_even = g if g.n % 2 == 0 else None
    if g_even is None:
        from .graphs import parity_augment

        g_even = parity_augment(g)
    q = quasi_perfect_matching(g_even, seed=args.seed, restarts=args.qpm_restarts)
    report = analyze_graph(g_even, q)
    payload = report.to_json()
    payload["bounds"] = {
        "hou_yan": str(hou_yan_bound(g)),
        "shearer_xi": str(args.xi),
        "shearer": str(shearer_bisection_bound(g, Fraction(args.xi))),
    }
    chain = degeneracy_chain_check(g, args.k)
    payload["degeneracy_chain"] = {
        "ok": chain.ok,
        "detail": chain.detail,
        "sum_sqrt_degrees": str(chain.sum_sqrt_deg),
        "sum_sqrt_back_degrees": str(chain.sum_sqrt_back),
        "rhs": str(chain.rhs),
    }
    _emit(args, payload)
    return 0 if report.ok and chain.ok else 1


def _cmd_lemmas(args) -> int:
    reports = [
        verify_tail_difference_identity(args.a_max, args.a_max),
        verify_diagonal_four_term(args.t_max, args.s_max),
        verify_shifted_four_term(args.t_max, args.s_max),
        verify_eight_term_grid(args.t_max, args.s_max),
    ]
    payload = {r.name: r.to_json() for r in reports}
    _emit(args, payload)
    return 0 if all(r.ok for r in reports) else 1


def _cmd_oracle(args) -> int:
    g = load_graph(args.graph)
    payload: dict = {"n": g.n, "m": g.m}
    if args.what in ("max-bisection", "both"):
        size, labels = max_bisection_exact(g)
        payload["max_bisection"] = size
        payload["witness"] = list(labels)
    if args.what in ("max-matching", "both"):
        payload["max_matching"] = max_matching_exact(g)
    _emit(args, payload)
    return 0


def _cmd_experiment(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = ExperimentConfig.from_json(json.load(fh))
    else:
        cfg = ExperimentConfig(corpus=default_corpus_specs())
    if args.seed is not None:
        cfg.seed = args.seed
    if args.restarts is not None:
        cfg.restarts = args.restarts
    if args.qpm_restarts is not None:
        cfg.qpm_restarts = args.qpm_restarts
    report = run_experiment(cfg)
    if args.format == "csv":
        _emit(args, report_to_csv(report))
    else:
        _emit(args, report)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bisectlab",
        description="Randomized bisection laboratory for {C4,C6}-free graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a corpus graph")
    p.add_argument("family",
                   choices=["cycle", "two-subdivision", "tutte-coxeter", "random"])
    p.add_argument("base", nargs="?", choices=["k4", "petersen"],
                   help="base graph for two-subdivision")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--target-m", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="forbidden-cycle and degree report")
    p.add_argument("graph")
    p.add_argument("--lens", default="4,6")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bisect", help="run the two-stage bisection")
    p.add_argument("graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--qpm-restarts", type=int, default=16)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bisect)

    p = sub.add_parser("prob", help="exact cut probability of an edge")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--qpm-restarts", type=int, default=16)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_prob)

    p = sub.add_parser("analyze", help="edge partition and special paths")
    p.add_argument("graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--qpm-restarts", type=int, default=16)
    p.add_argument("--xi", default="1/32")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("lemmas", help="exact grid verifiers")
    p.add_argument("--t-max", type=int, default=12)
    p.add_argument("--s-max", type=int, default=24)
    p.add_argument("--a-max", type=int, default=24)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_lemmas)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    p.add_argument("graph")
    p.add_argument("--what", choices=["max-bisection", "max-matching", "both"],
                   default="both")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("experiment", help="full corpus experiment")
    p.add_argument("--config")
    p.add_argument("--seed", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--qpm-restarts", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        # GraphFormatError and domain errors are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
