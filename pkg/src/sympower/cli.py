"""Command-line interface: build symmetric powers, solve, bound, audit, search.

Exit codes: 0 success, 1 usage/input error, 2 budget-degraded results,
3 audit failure. Results go to stdout as JSON lines (CSV for ``bounds``),
or append to ``--out``; appended files are keyed by (command, graph, k,
seed) and already-present keys are skipped, so interrupted sweeps resume.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from math import comb
from pathlib import Path

from . import c5 as c5lab
from . import mis
from .bounds import CSV_HEADER, make_report
from .configurations import enumerate_configurations, rank
from .errors import BudgetExhaustedError, CapExceededError
from .graphs import Graph, alpha_exact, clique_cover_number, construct_named, labeled_graphs, parse_graph
from .quotient import build_quotient, strong_power_quotient_oracle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_AUDIT = 3

VERIFY_MAX_K = 5  # midpoint audit is exhaustive over all configuration pairs


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems must exit 1, not argparse's 2
        raise CliError(message)


@dataclass
class RunConfig:
    command: str
    graph: str | None
    k_values: list[int]
    max_nodes: int = mis.DEFAULT_MAX_NODES
    max_seconds: float = mis.DEFAULT_MAX_SECONDS
    seed: int = 0
    iterations: int = 200
    fmt: str = "json"
    out: Path | None = None
    threads: int = 1
    inject_fault: bool = False


def parse_k_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise CliError(f"malformed k range {text!r} (expected N or A..B)") from None
    if lo < 0 or hi < lo:
        raise CliError(f"empty or negative k range {text!r}")
    return list(range(lo, hi + 1))


_SHORT_NAME = re.compile(r"^([ckpe])(\d+)$")
_FAMILY_OF_LETTER = {"c": "cycle", "k": "complete", "p": "path", "e": "empty"}


def resolve_graph(spec: str) -> Graph:
    """A named family (c5, complete:3, petersen, ...) or a file to parse."""
    p = Path(spec)
    if p.is_file():
        return parse_graph(p.read_text())
    name = spec.lower()
    if name == "petersen":
        return construct_named("petersen")
    if ":" in name:
        family, _, size_s = name.partition(":")
        try:
            return construct_named(family, int(size_s))
        except ValueError as exc:
            raise CliError(str(exc)) from None
    m = _SHORT_NAME.match(name)
    if m:
        try:
            return construct_named(_FAMILY_OF_LETTER[m.group(1)], int(m.group(2)))
        except ValueError as exc:
            raise CliError(str(exc)) from None
    raise CliError(f"unknown graph {spec!r} (not a family name or readable file)")


def _is_c5(g: Graph) -> bool:
    return g == construct_named("cycle", 5)


# ---------------------------------------------------------------------------
# output plumbing


def _existing_keys(out: Path | None) -> set[tuple]:
    keys: set[tuple] = set()
    if out is None or not out.exists():
        return keys
    for line in out.read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            continue
        keys.add((obj.get("command"), obj.get("graph"), obj.get("k"), obj.get("seed")))
    return keys


def _emit(record: dict, out: Path | None) -> None:
    line = json.dumps(record, sort_keys=True)
    if out is None:
        print(line)
    else:
        with out.open("a") as fh:
            fh.write(line + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_alpha(cfg: RunConfig) -> int:
    g = resolve_graph(cfg.graph)
    done = _existing_keys(cfg.out)
    degraded = False
    for k in cfg.k_values:
        if (cfg.command, cfg.graph, k, cfg.seed) in done:
            continue
        q = build_quotient(g, k)
        report = mis.solve_exact(q, max_nodes=cfg.max_nodes, max_seconds=cfg.max_seconds)
        record = {"command": cfg.command, "graph": cfg.graph, "k": k,
                  "seed": cfg.seed, **report.to_json_dict()}
        _emit(record, cfg.out)
        if not report.optimal:
            degraded = True
    return EXIT_BUDGET if degraded else EXIT_OK


def cmd_bounds(cfg: RunConfig) -> int:
    g = resolve_graph(cfg.graph)
    alpha_base = alpha_exact(g)
    theta_base = clique_cover_number(g)
    is5 = _is_c5(g)
    degraded = False
    reports = []
    for k in cfg.k_values:
        solve_report = None
        try:
            q = build_quotient(g, k)
        except CapExceededError:
            q = None
        if q is not None:
            solve_report = mis.solve_exact(q, max_nodes=cfg.max_nodes,
                                           max_seconds=cfg.max_seconds)
            if not solve_report.optimal:
                degraded = True
        reports.append(make_report(alpha_base, theta_base, k, is_c5=is5,
                                   solve_report=solve_report))

    if cfg.fmt == "csv":
        header = "k,lower,alpha,optimal,upper_c5,upper_theta"
        rows = [",".join(r.to_csv_row().split(",")[:6]) for r in reports]
        if cfg.out is None:
            print(header)
            for row in rows:
                print(row)
        else:
            new_file = not cfg.out.exists()
            with cfg.out.open("a") as fh:
                if new_file:
                    fh.write(header + "\n")
                for row in rows:
                    fh.write(row + "\n")
    else:
        done = _existing_keys(cfg.out)
        for report in reports:
            if (cfg.command, cfg.graph, report.k, cfg.seed) in done:
                continue
            record = {"command": cfg.command, "graph": cfg.graph,
                      "seed": cfg.seed, **report.to_json_dict()}
            _emit(record, cfg.out)
    return EXIT_BUDGET if degraded else EXIT_OK


def cmd_verify_c5(cfg: RunConfig) -> int:
    for k in cfg.k_values:
        if k > VERIFY_MAX_K:
            raise CliError(f"k={k} exceeds the exhaustive audit cap of {VERIFY_MAX_K}")
    done = _existing_keys(cfg.out)
    all_ok = True
    first_k = cfg.k_values[0]
    for k in cfg.k_values:
        if (cfg.command, "c5", k, cfg.seed) in done:
            continue
        checks = []

        counting = c5lab.counting_identity_counterexamples(k)
        checks.append(c5lab.audit_record(k, "counting-identity", not counting, counting))

        bad_sizes = []
        want = comb(k + 2, 2)
        total = 0
        for j in range(1, 6):
            size = len(c5lab.counting_family_members(j, k))
            total += size
            if size != want:
                bad_sizes.append({"family": j, "size": size, "expected": want})
        if total != 5 * want:
            bad_sizes.append({"total": total, "expected": 5 * want})
        checks.append(c5lab.audit_record(k, "family-cardinality", not bad_sizes, bad_sizes))

        flip = (0, 1) if cfg.inject_fault and k == first_k else None
        midpoint = c5lab.midpoint_counterexamples(k, flip_pair=flip)
        checks.append(c5lab.audit_record(k, "midpoint", not midpoint, midpoint))

        q = build_quotient(c5lab.C5, k)
        solve_report = mis.solve_exact(q, max_nodes=cfg.max_nodes,
                                       max_seconds=cfg.max_seconds)
        members = [q.configuration(r) for r in solve_report.certificate]
        collisions = c5lab.disjointness_collisions(members)
        checks.append(c5lab.audit_record(k, "disjointness", not collisions, collisions))

        audit = c5lab.c5_bound_audit(k, alpha=solve_report.alpha if solve_report.optimal else None)
        bound_ok = audit.bound == audit.recomputed and audit.alpha_ok is not False
        detail = [] if bound_ok else [{"bound": audit.bound, "alpha": audit.alpha}]
        checks.append(c5lab.audit_record(k, "closed-form-bound", bound_ok, detail))

        ok = all(c["ok"] for c in checks)
        all_ok = all_ok and ok
        record = {"command": cfg.command, "graph": "c5", "k": k, "seed": cfg.seed,
                  "ok": ok, "checks": checks}
        _emit(record, cfg.out)
    return EXIT_OK if all_ok else EXIT_AUDIT


def _supported_baseline(g: Graph, q) -> list[int]:
    """Ranks of the configurations supported on one maximum independent set
    of the base graph: the standard lower-bound witness in G[k]."""
    base = mis.solve_exact(g)
    support = list(base.certificate)
    ranks = []
    for weights in enumerate_configurations(len(support), q.k, cap=None):
        cfg = [0] * g.n
        for v, w in zip(support, weights):
            cfg[v] = w
        ranks.append(rank(tuple(cfg)))
    return sorted(ranks)


def cmd_search(cfg: RunConfig) -> int:
    if cfg.iterations < 1:
        raise CliError("iterations must be at least 1")
    g = resolve_graph(cfg.graph)
    is5 = _is_c5(g)
    done = _existing_keys(cfg.out)
    for k in cfg.k_values:
        if (cfg.command, cfg.graph, k, cfg.seed) in done:
            continue
        q = build_quotient(g, k)
        baseline = _supported_baseline(g, q)
        cert = mis.heuristic_search(q, seed=cfg.seed, iterations=cfg.iterations,
                                    initial=baseline)
        notable = bool(is5 and len(cert) > k + 1)
        record = {
            "command": cfg.command, "graph": cfg.graph, "k": k, "seed": cfg.seed,
            "iterations": cfg.iterations, "size": len(cert),
            "baseline_size": len(baseline), "notable": notable,
            "certificate": list(cert),
        }
        if notable:
            print(f"NOTABLE: independent set of size {len(cert)} > {k + 1} "
                  f"in C5[{k}]", file=sys.stderr)
        _emit(record, cfg.out)
    return EXIT_OK


def _oracle_instances(cfg: RunConfig):
    if cfg.graph is not None:
        g = resolve_graph(cfg.graph)
        for k in cfg.k_values:
            yield cfg.graph, g, k
        return
    ks = cfg.k_values or [1, 2, 3]
    for k in ks:
        for n in range(1, 5):
            for idx, g in enumerate(labeled_graphs(n)):
                yield f"n{n}#{idx}", g, k
        yield "c5", construct_named("cycle", 5), k


def cmd_oracle_check(cfg: RunConfig) -> int:
    mismatches = []
    per_k: dict[int, int] = {}
    for label, g, k in _oracle_instances(cfg):
        fast = build_quotient(g, k)
        reference = strong_power_quotient_oracle(g, k)
        per_k[k] = per_k.get(k, 0) + 1
        if fast.adj != reference.adj:
            mismatches.append({"graph": label, "k": k})
    graph_label = cfg.graph if cfg.graph is not None else "default-suite"
    done = _existing_keys(cfg.out)
    for k in sorted(per_k):
        if (cfg.command, graph_label, k, cfg.seed) in done:
            continue
        record = {
            "command": cfg.command, "graph": graph_label, "k": k, "seed": cfg.seed,
            "instances": per_k[k],
            "mismatches": [m for m in mismatches if m["k"] == k],
            "ok": not any(m["k"] == k for m in mismatches),
        }
        _emit(record, cfg.out)
    return EXIT_OK if not mismatches else EXIT_AUDIT


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(sub: argparse.ArgumentParser, *, graph: str | None = "required",
                k_required: bool = True) -> None:
    if graph is not None:
        sub.add_argument("--graph", required=(graph == "required"),
                         default=(None if graph == "required" else graph),
                         help="graph family (c5, complete:3, petersen, ...) or file path")
    sub.add_argument("--k", dest="k_range", required=k_required,
                     help="weight k or inclusive range a..b")
    sub.add_argument("--max-nodes", type=int, default=mis.DEFAULT_MAX_NODES)
    sub.add_argument("--max-seconds", type=float, default=mis.DEFAULT_MAX_SECONDS)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--iterations", type=int, default=200)
    sub.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")
    sub.add_argument("--out", type=Path, default=None,
                     help="append results to this JSON-lines (or CSV) file")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker cap; the current implementation is sequential")


def build_parser() -> _Parser:
    parser = _Parser(prog="sympower",
                     description="Symmetric powers of graphs: exact independence "
                                 "numbers, bounds, audits, and searches.")
    subs = parser.add_subparsers(dest="command", required=True)

    alpha = subs.add_parser("alpha", help="solve alpha(G[k]) exactly")
    _add_common(alpha)

    bounds = subs.add_parser("bounds", help="closed-form bounds table, optionally with exact alpha")
    _add_common(bounds)

    verify = subs.add_parser("verify-c5", help="audit the five-cycle bound machinery")
    _add_common(verify, graph=None)
    verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    search = subs.add_parser("search", help="heuristic search for large independent sets")
    _add_common(search, graph="c5")

    oracle = subs.add_parser("oracle-check",
                             help="compare the pairwise construction with the strong-power quotient")
    _add_common(oracle, graph="optional", k_required=False)

    return parser


def _to_config(args: argparse.Namespace) -> RunConfig:
    k_values = parse_k_range(args.k_range) if args.k_range else []
    cfg = RunConfig(
        command=args.command,
        graph=getattr(args, "graph", None),
        k_values=k_values,
        max_nodes=args.max_nodes,
        max_seconds=args.max_seconds,
        seed=args.seed,
        iterations=args.iterations,
        fmt=args.fmt,
        out=args.out,
        threads=args.threads,
        inject_fault=getattr(args, "inject_fault", False),
    )
    if cfg.max_nodes < 1 or cfg.max_seconds <= 0:
        raise CliError("budget must be positive")
    if cfg.threads < 1:
        raise CliError("threads must be at least 1")
    if cfg.fmt == "csv" and cfg.command != "bounds":
        raise CliError("csv output is only defined for the bounds command")
    return cfg


_COMMANDS = {
    "alpha": cmd_alpha,
    "bounds": cmd_bounds,
    "verify-c5": cmd_verify_c5,
    "search": cmd_search,
    "oracle-check": cmd_oracle_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _to_config(args)
        return _COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, CapExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    raise SystemExit(main())
