"""Closed-form independence bounds for symmetric powers, capacity trend
estimation, and a runtime certifier for the chunk decomposition used in the
polynomial-growth argument.

All binomials use exact integer arithmetic (Python ints are unbounded), and
all interval membership tests cross-multiply instead of dividing, so no
floating point enters any bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb, log
from typing import Callable, Iterable, NamedTuple

from . import mis
from .configurations import Config, adjacent, configuration_count
from .errors import CapExceededError
from .graphs import Graph, alpha_exact, closed_neighborhood, induced_subgraph, mask_members
from .quotient import DEFAULT_VERTEX_CAP, build_quotient

logger = logging.getLogger(__name__)

CSV_HEADER = "k,lower,alpha,optimal,upper_c5,upper_theta,ratio"


def lower_bound(alpha_base: int, k: int) -> int:
    """Configurations supported on a fixed maximum independent set: C(k+a-1, a-1)."""
    if alpha_base < 1:
        raise ValueError("alpha must be at least 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return comb(k + alpha_base - 1, alpha_base - 1)


def upper_bound_theta(theta_base: int, k: int) -> int:
    """Clique-cover bound: per-clique pebble totals classify configurations
    into C(k+t-1, t-1) mutually reachable classes."""
    if theta_base < 1:
        raise ValueError("theta must be at least 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return comb(k + theta_base - 1, theta_base - 1)


def c5_upper_bound(k: int) -> int:
    """Tightened five-cycle bound floor(5(k+2)(k+1) / (2(k+5)))."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return 5 * (k + 2) * (k + 1) // (2 * (k + 5))


def _opt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass(frozen=True)
class BoundsReport:
    k: int
    alpha_base: int
    theta_base: int
    lower: int
    upper_theta: int
    upper_c5: int | None = None
    alpha: int | None = None
    optimal: bool | None = None

    def __post_init__(self) -> None:
        if self.lower > self.upper_theta:
            raise ValueError("lower bound exceeds the clique-cover bound")

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "alpha_base": self.alpha_base,
            "theta_base": self.theta_base,
            "lower": self.lower,
            "upper_theta": self.upper_theta,
            "upper_c5": self.upper_c5,
            "alpha": self.alpha,
            "optimal": self.optimal,
        }

    def to_csv_row(self) -> str:
        return ",".join([
            str(self.k), str(self.lower), _opt(self.alpha), _opt(self.optimal),
            _opt(self.upper_c5), str(self.upper_theta), "",
        ])


def make_report(alpha_base: int, theta_base: int, k: int, *,
                is_c5: bool = False,
                solve_report: mis.SolveReport | None = None) -> BoundsReport:
    return BoundsReport(
        k=k,
        alpha_base=alpha_base,
        theta_base=theta_base,
        lower=lower_bound(alpha_base, k),
        upper_theta=upper_bound_theta(theta_base, k),
        upper_c5=c5_upper_bound(k) if is_c5 else None,
        alpha=solve_report.alpha if solve_report else None,
        optimal=solve_report.optimal if solve_report else None,
    )


@dataclass(frozen=True)
class CapacitySample:
    k: int
    alpha: int
    ratio: float


@dataclass(frozen=True)
class CapacityEstimate:
    target: int
    samples: tuple[CapacitySample, ...]

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "samples": [
                {"k": s.k, "alpha": s.alpha, "ratio": s.ratio} for s in self.samples
            ],
        }

    def to_csv_rows(self) -> list[str]:
        return [
            ",".join([str(s.k), "", str(s.alpha), "true", "", "", repr(s.ratio)])
            for s in self.samples
        ]


def estimate_capacity(g: Graph, k_max: int, *,
                      max_nodes: int = mis.DEFAULT_MAX_NODES,
                      max_seconds: float = mis.DEFAULT_MAX_SECONDS,
                      vertex_cap: int = DEFAULT_VERTEX_CAP,
                      solve: Callable | None = None) -> CapacityEstimate:
    """Finite-k trend of log(alpha(G[k])) / log(k) for k = 2..k_max.

    Only optimal solves contribute samples; k values that run out of budget
    or exceed the vertex cap are skipped with a warning. ``solve`` can
    substitute a caching wrapper around the exact solver.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    solver = solve or (lambda q: mis.solve_exact(q, max_nodes=max_nodes,
                                                 max_seconds=max_seconds))
    target = alpha_exact(g) - 1
    samples = []
    for k in range(2, k_max + 1):
        try:
            q = build_quotient(g, k, vertex_cap=vertex_cap)
        except CapExceededError:
            logger.warning("skipping k=%d: vertex cap exceeded", k)
            continue
        report = solver(q)
        if not report.optimal:
            logger.warning("skipping k=%d: solver budget exhausted", k)
            continue
        samples.append(CapacitySample(k, report.alpha, log(report.alpha) / log(k)))
    return CapacityEstimate(target, tuple(samples))


# ---------------------------------------------------------------------------
# chunk decomposition


class ChunkKey(NamedTuple):
    """Cell key of the chunk partition of an independent set in G[k]."""

    pivot: int
    neighborhood_weight: int
    intervals: tuple[int, ...]


def _require_independent(g: Graph, k: int, members: list[Config]) -> None:
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if members[i] == members[j]:
                raise ValueError("duplicate configuration in the set")
            if adjacent(g, members[i], members[j]):
                raise ValueError("the supplied set is not independent")


def chunk_partition(g: Graph, k: int,
                    members: Iterable[Config]) -> dict[ChunkKey, list[Config]]:
    """Partition an independent set of G[k] into chunks.

    Each configuration goes to the key (pivot, m, b) where pivot is the
    smallest vertex id carrying the maximum weight, m is the total weight on
    the closed neighborhood of the pivot, and b_i is the unique index with
    b_i * k <= 2 n^2 f(v_i) < (b_i + 1) * k (all zeros when k = 0).
    """
    cfgs = [tuple(m) for m in members]
    for cfg in cfgs:
        if len(cfg) != g.n or sum(cfg) != k or any(w < 0 for w in cfg):
            raise ValueError(f"not a weight-{k} configuration on {g.n} vertices: {cfg}")
    _require_independent(g, k, cfgs)

    closed = [closed_neighborhood(g, v) for v in range(g.n)]
    scale = 2 * g.n * g.n
    out: dict[ChunkKey, list[Config]] = {}
    for cfg in sorted(cfgs, reverse=True):
        pivot = cfg.index(max(cfg))
        m = sum(w for v, w in enumerate(cfg) if closed[pivot] >> v & 1)
        if k == 0:
            intervals = (0,) * g.n
        else:
            intervals = tuple(scale * w // k for w in cfg)
        out.setdefault(ChunkKey(pivot, m, intervals), []).append(cfg)
    return out


def check_chunk_independence(g: Graph, k: int, key: ChunkKey,
                             chunk: Iterable[Config]) -> bool:
    """Project a chunk onto the graph minus the pivot's closed neighborhood
    and check the projections are pairwise distinct and non-adjacent there."""
    closed = closed_neighborhood(g, key.pivot)
    kept = [v for v in range(g.n) if not closed >> v & 1]
    projections = []
    for cfg in chunk:
        m = sum(w for v, w in enumerate(cfg) if closed >> v & 1)
        if m != key.neighborhood_weight:
            raise ValueError(
                f"malformed chunk: member {cfg} has neighborhood weight {m}, "
                f"expected {key.neighborhood_weight}")
        projections.append(tuple(cfg[v] for v in kept))
    if len(projections) <= 1:
        return True
    if not kept:
        # nothing outside the neighborhood: projections can only coincide
        return False
    sub = induced_subgraph(g, kept)
    for i in range(len(projections)):
        for j in range(i + 1, len(projections)):
            if projections[i] == projections[j]:
                return False
            if adjacent(sub, projections[i], projections[j]):
                return False
    return True
