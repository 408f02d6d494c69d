"""Verification toolkit for the tightened five-cycle independence bound.

Everything here is specific to the 5-cycle with vertices 0..4, where edge j
joins vertices j and (j+1) % 5. Edge configurations distribute k pebbles
over the five edges. An edge configuration psi is adjacent to a vertex
configuration f when every pebble of f can hop onto an incident edge so the
edge totals equal psi (each pebble must land on an edge; none stay put).

The checks mechanically audit the counting argument behind the bound
floor(5(k+2)(k+1) / (2(k+5))):

* five counting families of edge configurations, family j vanishing on the
  non-adjacent edge pair flanking edge j-1 (0-indexed), each of size
  C(k+2, 2);
* each vertex configuration is adjacent to exactly f(v) + 1 members of the
  family whose free vertex is v, for a weighted total of k + 5;
* two distinct vertex configurations are adjacent in the symmetric power
  exactly when some edge configuration is adjacent to both (midpoint
  characterization), so the adjacency sets of an independent set are
  pairwise disjoint.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from . import mis
from .bounds import c5_upper_bound
from .configurations import (
    Config,
    adjacent,
    configuration_count,
    enumerate_configurations,
    format_configuration,
    integer_transport,
)
from .graphs import construct_named
from .quotient import build_quotient

logger = logging.getLogger(__name__)

C5 = construct_named("cycle", 5)

EDGE_ENDPOINTS = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))

# vertex v lies on edges (v-1) % 5 and v
_VERTEX_EDGE_MASKS = tuple((1 << (v - 1) % 5) | (1 << v) for v in range(5))

# family j (1-based) zeroes this non-adjacent pair of edge indices
_FAMILY_ZERO_EDGES = tuple(((j - 2) % 5, j % 5) for j in range(1, 6))

# the free vertex of family j: its pebbles may split between two edges
_FAMILY_FREE_VERTEX = tuple((j + 2) % 5 for j in range(1, 6))


def _check5(config, k: int | None = None) -> Config:
    cfg = tuple(config)
    if len(cfg) != 5 or any(w < 0 for w in cfg):
        raise ValueError(f"expected 5 nonnegative weights, got {cfg}")
    if k is not None and sum(cfg) != k:
        raise ValueError(f"expected total weight {k}, got {sum(cfg)}")
    return cfg


def enumerate_edge_configs(k: int, cap: int | None = None) -> list[Config]:
    """All C(k+4, 4) weight-k edge configurations in canonical order."""
    if cap is None:
        return enumerate_configurations(5, k)
    return enumerate_configurations(5, k, cap=cap)


def counting_family_members(j: int, k: int) -> list[Config]:
    """Edge configurations of family j: zero weight on the flanked edge pair."""
    if not 1 <= j <= 5:
        raise ValueError("family index must be in 1..5")
    z1, z2 = _FAMILY_ZERO_EDGES[j - 1]
    free = [e for e in range(5) if e not in (z1, z2)]
    out = []
    for weights in enumerate_configurations(3, k, cap=None):
        vec = [0] * 5
        for pos, w in zip(free, weights):
            vec[pos] = w
        out.append(tuple(vec))
    return out


def ve_adjacent(config, edge_config) -> bool:
    """True when every pebble of ``config`` can move to an incident edge to
    produce ``edge_config``."""
    f = _check5(config)
    psi = _check5(edge_config)
    if sum(f) != sum(psi):
        raise ValueError("configurations have different total weight")
    return integer_transport(f, psi, _VERTEX_EDGE_MASKS) is not None


def family_adjacent_counts(config) -> tuple[int, ...]:
    """Per-family count of members adjacent to ``config`` (families 1..5)."""
    f = _check5(config)
    k = sum(f)
    return tuple(
        sum(1 for psi in counting_family_members(j, k) if ve_adjacent(f, psi))
        for j in range(1, 6)
    )


def family_free_vertex(j: int) -> int:
    """The vertex whose pebbles may split in family j; its count is f(v)+1."""
    if not 1 <= j <= 5:
        raise ValueError("family index must be in 1..5")
    return _FAMILY_FREE_VERTEX[j - 1]


def weighted_adjacent_count(config) -> int:
    """Adjacent edge configurations counted with family multiplicity.

    Equals k + 5 for every weight-k configuration: family j contributes
    exactly f(free_vertex(j)) + 1.
    """
    return sum(family_adjacent_counts(config))


# ---------------------------------------------------------------------------
# audits


def audit_record(k: int, check: str, ok: bool, counterexamples: list) -> dict:
    return {"k": k, "check": check, "ok": ok, "counterexamples": counterexamples}


def counting_identity_counterexamples(k: int) -> list[dict]:
    """Configurations whose weighted adjacent count differs from k + 5."""
    out = []
    for f in enumerate_configurations(5, k):
        counts = family_adjacent_counts(f)
        total = sum(counts)
        expected_each = tuple(f[family_free_vertex(j)] + 1 for j in range(1, 6))
        if total != k + 5 or counts != expected_each:
            out.append({
                "configuration": format_configuration(f),
                "counts": list(counts),
                "expected": list(expected_each),
                "total": total,
            })
    return out


def midpoint_counterexamples(k: int, *,
                             flip_pair: tuple[int, int] | None = None) -> list[dict]:
    """Pairs violating: adjacent in C5[k] iff some edge configuration is
    adjacent to both. ``flip_pair`` negates one adjacency (fault-injection
    hook for detector sanity checks)."""
    configs = enumerate_configurations(5, k)
    edge_cfgs = enumerate_configurations(5, k)
    masks = []
    for f in configs:
        m = 0
        for idx, psi in enumerate(edge_cfgs):
            if ve_adjacent(f, psi):
                m |= 1 << idx
        masks.append(m)
    out = []
    for i in range(len(configs)):
        for j in range(i + 1, len(configs)):
            joined = adjacent(C5, configs[i], configs[j])
            if flip_pair is not None and (i, j) == tuple(flip_pair):
                joined = not joined
            shares = (masks[i] & masks[j]) != 0
            if joined != shares:
                out.append({
                    "f": format_configuration(configs[i]),
                    "g": format_configuration(configs[j]),
                    "adjacent": joined,
                    "common_midpoint": shares,
                })
    return out


def midpoint_characterization_audit(k: int, *,
                                    flip_pair: tuple[int, int] | None = None) -> bool:
    """Exhaustively audit the midpoint characterization over distinct pairs."""
    ces = midpoint_counterexamples(k, flip_pair=flip_pair)
    for ce in ces:
        logger.warning("midpoint counterexample at k=%d: %s", k, ce)
    return not ces


def disjointness_collisions(members) -> list[dict]:
    """Edge configurations adjacent to two distinct members of an independent set.

    Raises when the members do not form an independent set in C5[k].
    """
    cfgs = [_check5(m) for m in members]
    if not cfgs:
        return []
    k = sum(cfgs[0])
    for cfg in cfgs[1:]:
        _check5(cfg, k)
    for i in range(len(cfgs)):
        for j in range(i + 1, len(cfgs)):
            if cfgs[i] == cfgs[j]:
                raise ValueError("duplicate configuration in the set")
            if adjacent(C5, cfgs[i], cfgs[j]):
                raise ValueError("the supplied set is not independent")
    owner: dict[int, int] = {}
    out = []
    for mi, f in enumerate(cfgs):
        for pi, psi in enumerate(enumerate_configurations(5, k)):
            if ve_adjacent(f, psi):
                prev = owner.get(pi)
                if prev is not None and prev != mi:
                    out.append({
                        "edge_configuration": format_configuration(psi),
                        "members": [
                            format_configuration(cfgs[prev]),
                            format_configuration(f),
                        ],
                    })
                else:
                    owner[pi] = mi
    return out


def disjointness_audit(members) -> bool:
    collisions = disjointness_collisions(members)
    for c in collisions:
        logger.warning("adjacency sets collide: %s", c)
    return not collisions


@dataclass(frozen=True)
class BoundAudit:
    k: int
    bound: int
    recomputed: int
    alpha: int | None
    alpha_ok: bool | None


def c5_bound_audit(k: int, alpha: int | None = None, *,
                   solve_missing: bool = True,
                   max_nodes: int = mis.DEFAULT_MAX_NODES,
                   max_seconds: float = mis.DEFAULT_MAX_SECONDS) -> BoundAudit:
    """Recompute the five-cycle bound from the weighted count and compare it
    with the closed form; optionally check an exact alpha against it.

    Without an ``alpha`` argument the exact value is solved when C5[k] is
    small enough (k <= 9); otherwise ``alpha_ok`` is None.
    """
    recomputed = 5 * comb(k + 2, 2) // (k + 5)
    bound = c5_upper_bound(k)
    if bound != recomputed:  # guards the two formulas against divergent edits
        raise ArithmeticError(
            f"bound mismatch at k={k}: closed form {bound}, recomputed {recomputed}")
    if alpha is None and solve_missing and configuration_count(5, k) <= 1001:
        report = mis.solve_exact(build_quotient(C5, k),
                                 max_nodes=max_nodes, max_seconds=max_seconds)
        if report.optimal:
            alpha = report.alpha
    alpha_ok = None if alpha is None else alpha <= bound
    return BoundAudit(k, bound, recomputed, alpha, alpha_ok)
