"""Explicit symmetric powers G[k] and the strong-power quotient oracle.

``build_quotient`` runs the transport oracle over every unordered pair of
configurations. ``strong_power_quotient_oracle`` builds the k-th strong
power over all n^k tuples and collapses coordinate permutations; it is the
single-threaded trusted reference the fast construction is validated
against, and both index vertices by configuration rank so agreement is
plain bit equality.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

from .configurations import (
    configuration_count,
    enumerate_configurations,
    format_configuration,
    integer_transport,
    rank,
    unrank,
)
from .errors import CapExceededError
from .graphs import Graph, to_edge_list

DEFAULT_VERTEX_CAP = 100_000
DEFAULT_TUPLE_CAP = 1_000_000


@dataclass(frozen=True)
class QuotientGraph:
    """G[k] with vertices indexed by configuration rank."""

    base: Graph
    k: int
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    def configuration(self, r: int):
        return unrank(self.base.n, self.k, r)

    def rank_of(self, config) -> int:
        cfg = tuple(config)
        if len(cfg) != self.base.n or sum(cfg) != self.k:
            raise ValueError("configuration does not belong to this quotient")
        return rank(cfg)


def build_quotient(g: Graph, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> QuotientGraph:
    """Construct G[k] by deciding a transport for every unordered pair."""
    count = configuration_count(g.n, k)
    if count > vertex_cap:
        raise CapExceededError(
            f"G[k] would have {count} vertices, beyond the cap of {vertex_cap}")
    configs = enumerate_configurations(g.n, k, cap=vertex_cap)
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]

    supports = []
    reach = []
    for cfg in configs:
        s = 0
        r = 0
        for v, w in enumerate(cfg):
            if w:
                s |= 1 << v
                r |= closed[v]
        supports.append(s)
        reach.append(r)

    adj = [0] * count
    for i in range(count):
        fi = configs[i]
        si = supports[i]
        ri = reach[i]
        for j in range(i + 1, count):
            # a transport needs every pebble within one step of its target
            if supports[j] & ~ri or si & ~reach[j]:
                continue
            if integer_transport(fi, configs[j], closed) is not None:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return QuotientGraph(g, k, tuple(adj))


def strong_power_quotient_oracle(g: Graph, k: int,
                                 tuple_cap: int = DEFAULT_TUPLE_CAP) -> QuotientGraph:
    """G[k] realized as the strong k-th power modulo coordinate permutations.

    Enumerates all n^k tuples, joins distinct tuples whose coordinates are
    pairwise equal-or-adjacent, and joins two orbits iff some representative
    pair is joined in the strong power.
    """
    total = g.n**k
    if total > tuple_cap:
        raise CapExceededError(f"{total} tuples exceed the cap of {tuple_cap}")
    tuples = list(itertools.product(range(g.n), repeat=k))
    orbit = []
    for tp in tuples:
        counts = [0] * g.n
        for v in tp:
            counts[v] += 1
        orbit.append(rank(tuple(counts)))

    adj = [0] * configuration_count(g.n, k)
    for a in range(len(tuples)):
        ta = tuples[a]
        ra = orbit[a]
        for b in range(a + 1, len(tuples)):
            rb = orbit[b]
            if ra == rb:
                continue
            tb = tuples[b]
            if all(x == y or g.adj[x] >> y & 1 for x, y in zip(ta, tb)):
                adj[ra] |= 1 << rb
                adj[rb] |= 1 << ra
    return QuotientGraph(g, k, tuple(adj))


def export_edge_list(q: QuotientGraph, path) -> tuple[Path, Path]:
    """Write G[k] in edge-list format plus a JSON sidecar mapping
    rank -> configuration string. Returns both paths."""
    main_path = Path(path)
    main_path.write_text(to_edge_list(q))
    labels = {
        str(r): format_configuration(q.configuration(r)) for r in range(q.n)
    }
    sidecar = main_path.with_name(main_path.name + ".json")
    sidecar.write_text(json.dumps(labels, indent=2, sort_keys=True) + "\n")
    return main_path, sidecar
