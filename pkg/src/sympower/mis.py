"""Exact and heuristic maximum-independent-set search over bitset graphs.

Works with any object exposing ``n`` (vertex count) and ``adj`` (per-vertex
neighbour bitmasks), so base graphs and symmetric-power graphs solve alike.

The exact solver bounds each residual with a greedy clique partition built
in ascending id order (an independent set meets every clique at most once)
and branches only on the overflow vertices, those landing in partition
classes beyond the current slack: any improving independent set must use
one of them. All orders are fixed, so node counts are reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_SECONDS = 600.0


@dataclass(frozen=True)
class SolveReport:
    alpha: int
    optimal: bool
    nodes_explored: int
    elapsed: float
    certificate: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "optimal": self.optimal,
            "nodes": self.nodes_explored,
            "elapsed_ms": int(self.elapsed * 1000),
            "certificate": list(self.certificate),
        }


def _check_loopless(adj) -> None:
    for v, mask in enumerate(adj):
        if mask >> v & 1:
            raise ValueError(f"self-loop at vertex {v}")


def _greedy_from_order(adj, order) -> int:
    chosen = 0
    blocked = 0
    for v in order:
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= adj[v] | (1 << v)
    return chosen


def solve_exact(g, max_nodes: int = DEFAULT_MAX_NODES,
                max_seconds: float = DEFAULT_MAX_SECONDS) -> SolveReport:
    """Branch-and-bound maximum independent set.

    Returns an optimal certificate unless the node or time budget runs out,
    in which case ``optimal`` is False and the best certificate found so far
    is reported.
    """
    if max_nodes < 1 or max_seconds <= 0:
        raise ValueError("budget must be positive")
    n = g.n
    adj = g.adj
    _check_loopless(adj)
    start = time.monotonic()
    deadline = start + max_seconds
    closed = [adj[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1

    # deterministic incumbents: greedy in id order and in ascending static degree
    best_mask = _greedy_from_order(adj, range(n))
    by_degree = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    alt = _greedy_from_order(adj, by_degree)
    if alt.bit_count() > best_mask.bit_count():
        best_mask = alt
    best = best_mask.bit_count()

    nodes = 0
    aborted = False

    def expand(pool: int, size: int, members: int) -> None:
        nonlocal nodes, aborted, best, best_mask
        nodes += 1
        if nodes >= max_nodes or time.monotonic() > deadline:
            aborted = True
            return
        if pool == 0:
            if size > best:
                best = size
                best_mask = members
            return
        # greedy clique partition in ascending id order
        classes: list[int] = []
        labels: list[tuple[int, int]] = []
        m = pool
        while m:
            lsb = m & -m
            m ^= lsb
            av = adj[lsb.bit_length() - 1]
            for ci in range(len(classes)):
                if classes[ci] & ~av == 0:
                    classes[ci] |= lsb
                    labels.append((ci, lsb.bit_length() - 1))
                    break
            else:
                labels.append((len(classes), lsb.bit_length() - 1))
                classes.append(lsb)
        count = len(classes)
        if count == pool.bit_count():
            # all classes are singletons, so the residual is edgeless
            if size + count > best:
                best = size + count
                best_mask = members | pool
            return
        if count <= best - size:
            return
        # any improving set uses a vertex from a class beyond the slack
        slack = best - size
        branch = sorted((lv for lv in labels if lv[0] >= slack), reverse=True)
        cur = pool
        for ci, v in branch:
            if ci < best - size:
                continue  # incumbent improved, vertex no longer overflows
            expand(cur & ~closed[v], size + 1, members | (1 << v))
            if aborted:
                return
            cur &= ~(1 << v)

    expand(full, 0, 0)
    elapsed = time.monotonic() - start
    certificate = tuple(_mask_members(best_mask))
    return SolveReport(best, not aborted, nodes, elapsed, certificate)


def _mask_members(mask: int) -> list[int]:
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return out


def verify_certificate(g, members) -> bool:
    """True iff the members are in range, duplicate-free and pairwise non-adjacent."""
    seen = 0
    for v in members:
        if not 0 <= v < g.n:
            return False
        bit = 1 << v
        if seen & bit or g.adj[v] & seen:
            return False
        seen |= bit
    return True


def random_maximal_set(g, seed: int = 0) -> list[int]:
    """Greedy independent set over a seeded random vertex order (always maximal)."""
    rng = random.Random(seed)
    order = list(range(g.n))
    rng.shuffle(order)
    return _mask_members(_greedy_from_order(g.adj, order))


def _local_search(adj, n: int, cur: int) -> int:
    """Maximalize, then apply first-improvement (1,2)-swaps until stable."""
    full = (1 << n) - 1
    while True:
        blocked = cur
        for v in _mask_members(cur):
            blocked |= adj[v]
        free = full & ~blocked
        while free:
            lsb = free & -free
            v = lsb.bit_length() - 1
            cur |= lsb
            blocked |= adj[v] | lsb
            free = full & ~blocked
        swapped = False
        for u in _mask_members(cur):
            rest = cur ^ (1 << u)
            rest_blocked = rest
            for v in _mask_members(rest):
                rest_blocked |= adj[v]
            cands = _mask_members(full & ~rest_blocked & ~(1 << u))
            found = None
            for a in range(len(cands)):
                for b in range(a + 1, len(cands)):
                    if not adj[cands[a]] >> cands[b] & 1:
                        found = (cands[a], cands[b])
                        break
                if found:
                    break
            if found:
                cur = rest | (1 << found[0]) | (1 << found[1])
                swapped = True
                break
        if not swapped:
            return cur


def heuristic_search(g, seed: int = 0, iterations: int = 100,
                     initial=None) -> tuple[int, ...]:
    """Seeded greedy + (1,2)-swap local search; deterministic in its arguments.

    ``initial`` optionally provides a starting certificate (e.g. the
    configurations supported on a fixed independent set of the base graph);
    it is validated, polished by local search, and kept as the incumbent.
    """
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    n = g.n
    adj = g.adj
    _check_loopless(adj)

    best_mask = 0
    if initial is not None:
        members = list(initial)
        if not verify_certificate(g, members):
            raise ValueError("initial certificate is not a valid independent set")
        best_mask = _local_search(adj, n, sum(1 << v for v in members))

    rng = random.Random(seed)
    ids = list(range(n))
    for _ in range(iterations):
        rng.shuffle(ids)
        cand = _local_search(adj, n, _greedy_from_order(adj, ids))
        if cand.bit_count() > best_mask.bit_count():
            best_mask = cand
    return tuple(_mask_members(best_mask))
