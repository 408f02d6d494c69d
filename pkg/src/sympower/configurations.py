"""Weight-k pebble configurations: enumeration, ranking, one-step transports.

A configuration is a plain tuple of per-vertex pebble counts summing to k.
The canonical order over all weak compositions of k into n parts is
lexicographically decreasing, so (k, 0, ..., 0) has rank 0 and
(0, ..., 0, k) comes last. Ranking runs in O(n + k) arithmetic through the
combinatorial number system for this order.

Two configurations of equal weight are adjacent in the symmetric power when
one arises from the other by moving some pebbles, each along a single edge.
That is an integral transportation problem: sources with capacities f(u),
arcs u -> v for u = v or {u, v} an edge, sinks with capacities t(v). It is
feasible iff the max flow equals k, and integral capacities guarantee an
integer transport plan.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .errors import CapExceededError

Config = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 10_000_000


def configuration_count(n: int, k: int) -> int:
    """Number of weight-k configurations on n vertices: C(k+n-1, n-1)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return comb(k + n - 1, n - 1)


def _compositions(n: int, k: int):
    if n == 1:
        yield (k,)
        return
    for w in range(k, -1, -1):
        for rest in _compositions(n - 1, k - w):
            yield (w,) + rest


def enumerate_configurations(n: int, k: int,
                             cap: int | None = DEFAULT_ENUMERATION_CAP) -> list[Config]:
    """All weight-k configurations on n vertices in canonical (decreasing lex) order."""
    total = configuration_count(n, k)
    if cap is not None and total > cap:
        raise CapExceededError(f"{total} configurations exceed the cap of {cap}")
    return list(_compositions(n, k))


def _validate(config, n: int | None = None, k: int | None = None) -> Config:
    cfg = tuple(config)
    if not cfg:
        raise ValueError("a configuration needs at least one vertex")
    if any(w < 0 for w in cfg):
        raise ValueError("pebble counts must be nonnegative")
    if n is not None and len(cfg) != n:
        raise ValueError(f"expected {n} weights, got {len(cfg)}")
    if k is not None and sum(cfg) != k:
        raise ValueError(f"expected total weight {k}, got {sum(cfg)}")
    return cfg


def rank(config) -> int:
    """Position of a configuration in the canonical order."""
    cfg = _validate(config)
    n = len(cfg)
    rem = sum(cfg)
    r = 0
    for i in range(n - 1):
        w = cfg[i]
        parts_left = n - i - 1
        if rem - w >= 1:
            # configurations sharing the prefix but with a larger weight here
            r += comb(rem - w - 1 + parts_left, parts_left)
        rem -= w
    return r


def unrank(n: int, k: int, r: int) -> Config:
    """Configuration at position r of the canonical order (inverse of rank)."""
    total = configuration_count(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range for n={n}, k={k}")
    out = []
    rem = k
    for i in range(n - 1):
        parts_left = n - i - 1
        w = rem
        while True:
            count = comb(rem - w + parts_left - 1, parts_left - 1)
            if r < count:
                break
            r -= count
            w -= 1
        out.append(w)
        rem -= w
    out.append(rem)
    return tuple(out)


def format_configuration(config) -> str:
    """Comma-separated weights, e.g. ``2,0,0,0,0``."""
    return ",".join(str(w) for w in config)


def parse_configuration(text: str) -> Config:
    try:
        cfg = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed configuration {text!r}") from None
    return _validate(cfg)


# ---------------------------------------------------------------------------
# transports


def _max_flow(cap: list[list[int]], s: int, t: int) -> int:
    """Max flow on a small dense residual matrix via BFS augmenting paths."""
    size = len(cap)
    total = 0
    while True:
        prev = [-1] * size
        prev[s] = s
        queue = [s]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if u == t:
                break
            row = cap[u]
            for v in range(size):
                if prev[v] < 0 and row[v] > 0:
                    prev[v] = u
                    queue.append(v)
        if prev[t] < 0:
            return total
        push = None
        v = t
        while v != s:
            u = prev[v]
            if push is None or cap[u][v] < push:
                push = cap[u][v]
            v = u
        v = t
        while v != s:
            u = prev[v]
            cap[u][v] -= push
            cap[v][u] += push
            v = u
        total += push


def integer_transport(supply: Sequence[int], demand: Sequence[int],
                      allowed: Sequence[int]) -> tuple[tuple[int, ...], ...] | None:
    """Nonnegative integer matrix with row sums ``supply``, column sums
    ``demand`` and support restricted to ``allowed``.

    ``allowed[i]`` is a bitmask of the demand slots reachable from supply
    slot i. Returns the matrix, or None when no feasible assignment exists.
    """
    k = sum(supply)
    if sum(demand) != k:
        raise ValueError("supply and demand totals differ")
    a, b = len(supply), len(demand)
    demand_mask = 0
    for j, d in enumerate(demand):
        if d:
            demand_mask |= 1 << j
    reach = 0
    for i, s in enumerate(supply):
        if s:
            if allowed[i] & demand_mask == 0:
                return None
            reach |= allowed[i]
    if demand_mask & ~reach:
        return None
    if k == 0:
        return tuple((0,) * b for _ in range(a))

    t_node = a + b + 1
    cap = [[0] * (a + b + 2) for _ in range(a + b + 2)]
    for i in range(a):
        cap[0][1 + i] = supply[i]
        m = allowed[i]
        row = cap[1 + i]
        while m:
            lsb = m & -m
            row[1 + a + (lsb.bit_length() - 1)] = k
            m ^= lsb
    for j in range(b):
        cap[1 + a + j][t_node] = demand[j]
    if _max_flow(cap, 0, t_node) != k:
        return None
    # reverse residual arcs accumulate exactly the flow shipped
    return tuple(tuple(cap[1 + a + j][1 + i] for j in range(b)) for i in range(a))


def find_transport(g, source, target) -> tuple[tuple[int, ...], ...] | None:
    """One-step transport plan between two configurations on g, or None.

    The plan T has row sums ``source`` and column sums ``target``; T[u][v]
    pebbles move from u to v, which requires u = v or an edge {u, v}.
    """
    src = _validate(source, n=g.n)
    tgt = _validate(target, n=g.n)
    if sum(src) != sum(tgt):
        raise ValueError("configurations have different total weight")
    if src == tgt:
        return tuple(
            tuple(src[u] if u == v else 0 for v in range(g.n)) for u in range(g.n)
        )
    allowed = [g.adj[v] | (1 << v) for v in range(g.n)]
    return integer_transport(src, tgt, allowed)


def adjacent(g, f, t) -> bool:
    """Symmetric-power adjacency: distinct configurations joined by a transport."""
    src = _validate(f, n=g.n)
    tgt = _validate(t, n=g.n)
    if sum(src) != sum(tgt):
        raise ValueError("configurations have different total weight")
    if src == tgt:
        return False
    return find_transport(g, src, tgt) is not None


def validate_transport(g, source, target, moves) -> bool:
    """Independent check of the transport-plan invariants."""
    n = g.n
    if len(moves) != n or any(len(row) != n for row in moves):
        return False
    for u in range(n):
        for v in range(n):
            x = moves[u][v]
            if not isinstance(x, int) or x < 0:
                return False
            if x > 0 and u != v and not g.adj[u] >> v & 1:
                return False
    if [sum(row) for row in moves] != list(source):
        return False
    if [sum(moves[u][v] for u in range(n)) for v in range(n)] != list(target):
        return False
    return True
