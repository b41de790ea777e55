"""Brute-force reference implementations.

Slow on purpose. Nothing here touches the bitset rows or the solvers in
``invariants``; the only shared surface is ``SimpleGraph.order`` and
``SimpleGraph.adjacent``. Each routine refuses inputs above its cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import SimpleGraph
from .errors import CapacityError


@dataclass(frozen=True)
class OracleLimits:
    max_order_enumeration: int = 24
    max_order_removal: int = 200
    max_order_distances: int = 500


LIMITS = OracleLimits()


def _require(G: SimpleGraph, cap: int, what: str):
    if G.order > cap:
        raise CapacityError(f"{what} oracle is capped at order {cap}, got {G.order}")


def _adjacency_lists(G: SimpleGraph) -> list[list[int]]:
    n = G.order
    return [[u for u in range(n) if u != v and G.adjacent(v, u)] for v in range(n)]


def _largest_compatible(G: SimpleGraph, want_adjacent: bool) -> list[int]:
    # include/exclude enumeration; a branch dies once an included pair violates the relation
    n = G.order
    best: list[int] = []
    chosen: list[int] = []

    def walk(v: int):
        nonlocal best
        if len(chosen) + (n - v) <= len(best):
            return
        if v == n:
            best = list(chosen)
            return
        if all(G.adjacent(v, u) == want_adjacent for u in chosen):
            chosen.append(v)
            walk(v + 1)
            chosen.pop()
        walk(v + 1)

    walk(0)
    return best


def oracle_max_independent_set(G: SimpleGraph) -> list[int]:
    _require(G, LIMITS.max_order_enumeration, "independent set")
    return _largest_compatible(G, want_adjacent=False)


def oracle_max_independent(G: SimpleGraph) -> int:
    return len(oracle_max_independent_set(G))


def oracle_max_clique_set(G: SimpleGraph) -> list[int]:
    _require(G, LIMITS.max_order_enumeration, "clique")
    return _largest_compatible(G, want_adjacent=True)


def oracle_max_clique(G: SimpleGraph) -> int:
    return len(oracle_max_clique_set(G))


def is_dominating(G: SimpleGraph, S) -> bool:
    S = set(S)
    return all(v in S or any(G.adjacent(v, s) for s in S) for v in range(G.order))


def oracle_min_dominating_set(G: SimpleGraph) -> list[int]:
    """First dominating set met when trying sizes 1, 2, ... in combination order."""
    _require(G, LIMITS.max_order_enumeration, "dominating set")
    n = G.order
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            if is_dominating(G, S):
                return list(S)
    return []


def oracle_min_dominating(G: SimpleGraph) -> int:
    return len(oracle_min_dominating_set(G))


def _count_components(adj: list[list[int]], removed: int = -1) -> int:
    n = len(adj)
    seen = [False] * n
    if 0 <= removed < n:
        seen[removed] = True
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
    return count


def oracle_articulation(G: SimpleGraph) -> list[int]:
    """Vertices whose deletion leaves more components than before."""
    _require(G, LIMITS.max_order_removal, "articulation")
    adj = _adjacency_lists(G)
    base = _count_components(adj)
    return [v for v in range(G.order) if _count_components(adj, removed=v) > base]


INF = float("inf")


def oracle_all_pairs_distances(G: SimpleGraph) -> list[list[float]]:
    """Distance matrix by repeated triangle relaxation until nothing changes.

    Unreachable pairs stay at ``inf``.
    """
    _require(G, LIMITS.max_order_distances, "distance")
    n = G.order
    d = [[0 if i == j else (1 if G.adjacent(i, j) else INF) for j in range(n)] for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            di = d[i]
            for k in range(n):
                dik = di[k]
                if dik == INF:
                    continue
                dk = d[k]
                for j in range(n):
                    alt = dik + dk[j]
                    if alt < di[j]:
                        di[j] = alt
                        changed = True
    return d
