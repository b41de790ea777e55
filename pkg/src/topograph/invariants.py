"""Exact graph invariants over bitset adjacency.

The NP-hard ones (clique, independence, domination) run under a wall-clock
budget. When the budget runs out they return the best bound found so far
with ``exact=False`` instead of raising.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .core import SimpleGraph, iter_bits
from .errors import DisconnectedGraphError

DEFAULT_BUDGET = 30.0


@dataclass(frozen=True)
class SolverResult:
    value: int
    witness: tuple[int, ...]
    exact: bool = True


class _Timeout(Exception):
    pass


class _Clock:
    def __init__(self, budget: float | None):
        self.deadline = None if budget is None else time.monotonic() + budget

    def tick(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Timeout


def permute_rows(rows: tuple[int, ...], perm: list[int]) -> tuple[int, ...]:
    """Rows of the graph whose vertex i is old vertex ``perm[i]``."""
    n = len(rows)
    if n == 0:
        return ()
    width = (n + 7) // 8
    packed = np.frombuffer(b"".join(r.to_bytes(width, "little") for r in rows), dtype=np.uint8)
    bits = np.unpackbits(packed.reshape(n, width), axis=1, bitorder="little")[:, :n]
    idx = np.asarray(perm)
    out = np.packbits(bits[np.ix_(idx, idx)], axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in out)


def degree_extremes(G: SimpleGraph) -> tuple[int, int]:
    degs = G.degrees()
    return min(degs), max(degs)


def components(G: SimpleGraph) -> list[int]:
    """Connected components as vertex bitsets, ordered by smallest member."""
    rows = G.rows
    unseen = G.all_mask
    comps = []
    while unseen:
        start = unseen & -unseen
        comp = frontier = start
        unseen ^= start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & unseen
            unseen &= ~frontier
            comp |= frontier
        comps.append(comp)
    return comps


def connectivity(G: SimpleGraph) -> tuple[bool, int]:
    count = len(components(G))
    return count == 1, count


def bfs_layers(G: SimpleGraph, source: int) -> list[int]:
    """Distance layers from ``source`` as bitsets; layer d holds vertices at distance d."""
    rows = G.rows
    seen = frontier = 1 << source
    layers = [frontier]
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        if not frontier:
            return layers
        seen |= frontier
        layers.append(frontier)


def bfs_distances(G: SimpleGraph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex, -1 where unreachable."""
    dist = [-1] * G.order
    for d, layer in enumerate(bfs_layers(G, source)):
        for v in iter_bits(layer):
            dist[v] = d
    return dist


@dataclass(frozen=True)
class Eccentricities:
    values: tuple[int, ...]
    radius: int
    diameter: int


def eccentricities(G: SimpleGraph) -> Eccentricities:
    if not connectivity(G)[0]:
        raise DisconnectedGraphError("eccentricity is undefined on a disconnected graph")
    ecc = tuple(len(bfs_layers(G, v)) - 1 for v in range(G.order))
    return Eccentricities(ecc, min(ecc), max(ecc))


def _color_sort(P: int, rows: tuple[int, ...], clock: _Clock) -> tuple[list[int], list[int]]:
    # greedy sequential coloring; bounds[i] is the color of order[i], nondecreasing
    order, bounds = [], []
    uncolored = P
    color = 0
    while uncolored:
        clock.tick()
        color += 1
        Q = uncolored
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~low & ~rows[v]
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique(G: SimpleGraph, budget: float | None) -> SolverResult:
    n = G.order
    if n == 0:
        return SolverResult(0, ())
    # renumber so the highest-degree vertices get the lowest indices
    clock = _Clock(budget)
    perm = sorted(range(n), key=lambda v: (-G.degree(v), v))
    rows = permute_rows(G.rows, perm)

    best: list[int] = []
    P = (1 << n) - 1
    while P:  # greedy start
        low = P & -P
        v = low.bit_length() - 1
        best.append(v)
        P &= rows[v]

    R: list[int] = []

    def expand(P: int):
        nonlocal best
        clock.tick()
        order, bounds = _color_sort(P, rows, clock)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + bounds[i] <= len(best):
                return
            v = order[i]
            R.append(v)
            sub = P & rows[v]
            if sub:
                expand(sub)
            elif len(R) > len(best):
                best = R.copy()
            R.pop()
            P &= ~(1 << v)

    exact = True
    try:
        expand((1 << n) - 1)
    except _Timeout:
        exact = False
    witness = tuple(sorted(perm[v] for v in best))
    return SolverResult(len(witness), witness, exact)


def clique_number(G: SimpleGraph, budget: float | None = DEFAULT_BUDGET) -> SolverResult:
    """Maximum clique by colour-bounded branch and bound.

    On timeout ``value`` is a lower bound and ``witness`` a clique of that size.
    """
    return _max_clique(G, budget)


def independence_number(G: SimpleGraph, budget: float | None = DEFAULT_BUDGET) -> SolverResult:
    """Maximum independent set, searched as a maximum clique of the complement."""
    return _max_clique(G.complement(), budget)


class _Dominator:
    """Branch and bound over closed neighbourhoods.

    Each node picks the undominated vertex with the fewest eligible
    dominators and branches on those; siblings exclude earlier choices.
    """

    def __init__(self, G: SimpleGraph, clock: _Clock):
        self.closed = tuple(r | (1 << v) for v, r in enumerate(G.rows))
        self.clock = clock

    def search(self, undominated: int, allowed: int, k: int, chosen: list[int]) -> bool:
        if not undominated:
            return True
        if k == 0:
            return False
        self.clock.tick()
        closed = self.closed

        maxcov = 0
        for v in iter_bits(allowed):
            c = (closed[v] & undominated).bit_count()
            if c > maxcov:
                maxcov = c
        if maxcov == 0 or -(-undominated.bit_count() // maxcov) > k:
            return False

        pick_cands, fewest = 0, None
        for u in iter_bits(undominated):
            cands = closed[u] & allowed
            c = cands.bit_count()
            if c == 0:
                return False
            if fewest is None or c < fewest:
                pick_cands, fewest = cands, c
                if c == 1:
                    break

        ranked = sorted(iter_bits(pick_cands),
                        key=lambda v: (-(closed[v] & undominated).bit_count(), v))
        for v in ranked:
            chosen.append(v)
            if self.search(undominated & ~closed[v], allowed, k - 1, chosen):
                return True
            chosen.pop()
            allowed &= ~(1 << v)
        return False


def _greedy_dominating(closed: tuple[int, ...], full: int) -> list[int]:
    undominated = full
    chosen = []
    while undominated:
        v = max(range(len(closed)), key=lambda v: ((closed[v] & undominated).bit_count(), -v))
        chosen.append(v)
        undominated &= ~closed[v]
    return chosen


def tiebreak_order(G: SimpleGraph) -> list[int]:
    """Vertices ranked highest degree first, then by index."""
    return sorted(range(G.order), key=lambda v: (-G.degree(v), v))


def domination_number(G: SimpleGraph, budget: float | None = DEFAULT_BUDGET) -> SolverResult:
    """Minimum dominating set with a canonical witness.

    Among all minimum dominating sets the witness is the lexicographically
    least once vertices are ranked by :func:`tiebreak_order`; on the
    topological graph this picks the singletons. On timeout ``value`` is an
    upper bound and ``witness`` a dominating set of that size.
    """
    n = G.order
    if n == 0:
        return SolverResult(0, ())
    rank = tiebreak_order(G)
    H = SimpleGraph._trusted(permute_rows(G.rows, rank))

    full = (1 << n) - 1
    clock = _Clock(budget)
    dom = _Dominator(H, clock)
    best = _greedy_dominating(dom.closed, full)

    def result(chosen, exact):
        return SolverResult(len(chosen), tuple(sorted(rank[v] for v in chosen)), exact)

    try:
        while len(best) > 1:
            trial: list[int] = []
            if not dom.search(full, full, len(best) - 1, trial):
                break
            best = trial
    except _Timeout:
        return result(best, False)

    k = len(best)
    canonical: list[int] = []
    undominated = full
    try:
        for slot in range(k):
            remaining = k - slot - 1
            start = canonical[-1] + 1 if canonical else 0
            for v in range(start, n):
                rest = undominated & ~dom.closed[v]
                allowed = full & ~((1 << (v + 1)) - 1)
                if dom.search(rest, allowed, remaining, []):
                    canonical.append(v)
                    undominated = rest
                    break
    except _Timeout:
        # value is proven; only the canonical tie-break is missing
        return result(best, True)
    return result(canonical, True)


def cut_vertices(G: SimpleGraph) -> list[int]:
    """Articulation points by iterative depth-first low-link."""
    n = G.order
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(G.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cut[parent] = True
        if root_children > 1:
            cut[root] = True
    return [v for v in range(n) if cut[v]]


def pendant_vertices(G: SimpleGraph) -> list[int]:
    return [v for v, d in enumerate(G.degrees()) if d == 1]


@dataclass
class InvariantReport:
    order: int
    size: int
    min_degree: int
    max_degree: int
    clique_number: int
    independence_number: int
    domination_number: int
    radius: int | None
    diameter: int | None
    is_connected: bool
    component_count: int
    cut_vertices: list[int]
    pendant_vertices: list[int]
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    exact: dict[str, bool] = field(default_factory=dict)


def compute_report(G: SimpleGraph, budget: float | None = DEFAULT_BUDGET) -> InvariantReport:
    """All invariants of G; each NP-hard solver gets its own ``budget`` seconds."""
    lo, hi = degree_extremes(G)
    connected, count = connectivity(G)
    radius = diameter = None
    if connected:
        ecc = eccentricities(G)
        radius, diameter = ecc.radius, ecc.diameter
    omega = clique_number(G, budget)
    beta = independence_number(G, budget)
    gamma = domination_number(G, budget)
    return InvariantReport(
        order=G.order,
        size=G.size,
        min_degree=lo,
        max_degree=hi,
        clique_number=omega.value,
        independence_number=beta.value,
        domination_number=gamma.value,
        radius=radius,
        diameter=diameter,
        is_connected=connected,
        component_count=count,
        cut_vertices=cut_vertices(G),
        pendant_vertices=pendant_vertices(G),
        witnesses={
            "clique": list(omega.witness),
            "independent_set": list(beta.witness),
            "dominating_set": list(gamma.witness),
        },
        exact={
            "clique_number": omega.exact,
            "independence_number": beta.exact,
            "domination_number": gamma.exact,
        },
    )
