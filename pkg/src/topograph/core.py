"""Subset encoding, the disjointness graph on nonempty proper subsets, and
explicit graphs with corona/join products.

A subset of ``{1, ..., n}`` is a bitmask with bit ``i - 1`` set when element
``i`` is a member.  Vertices of the topological graph are the masks
``1 .. 2**n - 2`` in increasing order, so the vertex at index ``i`` has mask
``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, RangeError

MIN_N = 2
MAX_N = 16
MAX_ISO_ORDER = 10


def check_n(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise RangeError(f"n must be an integer, got {n!r}")
    if not MIN_N <= n <= MAX_N:
        raise RangeError(f"n={n} outside supported range {MIN_N}..{MAX_N}")
    return n


def popcount(mask: int) -> int:
    return mask.bit_count()


def members(mask: int) -> list[int]:
    """1-based elements of a subset mask, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"elements are 1-based, got {e}")
        mask |= 1 << (e - 1)
    return mask


def set_label(mask: int) -> str:
    return "{" + ",".join(str(e) for e in members(mask)) + "}"


def iter_bits(bits: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def is_adjacent(u: int, v: int) -> bool:
    return u != v and (u & v) == 0


@dataclass(frozen=True)
class TopoGraph:
    """Disjointness graph on the nonempty proper subsets of an n-set.

    Adjacency is never stored; two masks are adjacent iff they do not
    intersect.
    """

    n: int

    def __post_init__(self):
        check_n(self.n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def order(self) -> int:
        return (1 << self.n) - 2

    @property
    def vertices(self) -> range:
        return range(1, self.full)

    def __contains__(self, mask: int) -> bool:
        return 0 < mask < self.full

    def index(self, mask: int) -> int:
        self._check_vertex(mask)
        return mask - 1

    def _check_vertex(self, mask: int):
        if mask not in self:
            raise ValueError(f"{mask} is not a vertex of G_tau(n={self.n})")

    def degree(self, mask: int) -> int:
        self._check_vertex(mask)
        return (1 << (self.n - popcount(mask))) - 1

    def neighbors(self, mask: int) -> list[int]:
        """Nonempty subsets of the complement of ``mask``, ascending."""
        self._check_vertex(mask)
        comp = self.full & ~mask
        out = []
        sub = comp
        while sub:
            out.append(sub)
            sub = (sub - 1) & comp
        out.reverse()
        return out

    def size(self) -> int:
        return (3**self.n - 2 ** (self.n + 1) + 1) // 2

    def singletons(self) -> list[int]:
        return [1 << i for i in range(self.n)]

    def co_singletons(self) -> list[int]:
        """The (n-1)-element subsets, ascending by mask."""
        return sorted(self.full & ~(1 << i) for i in range(self.n))


def build_topo_graph(n: int) -> TopoGraph:
    return TopoGraph(check_n(n))


def degree(G: TopoGraph, v: int) -> int:
    return G.degree(v)


def neighbors(G: TopoGraph, v: int) -> list[int]:
    return G.neighbors(v)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph with adjacency stored as one int bitset per row.

    Bit ``j`` of ``rows[i]`` is set iff vertices ``i`` and ``j`` are adjacent.
    """

    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = self.rows
        n = len(rows)
        limit = 1 << n
        for i, r in enumerate(rows):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} references vertices outside 0..{n - 1}")
            if r >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in iter_bits(r):
                if not rows[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels length does not match order")

    @classmethod
    def _trusted(cls, rows: tuple[int, ...], labels: tuple[str, ...] | None = None) -> SimpleGraph:
        # skips validation; only for rows that are symmetric by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "labels", labels)
        return obj

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> SimpleGraph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) outside 0..{order - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def complete(cls, k: int) -> SimpleGraph:
        full = (1 << k) - 1
        return cls(tuple(full & ~(1 << i) for i in range(k)))

    @classmethod
    def null(cls, k: int) -> SimpleGraph:
        return cls((0,) * k)

    @classmethod
    def cycle(cls, k: int) -> SimpleGraph:
        return cls.from_edges(k, [(i, (i + 1) % k) for i in range(k)])

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def all_mask(self) -> int:
        return (1 << len(self.rows)) - 1

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u, r in enumerate(self.rows) for v in iter_bits(r >> (u + 1) << (u + 1))]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def complement(self) -> SimpleGraph:
        full = self.all_mask
        return SimpleGraph._trusted(tuple(full & ~r & ~(1 << i) for i, r in enumerate(self.rows)),
                                    self.labels)

    def relabel(self, perm: Sequence[int]) -> SimpleGraph:
        """Graph in which old vertex ``i`` becomes vertex ``perm[i]``."""
        if sorted(perm) != list(range(self.order)):
            raise ValueError("perm is not a permutation of the vertex indices")
        rows = [0] * self.order
        for i, r in enumerate(self.rows):
            rows[perm[i]] = sum(1 << perm[j] for j in iter_bits(r))
        labels = None
        if self.labels is not None:
            lab = [""] * self.order
            for i, s in enumerate(self.labels):
                lab[perm[i]] = s
            labels = tuple(lab)
        return SimpleGraph(tuple(rows), labels)

    def without(self, v: int) -> SimpleGraph:
        keep = [i for i in range(self.order) if i != v]
        return induced_subgraph(self, keep)


def _submask_bitset(comp: int) -> int:
    # bit s set for every submask s of comp (including 0)
    acc = 1
    for b in iter_bits(comp):
        acc |= acc << (1 << b)
    return acc


@lru_cache(maxsize=8)
def to_simple(G: TopoGraph) -> SimpleGraph:
    """Explicit form of G with vertex ``i`` standing for mask ``i + 1``."""
    full = G.full
    rows = tuple(_submask_bitset(full & ~m) >> 1 for m in G.vertices)
    labels = tuple(set_label(m) for m in G.vertices)
    return SimpleGraph._trusted(rows, labels)


def induced_subgraph(G: SimpleGraph, S: Iterable[int]) -> SimpleGraph:
    idx = sorted(set(S))
    if not idx:
        raise ValueError("induced subgraph needs at least one vertex")
    if idx[0] < 0 or idx[-1] >= G.order:
        raise ValueError("vertex index out of range")
    pos = {v: k for k, v in enumerate(idx)}
    rows = []
    for v in idx:
        r = 0
        for u in iter_bits(G.rows[v]):
            k = pos.get(u)
            if k is not None:
                r |= 1 << k
        rows.append(r)
    labels = tuple(G.label(v) for v in idx) if G.labels is not None else None
    return SimpleGraph._trusted(tuple(rows), labels)


def corona(G: SimpleGraph, H: SimpleGraph) -> SimpleGraph:
    """G ⊙ H: vertex i of G is joined to every vertex of the i-th copy of H.

    G keeps indices ``0 .. |G|-1``; copy ``i`` occupies the next ``|H|``
    indices after all previous copies.
    """
    if G.order == 0 or H.order == 0:
        raise ValueError("corona needs nonempty operands")
    g, h = G.order, H.order
    edges = list(G.edges())
    h_edges = H.edges()
    for i in range(g):
        base = g + i * h
        edges.extend((i, base + j) for j in range(h))
        edges.extend((base + a, base + b) for a, b in h_edges)
    labels = [G.label(i) for i in range(g)]
    for i in range(g):
        labels.extend(f"{G.label(i)}/{H.label(j)}" for j in range(h))
    return SimpleGraph.from_edges(g * (1 + h), edges, labels)


def join(G: SimpleGraph, H: SimpleGraph) -> SimpleGraph:
    """G + H: disjoint union plus every edge between the two sides."""
    if G.order == 0 or H.order == 0:
        raise ValueError("join needs nonempty operands")
    g, h = G.order, H.order
    left = ((1 << (g + h)) - 1) ^ ((1 << g) - 1)
    rows = [r | left for r in G.rows]
    right = (1 << g) - 1
    rows += [(r << g) | right for r in H.rows]
    labels = [f"L:{G.label(i)}" for i in range(g)] + [f"R:{H.label(j)}" for j in range(h)]
    return SimpleGraph._trusted(tuple(rows), tuple(labels))


def are_isomorphic(G: SimpleGraph, H: SimpleGraph) -> bool:
    """Exhaustive search for an adjacency-preserving bijection.

    Cheap invariants (order, size, sorted degrees) reject first; the
    backtracking only maps vertices onto targets of equal degree.
    """
    if max(G.order, H.order) > MAX_ISO_ORDER:
        raise CapacityError(f"isomorphism search is capped at order {MAX_ISO_ORDER}")
    if G.order != H.order or G.size != H.size:
        return False
    dg, dh = G.degrees(), H.degrees()
    if sorted(dg) != sorted(dh):
        return False
    n = G.order
    # high-degree vertices first constrain the search most
    order = sorted(range(n), key=lambda v: -dg[v])
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or dh[w] != dg[v]:
                continue
            if all(G.adjacent(v, order[j]) == H.adjacent(w, image[order[j]]) for j in range(k)):
                image[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return extend(0)
