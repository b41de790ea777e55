"""Registry of the published statements about the topological graph, each
checked by computation at concrete parameters.

Predictors encode the formulas exactly as published, including the ones
that contradict each other. Whether a formula holds is decided only by the
computed value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable

from .core import (
    SimpleGraph,
    are_isomorphic,
    build_topo_graph,
    check_n,
    corona,
    induced_subgraph,
    join,
    set_label,
    to_simple,
)
from .errors import RangeError, UnknownClaimError
from . import invariants as inv
from . import oracle

CONFIRMED = "CONFIRMED"
REFUTED = "REFUTED"
NOT_APPLICABLE = "NOT-APPLICABLE"
INEXACT = "INEXACT"
VERDICTS = (CONFIRMED, REFUTED, NOT_APPLICABLE, INEXACT)

VERIFY_MAX_N = 10
# the relaxation oracle is cubic per pass; beyond this order BFS stands alone
DISTANCE_CROSSCHECK_ORDER = 62


@dataclass(frozen=True)
class Claim:
    id: str
    location: str
    anchor: str
    statement: str
    predict: Callable[..., Any]
    compute: Callable[..., "Outcome"]
    applies: Callable[..., bool] = lambda n, m=None: True
    product: bool = False
    note: str = ""


@dataclass
class Outcome:
    computed: Any
    holds: bool
    evidence: dict = field(default_factory=dict)
    exact: bool = True


@dataclass(frozen=True)
class ClaimVerdict:
    claim: str
    params: tuple[int, ...]
    predicted: Any
    computed: Any
    verdict: str
    evidence: dict = field(default_factory=dict, compare=False)

    @property
    def params_text(self) -> str:
        return ";".join(str(p) for p in self.params)

    def params_dict(self) -> dict[str, int]:
        return dict(zip(("n", "m"), self.params))


class Workspace:
    """Per-run cache of graphs and solver results.

    Where the brute-force oracle can run, the solver value must agree with
    it; a disagreement is a bug and raises.
    """

    def __init__(self, budget: float | None = inv.DEFAULT_BUDGET):
        self.budget = budget
        self._cache: dict[tuple, Any] = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def topo(self, n: int) -> SimpleGraph:
        return self._memo(("topo", n), lambda: to_simple(build_topo_graph(n)))

    def product(self, op: str, n: int, m: int) -> SimpleGraph:
        fn = {"corona": corona, "join": join}[op]
        return self._memo((op, n, m), lambda: fn(self.topo(n), self.topo(m)))

    def _solve(self, key, G, solver, brute):
        def run():
            res = solver(G, self.budget)
            if G.order <= oracle.LIMITS.max_order_enumeration:
                ref = brute(G)
                if ref != res.value or not res.exact:
                    raise RuntimeError(f"{solver.__name__} gave {res.value}, oracle gave {ref} on {key}")
                return res, "solver+oracle"
            return res, "solver"
        return self._memo(key, run)

    def clique(self, key, G):
        return self._solve(("omega",) + key, G, inv.clique_number, oracle.oracle_max_clique)

    def independence(self, key, G):
        return self._solve(("beta",) + key, G, inv.independence_number, oracle.oracle_max_independent)

    def domination(self, key, G):
        return self._solve(("gamma",) + key, G, inv.domination_number, oracle.oracle_min_dominating)

    def cut_set(self, n: int) -> tuple[list[int], str]:
        def run():
            G = self.topo(n)
            cut = inv.cut_vertices(G)
            if G.order <= oracle.LIMITS.max_order_removal:
                ref = oracle.oracle_articulation(G)
                if ref != cut:
                    raise RuntimeError(f"low-link gave {cut}, removal oracle gave {ref} at n={n}")
                return cut, "lowlink+oracle"
            return cut, "lowlink"
        return self._memo(("cut", n), run)


def _masks(indices) -> list[int]:
    # vertex index i of the topological graph is mask i + 1
    return [i + 1 for i in indices]


def _sets(indices) -> list[str]:
    return [set_label(i + 1) for i in indices]


def _iso_claim(target: Callable[[], SimpleGraph], name: str):
    def compute(ws: Workspace, n: int, m=None) -> Outcome:
        iso = are_isomorphic(ws.topo(n), target())
        return Outcome(name if iso else f"not {name}", iso,
                       {"order": ws.topo(n).order, "size": ws.topo(n).size})
    return compute


def _def_graph(ws: Workspace, n: int, m=None) -> Outcome:
    # independent route: frozensets of 1-based elements, disjointness by set algebra
    ground = range(1, n + 1)
    family = [frozenset(c) for k in range(1, n) for c in combinations(ground, k)]
    expected = {tuple(sorted((sum(1 << (e - 1) for e in a), sum(1 << (e - 1) for e in b))))
                for a, b in combinations(family, 2) if not a & b}
    built = {(u + 1, v + 1) for u, v in ws.topo(n).edges()}
    return Outcome(len(built), built == expected,
                   {"expected_edges": len(expected), "missing": len(expected - built),
                    "extra": len(built - expected)})


def _numeric(fn: Callable[[Workspace, int], tuple[int, dict, bool]]):
    def compute(ws: Workspace, n: int, m=None) -> Outcome:
        value, evidence, exact = fn(ws, n)
        return Outcome(value, None, evidence, exact)
    return compute


def _clique(ws, n):
    res, src = ws.clique((n,), ws.topo(n))
    return res.value, {"witness": _sets(res.witness), "source": src}, res.exact


def _pendants(ws, n):
    p = inv.pendant_vertices(ws.topo(n))
    return len(p), {"pendants": _sets(p)}, True


def _delta_min(ws, n):
    lo, _ = inv.degree_extremes(ws.topo(n))
    return lo, {}, True


def _delta_max(ws, n):
    G = ws.topo(n)
    _, hi = inv.degree_extremes(G)
    return hi, {"attained_at": _sets(v for v in range(G.order) if G.degree(v) == hi)}, True


def _gamma(ws, n):
    res, src = ws.domination((n,), ws.topo(n))
    return res.value, {"witness": _sets(res.witness), "source": src}, res.exact


def _beta(ws, n):
    res, src = ws.independence((n,), ws.topo(n))
    return res.value, {"witness": _sets(res.witness), "source": src}, res.exact


def _order(ws, n):
    return ws.topo(n).order, {}, True


def _isolated(ws, n):
    G = ws.topo(n)
    iso = [v for v in range(G.order) if G.degree(v) == 0]
    return len(iso), {"isolated": _sets(iso)}, True


def _beta_eq_gamma(ws: Workspace, n: int, m=None) -> Outcome:
    b, bsrc = ws.independence((n,), ws.topo(n))
    g, gsrc = ws.domination((n,), ws.topo(n))
    word = "equal" if b.value == g.value else "unequal"
    return Outcome(word, None, {
        "beta": b.value, "gamma": g.value,
        "independent_set": _sets(b.witness), "dominating_set": _sets(g.witness),
        "source": f"beta:{bsrc},gamma:{gsrc}",
    }, b.exact and g.exact)


def _connected(ws: Workspace, n: int, m=None) -> Outcome:
    ok, count = inv.connectivity(ws.topo(n))
    return Outcome("connected" if ok else "disconnected", None, {"components": count})


def _null_sub(ws: Workspace, n: int, m=None) -> Outcome:
    G = ws.topo(n)
    top = build_topo_graph(n)
    S = [top.index(mask) for mask in top.co_singletons()]
    H = induced_subgraph(G, S)
    word = f"N_{n}" if H.size == 0 and H.order == n else f"order={H.order},size={H.size}"
    ev = {"vertices": _sets(S)}
    if H.size:
        u, v = H.edges()[0]
        ev["edge"] = [set_label(S[u] + 1), set_label(S[v] + 1)]
    return Outcome(word, None, ev)


def _rad_diam(ws: Workspace, n: int, m=None) -> Outcome:
    G = ws.topo(n)
    ecc = inv.eccentricities(G)
    value = f"rad={ecc.radius};diam={ecc.diameter}"
    ev = {"radius": ecc.radius, "diameter": ecc.diameter, "source": "bfs"}
    if G.order <= DISTANCE_CROSSCHECK_ORDER:
        d = oracle.oracle_all_pairs_distances(G)
        ecc_ref = [max(row) for row in d]
        if tuple(ecc_ref) != ecc.values:
            raise RuntimeError(f"BFS and relaxation eccentricities disagree at n={n}")
        ev["source"] = "bfs+relaxation"
    return Outcome(value, None, ev)


def _cut_singleton(ws: Workspace, n: int, m=None) -> Outcome:
    cut, src = ws.cut_set(n)
    top = build_topo_graph(n)
    singles = {top.index(s) for s in top.singletons()}
    hit = sorted(singles & set(cut))
    missing = sorted(singles - set(cut))
    return Outcome(_sets(hit), None, {"cut_vertices": _sets(cut), "not_cut": _sets(missing), "source": src})


def _cut_not_big(ws: Workspace, n: int, m=None) -> Outcome:
    cut, src = ws.cut_set(n)
    top = build_topo_graph(n)
    big = {top.index(s) for s in top.co_singletons()}
    hit = sorted(big & set(cut))
    return Outcome(_sets(hit), None, {"cut_vertices": _sets(cut), "source": src})


def _corona_gamma(ws: Workspace, n: int, m: int) -> Outcome:
    G = ws.product("corona", n, m)
    res, src = ws.domination(("corona", n, m), G)
    literal, structural = _corona_predict(n, m)["literal"], _corona_predict(n, m)["structural"]
    readings = {
        "literal": {"predicted": literal, "verdict": CONFIRMED if res.value == literal else REFUTED},
        "structural": {"predicted": structural, "verdict": CONFIRMED if res.value == structural else REFUTED},
    }
    ev = {"order": G.order, "readings": readings, "witness": [G.label(v) for v in res.witness],
          "witness_dominates": oracle.is_dominating(G, res.witness), "source": src}
    return Outcome(res.value, res.value == structural, ev, res.exact)


def _corona_predict(n: int, m: int) -> dict:
    return {"literal": n, "structural": 2**n - 2}


def _gamma_formula(n: int) -> int:
    return 1 if n == 2 else n


def _join_predict(n: int, m: int) -> int:
    return _gamma_formula(n) if n <= m else _gamma_formula(m)


def _join_gamma(ws: Workspace, n: int, m: int) -> Outcome:
    G = ws.product("join", n, m)
    res, src = ws.domination(("join", n, m), G)
    ev = {"order": G.order, "witness": [G.label(v) for v in res.witness],
          "witness_dominates": oracle.is_dominating(G, res.witness), "source": src}
    return Outcome(res.value, None, ev, res.exact)


def _beta_stated(n: int) -> int:
    return sum(math.comb(n, i) for i in range(n // 2, n))


def _beta_proof(n: int) -> int:
    return sum(math.comb(n, -(-(i + 1) // 2)) for i in range(n, 2 * n - 2))


def _delta_formula(n: int) -> int:
    return n - 1 + sum(math.comb(n - 1, i) for i in range(2, n))


_REGISTRY: tuple[Claim, ...] = (
    Claim("DEF-GRAPH", "Definition 2.1", "the edge set E={AB; A∩B=∅}",
          "Vertices are the nonempty proper subsets; two are adjacent iff disjoint.",
          predict=lambda n, m=None: len([1 for a, b in combinations(range(1, 2**n - 1), 2) if not a & b]),
          compute=_def_graph),
    Claim("ISO-K2", "Proposition 2.2", "If n=2, then G_τ≡K_2",
          "For n = 2 the graph is K2.",
          predict=lambda n, m=None: "K_2",
          compute=_iso_claim(lambda: SimpleGraph.complete(2), "K_2"),
          applies=lambda n, m=None: n == 2),
    Claim("ISO-CORONA", "Proposition 2.3", "G_τ≡K_3⊙K_1",
          "For n = 3 the graph is the corona of K3 with K1.",
          predict=lambda n, m=None: "corona(K_3,K_1)",
          compute=_iso_claim(lambda: corona(SimpleGraph.complete(3), SimpleGraph.complete(1)),
                             "corona(K_3,K_1)"),
          applies=lambda n, m=None: n == 3),
    Claim("CLIQUE-N", "Proposition 2.4(1)", "The clique number is n",
          "The clique number equals n.",
          predict=lambda n, m=None: n, compute=_numeric(_clique)),
    Claim("PENDANT-N", "Proposition 2.4(2)", "The number of pendants vertices is n",
          "There are exactly n pendant vertices.",
          predict=lambda n, m=None: n, compute=_numeric(_pendants)),
    Claim("DELTA-MIN", "Theorem 2.5(1)", "δ(G_τ)=1",
          "Minimum degree is 1.",
          predict=lambda n, m=None: 1, compute=_numeric(_delta_min)),
    Claim("DELTA-MAX", "Theorem 2.5(2)", "Δ(G_τ)=n−1+Σ C(n−1,i)",
          "Maximum degree is n-1 + sum_{i=2}^{n-1} C(n-1,i).",
          predict=lambda n, m=None: _delta_formula(n), compute=_numeric(_delta_max)),
    Claim("GAMMA", "Theorem FF8", "n, if n > 2",
          "Domination number is 1 for n = 2 and n for n > 2.",
          predict=lambda n, m=None: _gamma_formula(n), compute=_numeric(_gamma)),
    Claim("BETA-STATED", "Theorem GG8 (statement)", "β(G_τ)= Σ C(n,i)",
          "Independence number is sum_{i=floor(n/2)}^{n-1} C(n,i).",
          predict=lambda n, m=None: _beta_stated(n), compute=_numeric(_beta)),
    Claim("BETA-PROOF", "Theorem GG8 (proof)", "Σ_{i=n}^{2n−3}",
          "Independence number is sum_{i=n}^{2n-3} C(n, ceil((i+1)/2)).",
          predict=lambda n, m=None: _beta_proof(n), compute=_numeric(_beta)),
    Claim("BETA-EXAMPLE", "worked example, |X| = 5", "β(G_τ)=15",
          "For n = 5 the independence number is 15.",
          predict=lambda n, m=None: 15, compute=_numeric(_beta),
          applies=lambda n, m=None: n == 5),
    Claim("BETA-EQ-GAMMA", "Corollary to Theorem GG8", "if and only if n=3",
          "Independence and domination numbers coincide exactly when n = 3.",
          predict=lambda n, m=None: "equal" if n == 3 else "unequal",
          compute=_beta_eq_gamma),
    Claim("CONNECTED", "connectivity theorem", "G_τ is a connected graph",
          "The graph is connected.",
          predict=lambda n, m=None: "connected", compute=_connected),
    Claim("ORDER", "order proposition", "is 2^n−2",
          "The graph has 2^n - 2 vertices.",
          predict=lambda n, m=None: 2**n - 2, compute=_numeric(_order)),
    Claim("NO-ISOLATED", "isolated-vertex proposition", "no isolated vertex in discrete topological graph",
          "No vertex has degree 0.",
          predict=lambda n, m=None: 0, compute=_numeric(_isolated)),
    Claim("NULL-SUB", "null-subgraph proposition", "has N_n induced subgraph",
          "The (n-1)-subsets induce the null graph N_n.",
          predict=lambda n, m=None: f"N_{n}", compute=_null_sub),
    Claim("CORONA-GAMMA", "product theorem (1)", "γ(G_τ⊙H_τ)=n",
          "Domination number of the corona equals the order of the left graph.",
          predict=_corona_predict, compute=_corona_gamma, product=True,
          note="'order n' is ambiguous: literal reads n = |X|, structural reads n = |V(G_tau)|; "
               "the verdict follows the structural reading, both are listed under readings"),
    Claim("JOIN-GAMMA", "product theorem (2)", "γ(G_τ+H_τ)",
          "Domination number of the join is gamma of the side with the smaller ground set.",
          predict=_join_predict, compute=_join_gamma, product=True,
          note="the published argument appeals to the corona definition inside the join case"),
    Claim("RAD-DIAM", "radius/diameter theorem", "rad (G_τ)=2 and diam (G_τ)=3",
          "For n >= 3 the radius is 2 and the diameter is 3.",
          predict=lambda n, m=None: "rad=2;diam=3", compute=_rad_diam,
          applies=lambda n, m=None: n >= 3),
    Claim("CUT-SINGLETON", "cut-vertex proposition", "singleton element is a cut vertex",
          "For n >= 3 every singleton is a cut vertex.",
          predict=lambda n, m=None: _sets(i - 1 for i in build_topo_graph(n).singletons()),
          compute=_cut_singleton, applies=lambda n, m=None: n >= 3),
    Claim("CUT-NOT-BIG", "cut-vertex proposition", "n−1 element is not cut vertex",
          "For n >= 3 no (n-1)-subset is a cut vertex.",
          predict=lambda n, m=None: [], compute=_cut_not_big, applies=lambda n, m=None: n >= 3),
)

_BY_ID = {c.id: c for c in _REGISTRY}
_POSITION = {c.id: i for i, c in enumerate(_REGISTRY)}


def list_claims() -> list[Claim]:
    return list(_REGISTRY)


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id) from None


def check_claim(claim_id: str, n: int, m: int | None = None,
                budget: float | None = inv.DEFAULT_BUDGET,
                workspace: Workspace | None = None) -> ClaimVerdict:
    claim = get_claim(claim_id)
    check_n(n)
    if claim.product:
        if m is None:
            raise ValueError(f"{claim_id} needs both n and m")
        check_n(m)
        params: tuple[int, ...] = (n, m)
    else:
        if m is not None:
            raise ValueError(f"{claim_id} takes a single parameter n")
        params = (n,)
    if not claim.applies(*params):
        return ClaimVerdict(claim.id, params, None, None, NOT_APPLICABLE,
                            {"reason": "parameters outside the claim's hypothesis"})
    ws = workspace or Workspace(budget)
    predicted = claim.predict(*params)
    out = claim.compute(ws, *params)
    holds = out.holds if out.holds is not None else out.computed == predicted
    evidence = dict(out.evidence)
    if claim.note:
        evidence["note"] = claim.note
    if not out.exact:
        verdict = INEXACT
    else:
        verdict = CONFIRMED if holds else REFUTED
    return ClaimVerdict(claim.id, params, predicted, out.computed, verdict, evidence)


def product_pairs(n_min: int, n_max: int) -> list[tuple[str, int, int]]:
    """Ordered (op, n, m) pairs in range whose product the brute-force oracle can still check."""
    cap = oracle.LIMITS.max_order_enumeration
    pairs = []
    for n in range(n_min, n_max + 1):
        for m in range(n_min, n_max + 1):
            g, h = 2**n - 2, 2**m - 2
            if g * (1 + h) <= cap:
                pairs.append(("corona", n, m))
            if g + h <= cap:
                pairs.append(("join", n, m))
    return pairs


def verify_all(n_min: int, n_max: int,
               budget: float | None = inv.DEFAULT_BUDGET) -> list[ClaimVerdict]:
    if not 2 <= n_min <= n_max <= VERIFY_MAX_N:
        raise RangeError(f"need 2 <= n_min <= n_max <= {VERIFY_MAX_N}, got {n_min}..{n_max}")
    ws = Workspace(budget)
    pairs = product_pairs(n_min, n_max)
    out = []
    for claim in _REGISTRY:
        if claim.product:
            op = "corona" if claim.id == "CORONA-GAMMA" else "join"
            for kind, n, m in pairs:
                if kind == op:
                    out.append(check_claim(claim.id, n, m, budget, ws))
        else:
            for n in range(n_min, n_max + 1):
                out.append(check_claim(claim.id, n, None, budget, ws))
    out.sort(key=lambda v: (_POSITION[v.claim], v.params))
    return out


def summarize(verdicts: list[ClaimVerdict]) -> dict[str, int]:
    counts = {k: 0 for k in VERDICTS}
    for v in verdicts:
        counts[v.verdict] += 1
    return counts
