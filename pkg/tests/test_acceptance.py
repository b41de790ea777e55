"""Acceptance criteria, one check per criterion.

Each check returns ``(passed, detail)``; the pytest wrapper prints one
PASS/FAIL line per criterion. Run directly for the table alone:

    python tests/test_acceptance.py
"""

import subprocess
import sys
import time

import pytest

from topograph.claims import CONFIRMED, REFUTED, Workspace, check_claim
from topograph.core import (
    SimpleGraph,
    are_isomorphic,
    build_topo_graph,
    corona,
    degree,
    join,
    mask_of,
    to_simple,
)
from topograph.invariants import (
    bfs_distances,
    clique_number,
    connectivity,
    cut_vertices,
    degree_extremes,
    domination_number,
    eccentricities,
    independence_number,
    pendant_vertices,
)
from topograph.oracle import (
    is_dominating,
    oracle_all_pairs_distances,
    oracle_articulation,
    oracle_max_clique,
    oracle_max_independent,
    oracle_min_dominating,
)


def topo(n):
    return to_simple(build_topo_graph(n))


def masks(indices):
    return sorted(i + 1 for i in indices)


def ac1_order_and_structure():
    t0 = time.perf_counter()
    for n in range(2, 11):
        T = build_topo_graph(n)
        if T.order != 2**n - 2 or len(list(T.vertices)) != 2**n - 2:
            return False, f"order wrong at n={n}"
    for n in range(2, 9):
        T = build_topo_graph(n)
        closed = (3**n - 2 ** (n + 1) + 1) // 2
        half_degree_sum = sum(degree(T, v) for v in T.vertices) // 2
        if not to_simple(T).size == closed == half_degree_sum:
            return False, f"edge count mismatch at n={n}"
    dt = time.perf_counter() - t0
    return dt < 5, f"n=2..10 orders, n=2..8 edge counts in {dt:.2f}s (limit 5s)"


def ac2_isomorphism():
    t0 = time.perf_counter()
    a = are_isomorphic(topo(2), SimpleGraph.complete(2))
    b = are_isomorphic(topo(3), corona(SimpleGraph.complete(3), SimpleGraph.complete(1)))
    dt = time.perf_counter() - t0
    return a and b and dt < 1, f"K2={a} K3oK1={b} in {dt:.3f}s (limit 1s)"


def ac3_degrees():
    from math import comb
    for n in range(2, 9):
        lo, hi = degree_extremes(topo(n))
        sum_formula = n - 1 + sum(comb(n - 1, i) for i in range(2, n))
        if not (lo == 1 and hi == 2 ** (n - 1) - 1 == sum_formula):
            return False, f"n={n}: delta={lo} Delta={hi} sum={sum_formula}"
    hi5 = degree_extremes(topo(5))[1]
    return hi5 == 15, f"delta=1, Delta=2^(n-1)-1 for n=2..8; Delta(5)={hi5}"


def ac4_clique_and_pendants():
    for n in range(2, 9):
        G = topo(n)
        omega = clique_number(G)
        if omega.value != n or not omega.exact:
            return False, f"omega({n})={omega.value}"
        if n <= 4 and oracle_max_clique(G) != n:
            return False, f"oracle omega({n}) != {n}"
        full = 2**n - 1
        if masks(pendant_vertices(G)) != sorted(full & ~(1 << i) for i in range(n)):
            return False, f"pendants wrong at n={n}"
    listed = [mask_of(s) for s in ([1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 5])]
    S = masks(pendant_vertices(topo(5)))
    return S == sorted(listed) and len(S) == 5, "omega=n and pendants=(n-1)-subsets for n=2..8; |S|=5 at n=5"


def ac5_domination():
    t0 = time.perf_counter()
    if domination_number(topo(2)).value != 1:
        return False, "gamma(2) != 1"
    for n in range(3, 7):
        G = topo(n)
        res = domination_number(G, budget=30)
        if not res.exact or res.value != n:
            return False, f"gamma({n})={res.value} exact={res.exact}"
        if n <= 4 and oracle_min_dominating(G) != n:
            return False, f"oracle gamma({n}) != {n}"
    w5 = masks(domination_number(topo(5)).witness)
    dt = time.perf_counter() - t0
    ok = w5 == [1, 2, 4, 8, 16] and dt < 60
    return ok, f"gamma=1,n for n=2..6; n=5 witness={w5}; {dt:.2f}s (limit 60s)"


def ac6_independence():
    for n in range(2, 7):
        G = topo(n)
        res = independence_number(G)
        if not res.exact or res.value != 2 ** (n - 1) - 1:
            return False, f"beta({n})={res.value}"
        if n <= 4 and oracle_max_independent(G) != res.value:
            return False, f"oracle beta({n}) disagrees"
    s4, s5, e5 = check_claim("BETA-STATED", 4), check_claim("BETA-STATED", 5), check_claim("BETA-EXAMPLE", 5)
    ok = ((s4.predicted, s4.computed, s4.verdict) == (10, 7, REFUTED)
          and (s5.predicted, s5.computed, s5.verdict) == (25, 15, REFUTED)
          and (e5.predicted, e5.computed, e5.verdict) == (15, 15, CONFIRMED))
    return ok, (f"beta=2^(n-1)-1 for n=2..6; STATED(4)={s4.predicted}/{s4.computed} {s4.verdict}, "
                f"STATED(5)={s5.predicted}/{s5.computed} {s5.verdict}, EXAMPLE(5) {e5.verdict}")


def ac7_metric():
    ecc2 = eccentricities(topo(2))
    if (ecc2.radius, ecc2.diameter) != (1, 1):
        return False, "n=2 not rad=diam=1"
    for n in range(3, 9):
        ecc = eccentricities(topo(n))
        if (ecc.radius, ecc.diameter) != (2, 3):
            return False, f"n={n}: rad={ecc.radius} diam={ecc.diameter}"
    for n in range(2, 6):
        G = topo(n)
        ref = oracle_all_pairs_distances(G)
        if any(bfs_distances(G, v) != ref[v] for v in range(G.order)):
            return False, f"BFS vs relaxation mismatch at n={n}"
    return True, "rad=2 diam=3 for n=3..8, 1/1 at n=2; BFS == relaxation for n<=5"


def ac8_cut_vertices():
    for n in range(3, 8):
        G = topo(n)
        low, brute = cut_vertices(G), oracle_articulation(G)
        if low != brute or masks(low) != [1 << i for i in range(n)]:
            return False, f"n={n}: lowlink={masks(low)} oracle={masks(brute)}"
        if check_claim("CUT-SINGLETON", n).verdict != CONFIRMED or check_claim("CUT-NOT-BIG", n).verdict != CONFIRMED:
            return False, f"cut claims not confirmed at n={n}"
    return True, "articulation set = singletons for n=3..7 (low-link == removal oracle)"


def ac9_products():
    t0 = time.perf_counter()
    C = corona(topo(3), topo(2))
    gc = oracle_min_dominating(C)
    J23 = join(topo(2), topo(3))
    g23 = oracle_min_dominating(J23)
    J33 = join(topo(3), topo(3))
    g33 = oracle_min_dominating(J33)
    cv = check_claim("CORONA-GAMMA", 3, 2)
    j23 = check_claim("JOIN-GAMMA", 2, 3)
    j33 = check_claim("JOIN-GAMMA", 3, 3)
    ws = Workspace()
    G33 = ws.product("join", 3, 3)
    labels = [G33.label(v) for v in range(G33.order)]
    witness = [labels.index(s) for s in j33.evidence["witness"]]
    dt = time.perf_counter() - t0
    ok = (gc == 6 == cv.computed == cv.predicted["structural"]
          and cv.evidence["readings"]["literal"]["verdict"] == REFUTED
          and cv.evidence["readings"]["structural"]["verdict"] == CONFIRMED
          and g23 == 1 and j23.verdict == CONFIRMED
          and g33 == 2 and j33.predicted == 3 and j33.verdict == REFUTED
          and len(witness) == 2 and is_dominating(G33, witness)
          and dt < 30)
    return ok, (f"corona(3,2)={gc} (literal REFUTED, structural CONFIRMED); join(2,3)={g23}; "
                f"join(3,3)={g33} vs predicted {j33.predicted}; {dt:.2f}s (limit 30s)")


def ac10_connectivity():
    for n in range(2, 11):
        G = topo(n)
        if connectivity(G) != (True, 1) or min(G.degrees()) == 0:
            return False, f"n={n} disconnected or has isolated vertex"
    split = connectivity(topo(4).without(mask_of([1]) - 1))
    return split == (False, 2), f"connected, no isolated vertex for n=2..10; G(4)-{{1}} components={split[1]}"


def ac11_determinism():
    cmd = [sys.executable, "-m", "topograph", "verify", "--n-min", "2", "--n-max", "5"]
    t0 = time.perf_counter()
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    dt = time.perf_counter() - t0
    return a == b and len(a) > 0 and dt < 120, f"two runs byte-identical={a == b}, {dt:.2f}s (limit 120s)"


CRITERIA = [
    ("AC1 order and structure", ac1_order_and_structure),
    ("AC2 isomorphism claims", ac2_isomorphism),
    ("AC3 degrees", ac3_degrees),
    ("AC4 clique and pendants", ac4_clique_and_pendants),
    ("AC5 domination", ac5_domination),
    ("AC6 independence", ac6_independence),
    ("AC7 metric invariants", ac7_metric),
    ("AC8 cut vertices", ac8_cut_vertices),
    ("AC9 products", ac9_products),
    ("AC10 connectivity and isolation", ac10_connectivity),
    ("AC11 determinism", ac11_determinism),
]


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for name, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    sys.exit(1 if failed else 0)
