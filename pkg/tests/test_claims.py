import pytest

from topograph.claims import (
    CONFIRMED,
    NOT_APPLICABLE,
    REFUTED,
    Workspace,
    check_claim,
    get_claim,
    list_claims,
    product_pairs,
    summarize,
    verify_all,
)
from topograph.errors import RangeError, UnknownClaimError
from topograph.oracle import is_dominating

EXPECTED_IDS = [
    "DEF-GRAPH", "ISO-K2", "ISO-CORONA", "CLIQUE-N", "PENDANT-N", "DELTA-MIN", "DELTA-MAX",
    "GAMMA", "BETA-STATED", "BETA-PROOF", "BETA-EXAMPLE", "BETA-EQ-GAMMA", "CONNECTED",
    "ORDER", "NO-ISOLATED", "NULL-SUB", "CORONA-GAMMA", "JOIN-GAMMA", "RAD-DIAM",
    "CUT-SINGLETON", "CUT-NOT-BIG",
]


def test_registry():
    claims = list_claims()
    assert len(claims) == 21
    assert [c.id for c in claims] == EXPECTED_IDS
    assert all(c.anchor and c.location for c in claims)


def test_lookup():
    assert get_claim("GAMMA").location == "Theorem FF8"
    with pytest.raises(UnknownClaimError):
        get_claim("UNKNOWN")


def test_check_claim_examples():
    v = check_claim("GAMMA", 5)
    assert (v.predicted, v.computed, v.verdict) == (5, 5, CONFIRMED)

    v = check_claim("BETA-STATED", 4)
    assert (v.predicted, v.computed, v.verdict) == (10, 7, REFUTED)

    v = check_claim("JOIN-GAMMA", 3, 3)
    assert (v.predicted, v.computed, v.verdict) == (3, 2, REFUTED)
    left, right = v.evidence["witness"]
    assert left.startswith("L:") and right.startswith("R:")
    assert v.evidence["witness_dominates"]


def test_predicted_formulas():
    # statement: sum_{i=floor(n/2)}^{n-1} C(n,i); proof: sum_{i=n}^{2n-3} C(n, ceil((i+1)/2))
    assert [check_claim("BETA-STATED", n).predicted for n in (2, 3, 4, 5)] == [2, 6, 10, 25]
    assert [check_claim("BETA-PROOF", n).predicted for n in (2, 3, 4, 5)] == [0, 3, 8, 20]
    assert [check_claim("DELTA-MAX", n).predicted for n in (2, 3, 4, 5)] == [1, 3, 7, 15]


def test_beta_claims_can_disagree_at_same_n():
    verdicts = {cid: check_claim(cid, 5) for cid in ("BETA-STATED", "BETA-PROOF", "BETA-EXAMPLE")}
    assert verdicts["BETA-STATED"].predicted == 25
    assert verdicts["BETA-STATED"].verdict == REFUTED
    assert verdicts["BETA-EXAMPLE"].verdict == CONFIRMED
    assert {v.computed for v in verdicts.values()} == {15}


def test_not_applicable_gates():
    assert check_claim("RAD-DIAM", 2).verdict == NOT_APPLICABLE
    assert check_claim("BETA-EXAMPLE", 4).verdict == NOT_APPLICABLE
    assert check_claim("ISO-K2", 3).verdict == NOT_APPLICABLE


def test_parameter_validation():
    with pytest.raises(ValueError):
        check_claim("JOIN-GAMMA", 3)
    with pytest.raises(ValueError):
        check_claim("GAMMA", 3, 3)
    with pytest.raises(RangeError):
        check_claim("GAMMA", 1)
    with pytest.raises(RangeError):
        verify_all(3, 2)


def test_corona_readings():
    v = check_claim("CORONA-GAMMA", 3, 2)
    assert v.computed == 6
    assert v.predicted == {"literal": 3, "structural": 6}
    readings = v.evidence["readings"]
    assert readings["literal"]["verdict"] == REFUTED
    assert readings["structural"]["verdict"] == CONFIRMED
    assert v.verdict == CONFIRMED


def test_verify_range_2_to_4():
    vs = verify_all(2, 4)
    got = {(v.claim, v.params): v.verdict for v in vs}
    confirmed = [("ISO-K2", (2,)), ("ISO-CORONA", (3,)), ("BETA-EQ-GAMMA", (3,))]
    for n in (2, 3, 4):
        confirmed += [(c, (n,)) for c in ("CLIQUE-N", "PENDANT-N", "DELTA-MIN", "DELTA-MAX",
                                          "GAMMA", "ORDER", "CONNECTED", "NO-ISOLATED")]
    for n in (3, 4):
        confirmed += [(c, (n,)) for c in ("RAD-DIAM", "CUT-SINGLETON", "CUT-NOT-BIG", "NULL-SUB")]
    for key in confirmed:
        assert got[key] == CONFIRMED, key
    assert got[("BETA-STATED", (4,))] == REFUTED


def test_verify_range_5_and_2():
    five = {(v.claim, v.params): v for v in verify_all(5, 5)}
    assert five[("BETA-EXAMPLE", (5,))].computed == 15
    assert five[("BETA-EXAMPLE", (5,))].verdict == CONFIRMED
    two = {(v.claim, v.params): v for v in verify_all(2, 2)}
    assert two[("RAD-DIAM", (2,))].verdict == NOT_APPLICABLE


def test_small_n_refutations_carry_certificates():
    null_sub = check_claim("NULL-SUB", 2)
    assert null_sub.verdict == REFUTED
    assert null_sub.evidence["edge"] == ["{1}", "{2}"]
    eq = check_claim("BETA-EQ-GAMMA", 2)
    assert eq.verdict == REFUTED
    assert eq.evidence["beta"] == eq.evidence["gamma"] == 1


def test_refuted_certificates_revalidate():
    ws = Workspace()
    for v in verify_all(2, 4):
        if v.verdict != REFUTED:
            continue
        if v.claim == "JOIN-GAMMA":
            G = ws.product("join", *v.params)
            labels = [G.label(i) for i in range(G.order)]
            S = [labels.index(s) for s in v.evidence["witness"]]
            assert len(S) == v.computed and is_dominating(G, S)
        elif v.claim.startswith("BETA-"):
            n = v.params[0]
            G = ws.topo(n)
            labels = list(G.labels)
            if v.claim == "BETA-EQ-GAMMA":
                S = [labels.index(s) for s in v.evidence["independent_set"]]
            else:
                S = [labels.index(s) for s in v.evidence["witness"]]
                assert len(S) == v.computed
            assert not any(G.adjacent(a, b) for a in S for b in S)


def test_verify_is_reproducible():
    a, b = verify_all(2, 5), verify_all(2, 5)
    assert [(v.claim, v.params, v.predicted, v.computed, v.verdict) for v in a] == \
           [(v.claim, v.params, v.predicted, v.computed, v.verdict) for v in b]


def test_verify_ordering_and_summary():
    vs = verify_all(2, 4)
    pos = {cid: i for i, cid in enumerate(EXPECTED_IDS)}
    keys = [(pos[v.claim], v.params) for v in vs]
    assert keys == sorted(keys)
    counts = summarize(vs)
    assert sum(counts.values()) == len(vs)
    assert counts["INEXACT"] == 0


def test_product_pairs_respect_oracle_cap():
    pairs = product_pairs(2, 5)
    assert ("corona", 3, 2) in pairs and ("corona", 3, 3) not in pairs
    assert ("join", 3, 3) in pairs and ("join", 4, 4) not in pairs


def test_join_small_side_case():
    v = check_claim("JOIN-GAMMA", 2, 3)
    assert (v.predicted, v.computed, v.verdict) == (1, 1, CONFIRMED)


def test_larger_n_without_oracle():
    for cid in ("CLIQUE-N", "GAMMA", "CUT-SINGLETON", "CUT-NOT-BIG", "RAD-DIAM"):
        assert check_claim(cid, 8).verdict == CONFIRMED, cid
    assert check_claim("CLIQUE-N", 8).evidence["source"] == "solver"
    assert check_claim("CLIQUE-N", 4).evidence["source"] == "solver+oracle"
