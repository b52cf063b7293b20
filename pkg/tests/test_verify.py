from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import RANDOMIZED_LIST, SYMBOLIC_LIST
from groupdet.group_algebra import commutator
from groupdet.groups import make_group
from groupdet.verify import (
    CHECKS,
    InapplicableCheckError,
    UnknownCheckError,
    list_checks,
    random_assignment,
    run_all,
    run_check,
)
from groupdet.verify.checks import Checker, RunConfig, SPLIT, _run_claims


def test_spec_examples():
    assert run_check("T6.2.3", make_group("D5"), "symbolic").status == "pass"
    r = run_check("L5.1.1", make_group("Q3"), "symbolic")
    assert r.status == "pass"
    skip = run_check("T6.2.4", make_group("D3"), "randomized")
    assert skip.status == "skipped" and skip.reason == "alpha_3 undefined: m odd"
    nv = run_check("NONVANISH", make_group("D4"), "randomized")
    assert nv.status == "pass"
    assert set(nv.witness) == {"[alpha_1, alpha_3]", "[alpha_1, alpha_4]", "[alpha_2, alpha_4]"}


def test_errors():
    with pytest.raises(UnknownCheckError):
        run_check("L9.9.9", make_group("D4"))
    with pytest.raises(InapplicableCheckError):
        run_check("T3.2.1", make_group("D4"))
    with pytest.raises(InapplicableCheckError):
        run_check("L5.1.1", make_group("C6"))
    with pytest.raises(InapplicableCheckError):
        run_check("TYPO-Q-TABLE", make_group("D4"))


@given(st.sampled_from(["C6", "D4", "Q3"]), st.integers(0, 2**32), st.integers(1, 100))
def test_random_assignment_contract(spec, seed, bound):
    G = make_group(spec)
    a = random_assignment(G, seed, bound)
    assert a == random_assignment(G, seed, bound)
    assert set(a) == set(range(G.order))
    assert all(-bound <= v.to_fraction() <= bound and v.to_fraction().denominator == 1 for v in a.values())


def test_random_assignment_seed_sensitivity():
    G = make_group("D4")
    assert random_assignment(G, 3, 80) != random_assignment(G, 4, 80)
    with pytest.raises(ValueError):
        random_assignment(G, 0, 0)


def test_list_checks_families():
    c6 = {cid: st for cid, st, _ in list_checks(make_group("C6"))}
    assert all(c6[c] == "applicable" for c in ["T3.2.1", "C3.2.2", "T3.1.2", "T2.1.1"])
    assert c6["L5.1.1"] == "inapplicable" and c6["T6.2.13"] == "inapplicable"
    d4 = {cid: st for cid, st, _ in list_checks(make_group("D4"))}
    assert all(d4[c] == "applicable" for c in CHECKS if c.startswith(("L5", "T5", "C5", "L6", "T6")))
    d3 = {cid: (st, why) for cid, st, why in list_checks(make_group("D3"))}
    for c in ["L5.2.2", "L6.1.2", "T6.2.4", "L6.2.5", "L6.2.8", "L6.2.11", "T6.2.13", "NONVANISH"]:
        assert d3[c] == ("skip", "alpha_3 undefined: m odd")
    assert d3["T6.2.3"][0] == "applicable"


def test_coverage_of_numbered_claims():
    expected = {
        "T2.1.1", "T3.1.2", "T3.2.1", "C3.2.2", "L5.1.1", "L5.1.2", "L5.1.3", "L5.1.4", "T5.1.5",
        "L5.2.1", "L5.2.2", "T5.2.3", "C5.2.4", "L6.1.1", "L6.1.2", "L6.2.1", "L6.2.2", "T6.2.3",
        "T6.2.4", "L6.2.5", "L6.2.6", "L6.2.7", "L6.2.8", "L6.2.9", "L6.2.10", "L6.2.11", "T6.2.13",
        "NONVANISH", "PAIRING",
    }
    assert expected <= set(CHECKS)


def _false_claim(ctx):
    return [("alpha_1 and alpha_3 commute", ctx.alpha(1) * ctx.alpha(3), ctx.alpha(3) * ctx.alpha(1))]


@pytest.mark.parametrize("mode", ["symbolic", "randomized"])
def test_false_claim_fails_with_witness(mode):
    G = make_group("D4")
    chk = Checker("FALSE", "", SPLIT, claims=_false_claim)
    r = _run_claims(chk, G, RunConfig(mode, 5, 0, 80, 8))
    assert r.status == "fail" and r.witness["claim"] == "alpha_1 and alpha_3 commute"
    assert "element" in r.witness
    if mode == "randomized":
        assert set(r.witness["assignment"]) == set(G.names())


@pytest.mark.parametrize("spec", SYMBOLIC_LIST)
def test_every_checker_passes_symbolically(spec):
    G = make_group(spec)
    results = run_all(G, mode="symbolic")
    assert [r.check_id for r in results if r.status == "fail"] == []
    for r in results:
        if r.status == "skipped":
            assert r.reason


@pytest.mark.parametrize("spec", RANDOMIZED_LIST)
def test_every_checker_passes_randomized(spec):
    G = make_group(spec)
    results = run_all(G, mode="randomized", trials=20, seed=0)
    assert [r.check_id for r in results if r.status == "fail"] == []
    for r in results:
        if r.status == "pass" and r.trials is not None:
            assert r.trials == 20


@pytest.mark.parametrize("spec", ["D4", "Q2", "Q3"])
def test_closed_form_cancellation(spec):
    # the coefficient formulas of [alpha_1, alpha_3] and [alpha_1, alpha_4] cancel termwise
    assert run_check("CANCEL", make_group(spec), "symbolic").status == "pass"


def test_coset_branch_selection():
    # Q3 takes the i-valued branch, D4/Q2 the real one; both must match the commutator
    for spec in ["Q3", "D4", "Q2"]:
        for cid in ["L6.2.8", "L6.2.11"]:
            assert run_check(cid, make_group(spec), "symbolic").status == "pass"


def test_nonvanish_witness_values_are_nonzero():
    for spec in ["D4", "Q2"]:
        r = run_check("NONVANISH", make_group(spec), seed=5)
        assert r.status == "pass"
        for w in r.witness.values():
            assert w["value"] != "0" and len(w["assignment"]) == make_group(spec).order


def test_cross_commutators_really_nonzero():
    from groupdet.group_algebra import alpha

    G = make_group("Q2")
    assert not commutator(alpha(G, 1), alpha(G, 3)).is_zero()
    assert not commutator(alpha(G, 2), alpha(G, 4)).is_zero()


def test_typo_checks_record_both_readings():
    r = run_check("TYPO-5.2.3", make_group("D3"))
    assert r.status == "pass"
    assert r.details["A_reading"] == {"status": "pass", "mode": "symbolic"}
    assert r.details["x_reading"]["status"] == "fail"
    assert r.details["x_reading"]["counterexample"]["assignment"]
    q = run_check("TYPO-Q-TABLE", make_group("Q3"))
    assert q.status == "pass"
    assert q.details["literal_table"]["phi2"] == {"homomorphism": False, "det_identity": False}


def test_result_json_shape():
    doc = run_check("T6.2.3", make_group("D4"), "randomized", trials=3, seed=2).to_json()
    assert doc["id"] == "T6.2.3" and doc["status"] == "pass" and doc["trials"] == 3 and doc["seed"] == 2
