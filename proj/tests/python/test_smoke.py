import json

import pytest

import torus_cobordism as tc


def test_link_basics():
    t = tc.TorusLink(8, 5)
    assert (t.p, t.q) == (5, 8)
    assert t.chi() == -27
    assert t.is_knot()
    assert t.genus4() == "14"
    with pytest.raises(Exception):
        tc.TorusLink(0, 3)


def test_signatures():
    assert tc.signature_at(2, 3, "1/2") == -2
    assert tc.signature_at(3, 4, "1/2") == -6
    assert tc.classical_signature(4, 5) == -8
    assert tc.glm_signature(2, 13) == -12
    assert tc.sigma_chi_limit(3) == "2/3"
    assert tc.slope_sequence(3) == ["-4/3", "0"]


def test_profile_json():
    doc = json.loads(tc.profile_json(2, 3))
    assert [b["theta_numerator"] for b in doc["breakpoints"]] == ["1", "5"]
    assert doc["breakpoints"][0]["value_after"] == -2


def test_plans():
    plan = json.loads(tc.best_upper_json(5, 8, 4, 11, budget=32))
    assert plan["total_cost"] == 4
    swap = json.loads(tc.prop1_plan_json(4, 2, 5))
    assert swap["total_cost"] == 1
    assert tc.rectangle_cost(3, 2, 3, 4) == 4


def test_bounds_report():
    rep = json.loads(tc.report_json(5, 8, 4, 11))
    assert rep["delta_chi"] == 2
    assert rep["upper"] == 4
    assert tc.tau(6, 7, 3, 14) == 4


def test_stable_genus():
    from fractions import Fraction

    assert tc.gst(5, 8) == "14"
    lower, upper = tc.norm_bounds(5, 8, 4, 11, "1", "-1")
    assert Fraction(lower) <= Fraction(upper) <= 2
    rows = json.loads(tc.ball_json(5, 8, 4, 11, resolution=8))
    assert len(rows) == 8


def test_oracle():
    m = tc.seifert_matrix(2, 3)
    assert m == [[-1, 1], [0, -1]]
    assert tc.oracle_signature(2, 3, "1/2") == -2
    with pytest.raises(tc.EvaluationRejected):
        tc.oracle_signature(2, 3, "1/6")


def test_verify():
    assert len(tc.list_claims()) == 15
    res = tc.run_claim("glm-odd", max=20)
    assert res["violations"] == []
    assert res["checked"] > 0
