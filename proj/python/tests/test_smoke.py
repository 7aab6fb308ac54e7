import json
from fractions import Fraction

import pytest

import honeycomb as hc


def test_intro_examples():
    assert hc.decide_sum([3], [4], [7])
    assert not hc.decide_sum([3], [4], [5])
    assert hc.decide_sum([3, 0], [4, 0], [4, 3])
    assert not hc.decide_sum([3, 0], [4, 0], [8, -1])
    assert hc.decide_triple(["3"], ["4"], ["-7"])


def test_rational_inputs_and_outputs():
    assert hc.decide_sum([Fraction(1, 2)], ["1/3"], ["5/6"])
    assert hc.boundary_distance([1, 0], [1, 0], [1, -3]) > 0
    assert hc.boundary_distance([1, 0], [1, 0], [-1, -1]) == 0
    assert isinstance(hc.fiber_volume([4, 2, 0], [3, 1, 0], [-1, -3, -6]), Fraction)


def test_counting_matches_oracle():
    assert hc.tensor_multiplicity([2, 1, 0], [2, 1, 0], [3, 2, 1]) == 2
    assert hc.lr_oracle([2, 1, 0], [2, 1, 0], [3, 2, 1]) == 2
    assert hc.count_integral_triple([2, 1, 0], [2, 1, 0], [-1, -2, -3], threads=2) == 2
    witnesses = hc.enumerate_integral([2, 1, 0], [2, 1, 0], [-1, -2, -3], limit=5)
    assert len(witnesses) == 2
    for h in witnesses:
        assert h.is_integral()
        assert h.boundary() == ([2, 1, 0], [2, 1, 0], [-1, -2, -3])


def test_lift_and_saturation():
    h = hc.largest_lift([2, 1, 0], [2, 1, 0], [-1, -2, -3], seed=4)
    assert h.n == 3
    assert h.in_cone()
    assert all(v >= 0 for v in h.edge_lengths().values())
    assert hc.Honeycomb.from_json(h.to_json()) == h
    assert json.loads(h.to_json())["coords"]["bdy:NW:1"] == "2"
    report = hc.check_saturation([2, 1, 0], [2, 1, 0], [-1, -2, -3])
    assert report["feasible"] and report["agrees"]
    assert report["integral_witness"].is_integral()


def test_horn():
    ineqs = hc.horn_inequalities(2)
    assert [i["text"] for i in ineqs] == ["l1+m1 >= n1", "l1+m2 >= n2", "l2+m1 >= n2"]
    assert len(hc.horn_inequalities(3)) == 12
    assert hc.decide_by_horn([3, 0], [4, 0], [4, 3])
    assert not hc.decide_by_horn([3, 0], [4, 0], [8, -1])


def test_overlay_and_shrink():
    a = hc.one_honeycomb([1, -2, 1])
    b = hc.one_honeycomb([0, 0, 0])
    analysis = hc.analyze_overlay(a, b)
    assert analysis["verdict"] == "ALL_A_CW"
    assert hc.facet_inequality(a, b)["text"] == "l1+m2+n1 >= 0"
    assert hc.shrink(a, b) == b
    assert hc.translated(b, [1, -2, 1]) == a


def test_errors_carry_codes():
    with pytest.raises(hc.HoneycombError) as err:
        hc.decide_sum([0, 1], [1, 0], [1, 0])
    assert err.value.args[0] == "NOT_DECREASING"
    with pytest.raises(hc.HoneycombError) as err:
        hc.tensor_multiplicity(["1/2"], ["1/2"], [1])
    assert err.value.args[0] == "NOT_INTEGRAL"
    with pytest.raises(ValueError):
        hc.fiber_volume([1, 0], [1, 0], [1, -3])


def test_matrices():
    assert hc.eigenvalues([[0, 1], [1, 0]]) == pytest.approx([1, -1], abs=1e-14)
    assert hc.eigenvalues([[2, 1j], [-1j, 2]]) == pytest.approx([3, 1], abs=1e-14)
    m = hc.matrix_with_spectrum([3, 1, 0], seed=9)
    assert hc.eigenvalues(m) == pytest.approx([3, 1, 0], abs=1e-10)
    report = hc.monte_carlo_check([1, 0], [1, 0], trials=200, seed=2, threads=2)
    assert report["trials"] == 200
    assert report["violations"] == []


def test_render_and_api():
    svg = hc.render_svg([hc.one_honeycomb([0, 0, 0])], origin=True)
    assert svg.startswith("<?xml") and 'class="origin"' in svg
    status, kind, body = hc.handle_api("POST", "/api/feasible", body={"lam": ["3"], "mu": ["4"], "nu": ["7"]})
    assert status == 200 and kind == "application/json"
    assert json.loads(body) == {"feasible": True}
    status, _, body = hc.handle_api("GET", "/api/graph", {"n": "3"})
    assert json.loads(body)["counts"]["hexagons"] == 1
    status, _, body = hc.handle_api("POST", "/api/lift", body="nope")
    assert status == 400 and json.loads(body)["code"] == "PARSE_ERROR"
