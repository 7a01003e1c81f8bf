"""Smoke tests for the Python module: the main operations end to end."""

import math
import os

import pytest

import wabl

CONFIG_DIR = os.environ.get("WABL_CONFIG_DIR", "configs")


def test_membership_and_level_form():
    mf = wabl.PiecewiseLinearMF([(200, 0), (400, 1), (600, 0)], (0, 1000))
    assert mf.membership(300) == pytest.approx(0.5)
    rep = wabl.to_level_rep(mf)
    assert rep.left(0.0) == 200
    assert rep.right(0.0) == 600
    assert rep.left(1.0) == rep.right(1.0) == 400
    assert rep.membership(300) == pytest.approx(0.5)


def test_wabl_values_and_quadrature():
    mf = wabl.triangular_mf(200, 400, 600, (0, 1000))
    rep = wabl.to_level_rep(mf)
    params = wabl.WablParams.symmetric(2.0)
    assert wabl.wabl_analytic(rep, params) == pytest.approx(400.0, abs=1e-9)
    assert wabl.wabl_quadrature(rep, params, 10000) == pytest.approx(400.0, abs=1e-6)
    assert wabl.centroid(mf) == pytest.approx(400.0)
    assert wabl.median_of_maximum(mf) == pytest.approx(400.0)


def test_conditioner_worked_example():
    rb = wabl.build_conditioner()
    degrees = wabl.firing_degrees(rb, {"temperature": 22.0})
    assert degrees == [0.0, 0.8, 0.2]

    result = wabl.infer(rb, {"temperature": 22.0}, wabl.WablParams.symmetric(2.0))
    assert result.crisp_output == pytest.approx(1420.0 / 3.0, abs=1e-9)
    assert result.any_rule_fired

    terms = dict(wabl.defuzzify_terms(rb, wabl.WablParams.symmetric(2.0)))
    assert terms["middle"] == pytest.approx(400.0)
    assert terms["higher"] == pytest.approx(2300.0 / 3.0)


def test_response_curve_monotone():
    rb = wabl.build_conditioner()
    curve = wabl.response_curve(
        rb, wabl.conditioner_default_params(), wabl.uniform_grid(0, 60, 120)
    )
    values = [s.v for s in curve.samples]
    assert values == sorted(values)
    assert values[0] == pytest.approx(400.0 / 3.0, abs=1e-9)
    assert values[-1] == pytest.approx(2300.0 / 3.0, abs=1e-9)


def test_simulation_comparison():
    engine = wabl.InferenceEngine(
        wabl.build_conditioner(), wabl.conditioner_default_params()
    )
    cfg = wabl.load_sim_config(os.path.join(CONFIG_DIR, "sim_default.json"))
    fuzzy = wabl.run_fuzzy(cfg, engine)
    thermostat = wabl.run_thermostat(cfg)
    mf = wabl.oscillation_metric(fuzzy, 60.0)
    mt = wabl.oscillation_metric(thermostat, 60.0)
    assert mf.peak_to_peak < 0.05
    assert mt.peak_to_peak >= 2.0
    assert mf.peak_to_peak < mt.peak_to_peak


def test_document_parsing_and_errors():
    doc = wabl.load_controller(os.path.join(CONFIG_DIR, "conditioner.json"))
    assert doc.params.m == 2.0
    engine = wabl.InferenceEngine(doc.rule_base, doc.params, doc.normalize)
    assert engine.crisp(22.0) == pytest.approx(1420.0 / 3.0, abs=1e-9)

    with pytest.raises(ValueError):
        wabl.parse_controller('{"version": 1, "bogus": true}')

    with pytest.raises(ValueError):
        wabl.PiecewiseLinearMF([(0, 0), (10, 0.5)], (0, 10))  # not normal

    rb = wabl.build_conditioner()
    with pytest.raises(ValueError):
        wabl.firing_degrees(rb, {"temperature": 99.0})  # outside the universe
    with pytest.raises(KeyError):
        rb.output.term("turbo")


def test_weight_density_edge_cases():
    params = wabl.WablParams.symmetric(0.5)
    with pytest.raises(ValueError):
        wabl.weight_density(params, 0.0)  # unbounded at 0 for m < 1
    assert wabl.weight_density(wabl.WablParams.symmetric(1.0), 0.3) == 1.0
    with pytest.raises(ValueError):
        wabl.WablParams(0.7, 0.7, 2.0)
