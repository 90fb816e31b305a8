"""Smoke tests for the Python bindings."""

import json

import numpy as np
import pytest

import tracewitness as tw


def diag(*entries):
    return np.diag(np.asarray(entries, dtype=complex))


def test_spectral_geomean_commuting():
    got = tw.spectral_geomean(diag(4, 1), np.eye(2, dtype=complex))
    assert np.allclose(got, diag(2, 1), atol=1e-12)


def test_metric_equals_spectral_for_commuting_pairs():
    a, b = diag(3, 1), diag(2, 5)
    assert np.allclose(tw.metric_geomean(a, b), tw.spectral_geomean(a, b), atol=1e-10)


def test_riccati_property():
    a = tw.random_pd(3, seed=5)
    b = tw.random_pd(3, seed=6)
    x = tw.riccati_solution(a, b)
    assert np.linalg.norm(x @ a @ x - b) <= 1e-7 * (1 + np.linalg.norm(b))


def test_eigenvalue_identity():
    a = tw.random_pd(4, seed=1)
    b = tw.random_pd(4, seed=2)
    got = np.sort(np.linalg.eigvalsh(tw.spectral_geomean(a, b)))
    expected = np.sqrt(np.sort(np.linalg.eigvals(a @ b).real))
    assert np.allclose(got, expected, rtol=1e-8)


def test_hermitize_rejects_asymmetric():
    with pytest.raises(tw.TracewitnessError):
        tw.hermitize(np.array([[0, 1], [0, 0]], dtype=complex))


def test_fidelity_bounds():
    rho = tw.random_density(3, seed=11)
    sigma = tw.random_density(3, seed=12)
    f = tw.fidelity(rho, sigma)
    assert 0.0 <= f <= 1.0 + 1e-10
    assert np.trace(rho @ sigma).real <= f + 1e-9
    assert tw.fidelity(rho, rho) == pytest.approx(1.0, abs=1e-9)


def test_witnesses_fire_for_non_scalar_functionals():
    s = diag(2, 1)
    for search in (tw.bures_witness, tw.sgm_cs_witness, tw.amean_witness):
        report = search(s)
        assert report.violated
        assert report.margin > 0
        # replay from the stored matrices through the production path
        lhs, rhs, margin = tw.check_inequality(report.inequality, report.s,
                                               report.a, report.b)
        assert margin == pytest.approx(report.margin, rel=1e-9)


def test_witnesses_quiet_for_scalar_functionals():
    s = 1.3 * np.eye(3, dtype=complex)
    for search in (tw.bures_witness, tw.sgm_cs_witness, tw.amean_witness):
        assert not search(s).violated


def test_sgm_square_witness_slope():
    report = tw.sgm_square_witness(diag(0.75, 0.25))
    assert report.violated
    assert report.extras["slope"] == pytest.approx(0.125, rel=0.1)
    assert not tw.sgm_square_witness(diag(0.5, 0.5)).violated


def test_quad_square_witness_modes():
    rank_one = tw.quad_square_witness(diag(1, 0), mode="density")
    assert rank_one.violated
    assert rank_one.lhs == pytest.approx(1.25)
    assert rank_one.rhs == pytest.approx(1.0)
    identity = tw.quad_square_witness(np.eye(2, dtype=complex), mode="trace-n",
                                      sample_count=200, seed=4)
    assert not identity.violated


def test_traciality_verdict():
    verdict = tw.classify_traciality(3.0 * np.eye(4, dtype=complex))
    assert verdict.is_scalar
    assert verdict.scalar_c == pytest.approx(3.0)
    assert not tw.classify_traciality(diag(1, 2)).is_scalar


def test_report_json_is_replayable():
    report = tw.bures_witness(diag(2, 1))
    payload = json.loads(report.to_json())
    assert payload["inequality"] == "bures-am"
    assert payload["violated"] is True
    assert float(payload["margin"]) == pytest.approx(report.margin, rel=1e-14)


def test_suite_runs_and_is_deterministic():
    first = tw.run_suite(dim=2, count=25, seed=9)
    second = tw.run_suite(dim=2, count=25, seed=9)
    assert first.passed
    assert first.to_json() == second.to_json()
    names = [c.name for c in first.checks]
    assert "means/eigenvalue_identity" in names
    assert "witnesses/completeness_nonscalar" in names


def test_family_closed_forms():
    fam = tw.sgm_square_family(0.1)
    assert np.allclose(fam["x_sqrt"] @ fam["x_sqrt"], fam["x"], atol=1e-12)
    assert np.allclose(fam["x"] @ fam["a"] @ fam["x"], fam["b"], atol=1e-12)


def test_slope_estimate():
    grid = [1e-2, 1e-3, 1e-4]
    assert tw.slope_estimate(grid, [3 * x for x in grid]) == pytest.approx(3.0)
