import math

import numpy as np
import pytest

import geodisc


def test_radial_disc_of_unit_ball():
    disc = geodisc.ball_geodesic(np.array([0, 0], dtype=complex), np.array([1, 0], dtype=complex), modes=8, grid=32)
    expected = np.zeros((2, 9), dtype=complex)
    expected[0, 1] = 1.0
    assert np.abs(disc.coeffs - expected).max() < 1e-14
    assert disc.attachment_residual() < 1e-14


def test_hilbert_conjugate_of_cosine_is_sine_shifted():
    n = 64
    theta = 2 * math.pi * np.arange(n) / n
    conj = np.array(geodisc.hilbert_conjugate(np.cos(theta)))
    assert np.abs(conj - np.sin(theta)).max() < 1e-12


def test_ball_distance_matches_closed_form():
    ball = geodisc.domain({"kind": "ball", "dimension": 2})
    z = np.array([0, 0], dtype=complex)
    w = np.array([0.5, 0], dtype=complex)
    assert abs(geodisc.kobayashi_distance(ball, z, w) - math.atanh(0.5)) < 1e-8


def test_precondition_errors_surface_as_exceptions():
    ball = geodisc.domain('{"kind": "ball"}')
    with pytest.raises(geodisc.PreconditionError):
        geodisc.geodesic_disc(ball, np.array([2, 0], dtype=complex), np.array([1, 0], dtype=complex))


def test_concentric_tangency_locus():
    outer = geodisc.domain({"kind": "ball", "dimension": 2})
    inner = geodisc.domain({"kind": "ball", "radius": 0.5})
    a, r2 = 0.8, 0.5
    for w in geodisc.tangency_locus(outer, inner, np.array([a, 0], dtype=complex), steps=16):
        assert abs(w[0] - r2**2 / a) < 1e-8
        assert abs(abs(w[1]) - r2 * math.sqrt(1 - r2**2 / a**2)) < 1e-8


def test_counterexample_dichotomy():
    report = geodisc.counterexample(discs=8, grid=512)
    assert report["max_morera"] <= 1e-10
    assert report["min_defect"] >= 0.01
    assert report["control"]["max_morera"] >= 1e-3
