"""Smoke tests for the python bindings against known values."""

import math

import numpy as np
import pytest

import vmkdv


def test_derive_flow_golden():
    assert vmkdv.derive_flow(1) == "-u3 - 3/2*<u0,u0>*u1"
    assert vmkdv.derive_flow(2).startswith("u5 + 5/2*<u0,u0>*u3")
    assert vmkdv.flow_weight(2) == 6


def test_lax_blocks():
    u = vmkdv.lax_v(0)
    assert u[1]["a"] == "1"
    assert u[0]["v2"] == "u0"
    v3 = vmkdv.lax_v(1)
    assert sorted(v3.keys()) == [0, 1, 2, 3]
    assert v3[3]["a"] == "1"


def test_zero_curvature_is_exact():
    assert vmkdv.zero_curvature_is_zero(1)
    assert vmkdv.zero_curvature_is_zero(2)


def test_one_soliton_peak_value():
    x = np.linspace(-5.0, 5.0, 11)
    u = vmkdv.one_soliton(1.0, 0.0, np.array([1.0]), x)
    assert u.shape == (11, 1)
    assert u[5, 0] == pytest.approx(2.0)
    assert abs(u[0, 0]) < 0.03  # exponential tail


def test_soliton_solves_the_flow():
    res = vmkdv.soliton_flow_residual(1.0, 0.0, np.array([1.0]), t3=0.2, n=1)
    assert res < 1e-8


def test_rank1_breather_matches_closed_form():
    assert vmkdv.scalar_breather_closed_form(
        1.0, math.pi / 4, 0.0, 0.0
    ) == pytest.approx(-2.0 * math.sqrt(2.0))
    mu = complex(math.cos(math.pi / 4), math.sin(math.pi / 4))
    c = np.array([1.0 + 0j, 0.0 + 0j, 1j])
    u = vmkdv.rank1_breather(mu, c, np.array([0.0]))
    assert u[0, 0] == pytest.approx(-2.0 * math.sqrt(2.0))


def test_breather_dress_agrees_with_rank1():
    mu = 0.8 + 0.6j
    c = np.array([[1.0 + 0j], [0.0 + 0j], [1j]])
    x = np.linspace(-2.0, 2.0, 9)
    a = vmkdv.breather_dress(mu, c, x, t3=0.2)
    b = vmkdv.rank1_breather(mu, c.ravel(), x, t3=0.2)
    assert np.max(np.abs(a - b)) < 1e-10


def test_euler_oracle_annihilates_derivatives():
    assert vmkdv.euler_is_zero(weight=6, seed=3)


def test_params_validation_raises():
    with pytest.raises(vmkdv.ConfigError):
        vmkdv.one_soliton(1.0, 0.0, np.array([2.0]), np.array([0.0]))
