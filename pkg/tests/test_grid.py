import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_convolution, random_modes, rel_err, sliced_convolution
from specboltz import (
    ConfigurationError,
    DataError,
    DistributionFunction,
    SpectralCoefficients,
    VelocityGrid,
    convolve,
    entropy,
    forward_transform,
    inverse_transform,
    maxwellian,
    moments,
)
from specboltz.grid import ANTIALIAS_FACTOR, excluded_mass_fraction

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_default_domain_matches_table_setup():
    g = VelocityGrid(32, 6.0)
    assert g.L == pytest.approx((3 + math.sqrt(2)) * 6 / 4)
    assert g.L == pytest.approx(6.62, abs=5e-3)
    assert g.R == 2 * g.S
    assert g.dv == pytest.approx(2 * g.L / 32)
    assert g.nodes[0] == -g.L
    assert g.nodes[-1] == pytest.approx(g.L - g.dv)


@pytest.mark.parametrize("N", [0, 2, 5, 7])
def test_rejects_bad_sizes(N):
    with pytest.raises(ConfigurationError):
        VelocityGrid(N, 6.0)


def test_rejects_aliasing_domain():
    with pytest.raises(ConfigurationError, match="anti-aliasing"):
        VelocityGrid(8, 6.0, L=5.0)
    VelocityGrid(8, 6.0, L=ANTIALIAS_FACTOR * 3.0)


def test_non_finite_values_rejected():
    g = VelocityGrid(4, 2.0)
    v = np.zeros(g.shape)
    v[1, 2, 3] = np.nan
    with pytest.raises(DataError):
        DistributionFunction(g, v)


def test_constant_has_only_zero_mode():
    g = VelocityGrid(8, 4.0)
    c = forward_transform(DistributionFunction(g, np.full(g.shape, 2.5)))
    assert c.mode(0, 0, 0) == pytest.approx(2.5)
    rest = c.modes.copy()
    rest[0, 0, 0] = 0
    assert np.max(np.abs(rest)) < 1e-14


def test_cosine_modes():
    g = VelocityGrid(8, 4.0)
    v1 = g.mesh[0]
    c = forward_transform(DistributionFunction(g, np.broadcast_to(np.cos(math.pi * v1 / g.L), g.shape)))
    assert c.mode(1, 0, 0) == pytest.approx(0.5, abs=1e-14)
    assert c.mode(-1, 0, 0) == pytest.approx(0.5, abs=1e-14)
    rest = c.modes.copy()
    rest[1, 0, 0] = rest[-1, 0, 0] = 0
    assert np.max(np.abs(rest)) < 1e-14


def test_maxwellian_zero_mode_against_rectangle_rule():
    g = VelocityGrid(32, 6.0)
    f = maxwellian(1.0, (0, 0, 0), 1.0, g)
    # rectangle-rule quadrature of (2L)^-3 int f, summed node by node
    total = 0.0
    for x in g.nodes:
        for y in g.nodes:
            total += sum(math.exp(-(x * x + y * y + z * z) / 2) for z in g.nodes)
    oracle = total * (2 * math.pi) ** -1.5 * g.dv**3 / (2 * g.L) ** 3
    assert forward_transform(f).mode(0, 0, 0).real == pytest.approx(oracle, rel=1e-12)
    assert oracle == pytest.approx((2 * g.L) ** -3, rel=1e-10)


def test_mode_definition_against_direct_sum():
    g = VelocityGrid(4, 2.0)
    rng = np.random.default_rng(3)
    vals = rng.standard_normal(g.shape)
    c = forward_transform(DistributionFunction(g, vals))
    v1, v2, v3 = g.mesh
    for k in [(0, 0, 0), (1, -2, 1), (-2, -2, -2), (1, 1, 0)]:
        phase = np.exp(-1j * math.pi * (k[0] * v1 + k[1] * v2 + k[2] * v3) / g.L)
        direct = (vals * phase).sum() * g.dv**3 / (2 * g.L) ** 3
        assert c.mode(*k) == pytest.approx(direct, abs=1e-14)


def test_delta_mode_inverts_to_one():
    g = VelocityGrid(8, 4.0)
    m = np.zeros(g.shape, complex)
    m[0, 0, 0] = 1
    f = inverse_transform(SpectralCoefficients(g, m))
    assert np.allclose(f.values, 1.0, atol=1e-15)


@pytest.mark.parametrize("N", [4, 8, 16])
@given(seed=seeds)
@settings(max_examples=20, deadline=None)
def test_round_trip(N, seed):
    g = VelocityGrid(N, 3.0)
    vals = np.random.default_rng(seed).standard_normal(g.shape)
    back = inverse_transform(forward_transform(DistributionFunction(g, vals)))
    assert rel_err(back.values, vals) < 1e-12


@given(seed=seeds)
@settings(max_examples=25, deadline=None)
def test_hermitian_symmetry_except_edges(seed):
    g = VelocityGrid(8, 3.0)
    vals = np.random.default_rng(seed).standard_normal(g.shape)
    c = forward_transform(DistributionFunction(g, vals)).natural()
    inner = c[1:, 1:, 1:]  # drop k_i = -N/2
    assert np.max(np.abs(inner - np.conj(inner[::-1, ::-1, ::-1]))) < 1e-15


@given(seed=seeds)
@settings(max_examples=25, deadline=None)
def test_hermitian_modes_synthesize_real(seed):
    g = VelocityGrid(8, 3.0)
    rng = np.random.default_rng(seed)
    z = np.zeros(g.shape, complex)
    inner = rng.standard_normal((7, 7, 7)) + 1j * rng.standard_normal((7, 7, 7))
    z[1:, 1:, 1:] = 0.5 * (inner + np.conj(inner[::-1, ::-1, ::-1]))
    f = inverse_transform(SpectralCoefficients.from_natural(g, z))
    assert f.imag_residual < 1e-12 * np.max(np.abs(f.values))


def test_convolution_identity_and_index_addition():
    g = VelocityGrid(8, 3.0)
    b = random_modes(g, 0)
    delta = np.zeros(g.shape, complex)
    delta[0, 0, 0] = 1
    out = convolve(SpectralCoefficients(g, delta), b)
    assert np.max(np.abs(out.modes - b.modes)) < 1e-13
    e1 = np.zeros(g.shape, complex)
    e1[1, 0, 0] = 1
    out = convolve(SpectralCoefficients(g, e1), SpectralCoefficients(g, e1)).modes
    assert abs(out[2, 0, 0] - 1) < 1e-14
    out[2, 0, 0] = 0
    assert np.max(np.abs(out)) < 1e-14


def test_sliced_oracle_agrees_with_loop_oracle():
    g = VelocityGrid(4, 3.0)
    a = random_modes(g, 1).natural()
    b = random_modes(g, 2).natural()
    assert rel_err(sliced_convolution(a, b), brute_convolution(a, b)) < 1e-14


@given(seed=seeds)
@settings(max_examples=100, deadline=None)
def test_convolution_matches_brute_force_n4(seed):
    g = VelocityGrid(4, 3.0)
    a, b = random_modes(g, seed), random_modes(g, seed + 1)
    got = convolve(a, b).natural()
    assert rel_err(got, brute_convolution(a.natural(), b.natural())) < 1e-12


@given(seed=seeds)
@settings(max_examples=100, deadline=None)
def test_convolution_matches_brute_force_n8(seed):
    g = VelocityGrid(8, 3.0)
    a, b = random_modes(g, seed), random_modes(g, seed + 1)
    got = convolve(a, b).natural()
    assert rel_err(got, sliced_convolution(a.natural(), b.natural())) < 1e-12


@given(seed=seeds, s=st.floats(-3, 3), t=st.floats(-3, 3))
@settings(max_examples=30, deadline=None)
def test_convolution_bilinear_and_commutative(seed, s, t):
    g = VelocityGrid(8, 3.0)
    a, b, c = (random_modes(g, seed + i) for i in range(3))
    ab = convolve(a, b).modes
    assert np.max(np.abs(ab - convolve(b, a).modes)) < 1e-12 * np.max(np.abs(ab))
    lin = convolve(SpectralCoefficients(g, s * a.modes + t * c.modes), b).modes
    ref = s * ab + t * convolve(c, b).modes
    assert np.max(np.abs(lin - ref)) <= 1e-12 * (np.max(np.abs(ref)) + np.max(np.abs(ab)))


def test_circular_mode_wraps():
    g = VelocityGrid(4, 3.0)
    e = np.zeros(g.shape, complex)
    e[1, 0, 0] = 1  # k = (1, 0, 0); 1 + 1 = 2 wraps to -2
    a = SpectralCoefficients(g, e)
    assert abs(convolve(a, a, mode="circular").mode(-2, 0, 0) - 1) < 1e-14
    assert abs(convolve(a, a).mode(-2, 0, 0)) < 1e-14
    with pytest.raises(ConfigurationError):
        convolve(a, a, mode="other")


def test_convolution_grid_mismatch():
    a = random_modes(VelocityGrid(4, 3.0), 0)
    b = random_modes(VelocityGrid(4, 4.0), 0)
    with pytest.raises(ConfigurationError):
        convolve(a, b)


def test_maxwellian_moments():
    g = VelocityGrid(32, 10.0)
    m = moments(maxwellian(1.0, (0, 0, 0), 1.0, g))
    assert m.rho == pytest.approx(1.0, abs=1e-10)
    assert np.allclose(m.u, 0.0, atol=1e-12)
    assert m.T == pytest.approx(1.0, abs=1e-10)


def test_maxwellian_moment_error_decreases_with_n():
    errs = []
    for N in (8, 16, 32):
        g = VelocityGrid(N, 6.0)
        m = moments(maxwellian(1.0, (0.3, -0.2, 0.1), 1.0, g))
        errs.append(max(abs(m.rho - 1), *np.abs(m.u - (0.3, -0.2, 0.1)), abs(m.T - 1)))
    assert errs[0] > errs[1] > errs[2]


def test_zero_distribution():
    g = VelocityGrid(8, 4.0)
    z = DistributionFunction(g, np.zeros(g.shape))
    m = moments(z)
    assert m.rho == 0 and not m.temperature_defined
    assert np.all(m.P == 0) and np.all(m.q == 0)
    assert entropy(z) == 0.0
    assert excluded_mass_fraction(z) == 0.0


def test_negative_density_flags_temperature():
    g = VelocityGrid(4, 2.0)
    m = moments(DistributionFunction(g, -np.ones(g.shape)))
    assert math.isnan(m.T)


def test_maxwellian_entropy():
    g = VelocityGrid(32, 10.0)
    expected = 1.5 + 1.5 * math.log(2 * math.pi)
    assert entropy(maxwellian(1.0, (0, 0, 0), 1.0, g)) == pytest.approx(expected, rel=1e-10)


def test_entropy_cutoff_excludes_negative_nodes():
    g = VelocityGrid(8, 4.0)
    vals = maxwellian(1.0, (0, 0, 0), 1.0, g).values.copy()
    vals[0, 0, 0] = -1e-3
    f = DistributionFunction(g, vals)
    assert math.isfinite(entropy(f))
    assert excluded_mass_fraction(f) > 0


def test_outside_support_fraction():
    g = VelocityGrid(16, 6.0)
    assert maxwellian(1.0, (0, 0, 0), 0.5, g).outside_support_fraction() < 1e-3
    assert maxwellian(1.0, (0, 0, 0), 4.0, g).outside_support_fraction() > 0.1
