import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specboltz import VHS, VSS, ConfigurationError, CustomKernel, KernelDomainError, parse_kernel
from specboltz.kernels import argon_vss, hard_spheres, kernel_from_params, maxwell_molecules


def test_maxwell_is_constant():
    k = maxwell_molecules()
    assert k(2.0, 0.3) == pytest.approx(1 / (4 * math.pi))
    assert k(0.0, -1.0) == pytest.approx(1 / (4 * math.pi))
    assert k.angle_independent


def test_hard_sphere_linear_in_r():
    k = hard_spheres()
    assert k(3.0, 0.5) == pytest.approx(3 / (4 * math.pi))
    assert k(0.0, 0.5) == 0.0


def test_vss_values():
    k = VSS(gamma=0.38, eta=0.4, b=1 / (4 * math.pi))
    assert not k.angle_independent
    assert k(2.0, 0.0) == pytest.approx(2.0**0.38 / (4 * math.pi))
    assert k(2.0, 1.0) == pytest.approx(2.0**0.38 * 2**0.4 / (4 * math.pi))
    assert k(2.0, -1.0) == 0.0


def test_vss_eta_zero_equals_vhs():
    r = np.linspace(0, 5, 11)
    c = np.linspace(-1, 1, 11)
    assert np.array_equal(VSS(0.38, 0.0)(r, c), VHS(0.38)(r, c))


@given(r=st.floats(0, 50), c=st.floats(-1, 1), g=st.floats(0, 1), e=st.floats(0, 3))
@settings(max_examples=200, deadline=None)
def test_kernels_non_negative(r, c, g, e):
    assert VHS(g)(r, c) >= 0
    assert VSS(g, e)(r, c) >= 0


def test_vectorized_shape():
    k = argon_vss()
    out = k(np.ones((3, 4)), np.zeros((3, 4)))
    assert out.shape == (3, 4)


@pytest.mark.parametrize("r,c", [(-1.0, 0.0), (1.0, 1.5), (1.0, -2.0)])
def test_domain_errors(r, c):
    with pytest.raises(KernelDomainError):
        maxwell_molecules()(r, c)


@pytest.mark.parametrize("ctor", [lambda: VHS(1.5), lambda: VHS(0.5, b=0), lambda: VSS(-0.1, 0.2), lambda: VSS(0.3, -1)])
def test_invalid_parameters(ctor):
    with pytest.raises(ConfigurationError):
        ctor()


def test_custom_kernel():
    k = CustomKernel(lambda r, c: r**2 * (1 + c), angle_independent=False, name="quad")
    assert k(2.0, 0.5) == pytest.approx(6.0)
    assert k.describe() == "quad"
    with pytest.raises(ConfigurationError):
        k.params()


def test_parse_kernel():
    assert parse_kernel("maxwell") == maxwell_molecules()
    assert parse_kernel("hardsphere") == hard_spheres()
    assert parse_kernel("vhs:gamma=0.5,b=0.25") == VHS(0.5, 0.25)
    assert parse_kernel("vss:gamma=0.38,eta=0.4") == argon_vss()
    for bad in ("foo:gamma=1", "vhs:gamma", "vhs:gamma=x", "vhs:gamma=0.5,zeta=1"):
        with pytest.raises(ConfigurationError):
            parse_kernel(bad)


def test_describe_round_trips():
    for k in (maxwell_molecules(), hard_spheres(), argon_vss()):
        assert parse_kernel(k.describe()) == k


def test_params_round_trip():
    for k in (maxwell_molecules(), argon_vss()):
        assert kernel_from_params(k.tag, k.params()) == k
    with pytest.raises(ConfigurationError):
        kernel_from_params(3, (1.0, 0.0, 0.0))
