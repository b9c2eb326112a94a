import math
from fractions import Fraction

import numpy as np
import pytest

from spectral_pairs.errors import DegenerateSampleError, SpectralPairsError, UnsupportedDegreeError
from spectral_pairs.families import CUBIC, EXPONENTIAL, FamilySpec, char_poly_z
from spectral_pairs.numeric import (
    bessel_change_check,
    eigen_residual,
    fd_derivative,
    fd_weights,
    integrate_kernel,
    ls_derivative,
    ls_weights,
    numeric_roots,
    residual_profile,
)
from spectral_pairs.rings import CharPoly, PolyRing, rational_roots

EMPTY = PolyRing(())


# -- integration ---------------------------------------------------------------------


def test_zero_potential_integrates_to_linear():
    spec = FamilySpec(CUBIC, 1, alphas=(0, 0, 0, 0))
    grid = integrate_kernel(spec, shifted=False, init=(0.0, 1.0), n_points=201)
    assert np.max(np.abs(grid.phi - grid.x)) < 1e-12
    assert np.max(np.abs(grid.dphi - 1.0)) < 1e-12


def test_constant_potential_integrates_to_sine():
    spec = FamilySpec(CUBIC, 1, alphas=(1, 0, 0, 0))
    grid = integrate_kernel(
        spec, shifted=False, init=(0.0, 1.0), interval=(0.0, math.pi / 2),
        n_points=101,
    )
    assert abs(grid.phi[-1] - 1.0) < 1e-9
    assert np.max(np.abs(grid.phi - np.sin(grid.x))) < 1e-9


def _taylor_oracle(xs, n_terms=60):
    # phi'' = -x^3 phi, phi(0) = 1, phi'(0) = 0, solved exactly term by term
    c = [Fraction(0)] * n_terms
    c[0] = Fraction(1)
    for k in range(n_terms - 2):
        if k >= 3:
            c[k + 2] = -c[k - 3] / ((k + 2) * (k + 1))
    vals = []
    for x in xs:
        total = Fraction(0)
        xf = Fraction(x).limit_denominator(10 ** 12)
        for coeff in reversed(c):
            total = total * xf + coeff
        vals.append(float(total))
    return np.array(vals)


def test_cubic_potential_matches_taylor_series():
    spec = FamilySpec(CUBIC, 1, alphas=(0, 0, 0, 1))
    grid = integrate_kernel(spec, shifted=False, init=(1.0, 0.0), n_points=101)
    oracle = _taylor_oracle(np.round(grid.x, 12))
    assert np.max(np.abs(grid.phi - oracle)) < 1e-9


def test_blow_up_truncates_with_diagnostic():
    spec = FamilySpec(CUBIC, 2, alphas=(-10000, 0, 0, 1))
    grid = integrate_kernel(spec, shifted=False, interval=(0.0, 4.0), n_points=101)
    assert "diagnostic" in grid.meta
    assert grid.x[-1] < 4.0
    assert np.all(np.isfinite(grid.phi))


def test_integration_input_validation():
    spec = FamilySpec(CUBIC, 2, alphas=(0, 0, 0, 1))
    with pytest.raises(ValueError):
        integrate_kernel(spec, shifted=False, tol=0.0)
    with pytest.raises(SpectralPairsError):
        integrate_kernel(FamilySpec(CUBIC, 2), shifted=False)


# -- finite-difference stencils -------------------------------------------------------


def test_classic_central_weights():
    assert np.allclose(fd_weights(1, [-1, 0, 1]), [-0.5, 0.0, 0.5])
    assert np.allclose(fd_weights(2, [-1, 0, 1]), [1.0, -2.0, 1.0])
    assert np.allclose(fd_weights(4, [-2, -1, 0, 1, 2]), [1.0, -4.0, 6.0, -4.0, 1.0])


def test_fd_weights_need_enough_points():
    with pytest.raises(ValueError):
        fd_weights(3, [-1, 0, 1])


def test_fd_derivative_exact_on_polynomials():
    xs = np.linspace(0.0, 1.0, 21)
    h = xs[1] - xs[0]
    vals = (xs ** 6).astype(complex)
    d4 = fd_derivative(vals, h, 4)
    core = ~np.isnan(d4.real)
    assert np.max(np.abs(d4[core] - 360.0 * xs[core] ** 2)) < 1e-8
    assert np.all(np.isnan(d4[:5].real)) and np.all(np.isnan(d4[-5:].real))


@pytest.mark.parametrize("half_width,degree", [(6, 12), (20, 12), (100, 14)])
def test_ls_weights_reproduce_polynomial_derivatives(half_width, degree):
    h = 0.01
    w = ls_weights(4, half_width, degree, h)
    j = (np.arange(-half_width, half_width + 1) * h)
    for k in range(degree + 1):
        moment = float(np.sum(w * j ** k))
        expected = math.factorial(4) if k == 4 else 0.0
        scale = max(1.0, abs(np.sum(np.abs(w * j ** k))))
        assert abs(moment - expected) < 1e-6 * scale


def test_ls_weights_validation():
    with pytest.raises(ValueError):
        ls_weights(4, 10, 3, 0.01)  # degree below the derivative order
    with pytest.raises(ValueError):
        ls_weights(2, 2, 6, 0.01)  # window too narrow for the degree


def test_ls_derivative_exact_on_polynomials():
    xs = np.linspace(-1.0, 1.0, 401)
    h = xs[1] - xs[0]
    vals = (xs ** 8 - 3 * xs ** 5).astype(complex)
    d2 = ls_derivative(vals, h, 2, half_width=60, degree=12)
    core = ~np.isnan(d2.real)
    oracle = 56 * xs ** 6 - 60 * xs ** 3
    assert np.max(np.abs(d2[core] - oracle[core])) < 1e-6


# -- eigenvalue roots -----------------------------------------------------------------


def test_numeric_roots_match_rational_roots():
    chi = CharPoly(EMPTY, [0, 4, EMPTY.one])  # z^2 + 4z
    got = numeric_roots(chi)
    want = rational_roots(chi)
    assert len(got) == len(want)
    for g_root, w_root in zip(got, sorted(want)):
        assert abs(g_root - complex(w_root)) < 1e-10


def test_numeric_roots_complex_pair():
    chi = CharPoly(EMPTY, [12, 0, EMPTY.one])  # z^2 + 12
    got = numeric_roots(chi)
    want = [-2j * math.sqrt(3), 2j * math.sqrt(3)]
    for g_root, w_root in zip(got, want):
        assert abs(g_root - w_root) < 1e-10


def test_numeric_roots_degree_cap():
    with pytest.raises(UnsupportedDegreeError):
        numeric_roots(CharPoly(EMPTY, [1, 0, 0, 0, EMPTY.one]))


def test_numeric_roots_of_family_chi():
    spec = FamilySpec(CUBIC, 2, alphas=(0, 1, 1, 1))
    chi = char_poly_z(spec)
    for root in numeric_roots(chi):
        coeffs = [float(c) for c in chi.rational_coeffs()]
        value = sum(c * root ** k for k, c in enumerate(coeffs))
        assert abs(value) < 1e-9


# -- discretized eigen-identity --------------------------------------------------------


@pytest.fixture(scope="module")
def x3_grid():
    spec = FamilySpec(CUBIC, 2, alphas=(0, 0, 0, 1))
    return spec, integrate_kernel(spec, shifted=False, init=(1.0, 0.3), n_points=1001)


def test_eigen_residual_small_for_true_identity(x3_grid):
    spec, grid = x3_grid
    assert eigen_residual(spec, 0.0, grid) < 1e-6


def test_eigen_residual_detects_wrong_eigenvalue(x3_grid):
    spec, grid = x3_grid
    assert eigen_residual(spec, 5.0, grid) > 1e-2


def test_residual_profile_shape(x3_grid):
    spec, grid = x3_grid
    psi, profile = residual_profile(spec, 0.0, grid)
    assert len(psi) == len(grid.x) and len(profile) == len(grid.x)
    assert np.isnan(profile[0]) and np.isnan(profile[-1])
    # pointwise minimum of the stencil profiles: small wherever defined
    assert np.nanmax(profile) < 1e-6


def test_degenerate_multiplier_detected():
    spec = FamilySpec(CUBIC, 2, alphas=(1, 1, 0, 0))
    grid = integrate_kernel(spec, shifted=False, n_points=1001)
    with pytest.raises(DegenerateSampleError):
        eigen_residual(spec, 0.0, grid)  # p(x) = 0 at this root


# -- the change of variables to Bessel form --------------------------------------------


def test_bessel_form_residual_default():
    assert bessel_change_check(0, 1) < 1e-5


def test_bessel_form_input_validation():
    with pytest.raises(ValueError):
        bessel_change_check(0, 0)
    with pytest.raises(ValueError):
        bessel_change_check(0, 1, y_interval=(-1.0, 5.0))
