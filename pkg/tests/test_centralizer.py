from fractions import Fraction
from math import factorial

import pytest

from spectral_pairs.centralizer import (
    action_matrix,
    build_ansatz_system,
    find_commuting_operator,
    gauge_normalize,
    hyperelliptic_pair,
    series_kernel_basis,
    spectral_curve,
)
from spectral_pairs.curves import SpectralCurve, charpoly_w, squarefree_normalize
from spectral_pairs.errors import (
    CommutingOperatorNotFound,
    SpectralPairsError,
    TruncationError,
)
from spectral_pairs.families import CUBIC, FamilySpec, make_L4, make_schrodinger
from spectral_pairs.operators import DiffOp, multipoly_x_split
from spectral_pairs.rings import PolyRing

XRING = PolyRing(("x",))
PURE_CUBIC = FamilySpec(CUBIC, 1, alphas=(0, 0, 0, 1))


@pytest.fixture(scope="module")
def x3_l4():
    return make_L4(PURE_CUBIC)


@pytest.fixture(scope="module")
def x3_m(x3_l4):
    return find_commuting_operator(x3_l4, 6)


# -- the linear ansatz ---------------------------------------------------------------


def test_ansatz_kernel_contains_known_solutions(x3_l4):
    system = build_ansatz_system(x3_l4, 6, 9)
    basis = system.nullspace()
    assert len(basis) >= 2  # at least {1, L4} plus the genuine order-6 partner

    def as_vector(op):
        col_index = {c: k for k, c in enumerate(system.columns)}
        vec = [Fraction(0)] * len(system.columns)
        for i, coeff in enumerate(op.coeffs):
            for e, c in coeff.terms.items():
                vec[col_index[(i, e[0])]] = c
        return vec

    for op in (DiffOp.identity(XRING), x3_l4):
        vec = as_vector(op)
        for row in system.rows:
            assert sum(vec[k] * c for k, c in row.items()) == 0


def test_partner_commutes_and_is_monic_order_6(x3_l4, x3_m):
    assert x3_m.order == 6
    assert x3_m.is_monic()
    assert x3_l4.commutator(x3_m).is_zero()


def test_gauge_normalization_is_idempotent(x3_l4, x3_m):
    assert gauge_normalize(x3_m, x3_l4, 1) == x3_m
    # the constant term of the d^0 and d^4 coefficients vanishes
    assert x3_m.coeff(0).constant_term() == 0
    assert x3_m.coeff(4).constant_term() == 0


def test_square_potential_partner_is_power_of_order_2_factor():
    spec = FamilySpec(CUBIC, 1, alphas=(1, 2, 0, 0))  # a3 = 0: L4 = L2^2
    l2 = make_schrodinger(spec)
    l4 = make_L4(spec)
    assert l4 == l2 * l2
    m = find_commuting_operator(l4, 6)
    assert m.order == 6
    assert l4.commutator(m).is_zero()
    # everything commuting with L2^2 here is a polynomial in L2 itself
    assert l2.commutator(m).is_zero()
    assert l2.commutator(l2 * l2 * l2).is_zero()


def test_constant_ansatz_finds_nothing(x3_l4):
    with pytest.raises(CommutingOperatorNotFound):
        find_commuting_operator(x3_l4, 6, degree_bound=0)


def test_parameterized_input_rejected():
    l4 = make_L4(FamilySpec(CUBIC, 2))
    with pytest.raises(SpectralPairsError):
        find_commuting_operator(l4, 10, degree_bound=3)


# -- formal kernel series --------------------------------------------------------


def test_kernel_basis_of_pure_d4():
    basis = series_kernel_basis(DiffOp.d(XRING, 4), 8)
    zring = basis[0].ring
    z = zring.var("z")
    psi0 = basis[0]
    assert psi0.coeffs[0] == zring.one
    assert psi0.coeffs[4] == z * Fraction(1, 24)
    assert psi0.coeffs[8] == z * z * Fraction(1, 40320)
    for j, psi in enumerate(basis):
        lead = [c for c in psi.coeffs[:4]]
        expected = [zring.zero] * 4
        expected[j] = zring.const(Fraction(1, factorial(j)))
        assert lead == expected


def test_kernel_basis_satisfies_the_equation(x3_l4):
    trunc = 16
    basis = series_kernel_basis(x3_l4, trunc)
    zring = basis[0].ring
    z = zring.var("z")
    split = multipoly_x_split(zring)
    for psi in basis:
        image = x3_l4.apply_to_series(psi, split)
        for k in range(trunc - 4):
            assert image.coeffs[k] == z * psi.coeffs[k]


def test_kernel_basis_truncation_floor(x3_l4):
    with pytest.raises(TruncationError):
        series_kernel_basis(x3_l4, 7)


# -- action matrices and curves ---------------------------------------------------


def test_identity_acts_as_identity(x3_l4):
    basis = series_kernel_basis(x3_l4, 16)
    mat = action_matrix(DiffOp.identity(XRING), basis)
    for i in range(4):
        for j in range(4):
            assert mat[i][j] == ([Fraction(1)] if i == j else [])


def test_l4_acts_as_z(x3_l4):
    basis = series_kernel_basis(x3_l4, 16)
    mat = action_matrix(x3_l4, basis)
    for i in range(4):
        for j in range(4):
            assert mat[i][j] == ([Fraction(0), Fraction(1)] if i == j else [])


def test_action_matrix_stable_under_truncation(x3_l4, x3_m):
    mats = [
        action_matrix(x3_m, series_kernel_basis(x3_l4, n))
        for n in (18, 26, 34)
    ]
    assert mats[0] == mats[1] == mats[2]


def test_degenerate_curve_of_l4_with_itself(x3_l4):
    curve = spectral_curve(x3_l4, x3_l4)
    assert curve == SpectralCurve({(0, 1): 1, (1, 0): -1})  # w - z
    assert curve.eval_at_operators(x3_l4, x3_l4).is_zero()


def test_spectral_curve_rejects_non_commuting(x3_l4):
    with pytest.raises(SpectralPairsError):
        spectral_curve(x3_l4, DiffOp.d(XRING))


def test_raw_characteristic_polynomial_is_a_perfect_square(x3_l4, x3_m):
    basis = series_kernel_basis(x3_l4, 18)
    raw = charpoly_w(action_matrix(x3_m, basis))
    sqf = squarefree_normalize(raw)
    assert raw == sqf * sqf


def test_hyperelliptic_curve_of_first_instance(x3_l4, x3_m):
    m2, curve = hyperelliptic_pair(x3_l4, x3_m)
    assert curve == SpectralCurve({(0, 2): 1, (3, 0): -1})  # w^2 - z^3
    assert curve.eval_at_operators(x3_l4, m2).is_zero()
    assert not any(curve.w_slice(1))
