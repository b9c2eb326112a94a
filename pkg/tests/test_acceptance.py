"""Acceptance gate: every headline capability, at its stated runtime budget.

Each test runs one self-contained end-to-end criterion from
:mod:`spectral_pairs.suite` and asserts both the verdict and, where a budget
is part of the requirement, the wall-clock time.
"""

from spectral_pairs import suite


def _run(check, budget_s=None):
    result = check()
    assert result.passed, f"{result.name}: {result.detail}"
    if budget_s is not None:
        assert result.elapsed_s < budget_s, (
            f"{result.name} took {result.elapsed_s:.1f}s (budget {budget_s}s)"
        )
    return result


def test_01_cubic_g2_symbolic_identity():
    _run(suite.check_cubic_g2_symbolic, budget_s=5)


def test_02_cubic_g4_symbolic_identity():
    _run(suite.check_cubic_g4_symbolic, budget_s=60)


def test_03_quartic_symbolic_and_25_specializations():
    _run(suite.check_quartic_symbolic_and_samples, budget_s=30)


def test_04_exponential_all_branches():
    _run(suite.check_exponential_all_branches, budget_s=10)


def test_05_conjugated_commutators_at_10_samples():
    _run(suite.check_conjugation_ring, budget_s=300)


def test_06_order6_partner_and_cubic_curve():
    _run(suite.check_order6_pair, budget_s=60)


def test_07_order10_partner_and_quintic_curve():
    _run(suite.check_g2_pair, budget_s=600)


def test_08_numeric_eigen_residuals():
    result = _run(suite.check_numeric_residuals)
    assert "worst residual" in result.detail


def test_09_bessel_form_residual_and_convergence():
    result = _run(suite.check_bessel_form)
    assert "refinement ratios" in result.detail


def test_10_property_suites():
    _run(suite.check_property_suites)
