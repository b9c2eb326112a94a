from fractions import Fraction

from spectral_pairs.curves import SpectralCurve, charpoly_w, squarefree_normalize
from spectral_pairs.operators import DiffOp
from spectral_pairs.rings import PolyRing

XRING = PolyRing(("x",))


def _zero_row(entries):
    return [list(map(Fraction, e)) for e in entries]


def test_charpoly_of_diagonal_matrix():
    # diag(z, z, 1, 1): det(wI - A) = (w - z)^2 (w - 1)^2
    mat = [[[] for _ in range(4)] for _ in range(4)]
    mat[0][0] = [Fraction(0), Fraction(1)]
    mat[1][1] = [Fraction(0), Fraction(1)]
    mat[2][2] = [Fraction(1)]
    mat[3][3] = [Fraction(1)]
    det = charpoly_w(mat)
    w_minus_z = SpectralCurve({(0, 1): 1, (1, 0): -1})
    w_minus_1 = SpectralCurve({(0, 1): 1, (0, 0): -1})
    assert det == w_minus_z * w_minus_z * w_minus_1 * w_minus_1
    sqf = squarefree_normalize(det)
    assert sqf == w_minus_z * w_minus_1


def test_charpoly_of_nilpotent_block():
    # A = [[0, 1], [0, 0]] (2x2): det(wI - A) = w^2
    mat = [[[], [Fraction(1)]], [[], []]]
    assert charpoly_w(mat) == SpectralCurve({(0, 2): 1})


def test_squarefree_normalize_clears_denominators_and_content():
    # 4 w^2 - 4 z -> w^2 - z after normalization
    curve = SpectralCurve({(0, 2): 4, (1, 0): -4})
    assert squarefree_normalize(curve) == SpectralCurve({(0, 2): 1, (1, 0): -1})


def test_squarefree_normalize_strips_repeated_factor():
    w2_minus_z = SpectralCurve({(0, 2): 1, (1, 0): -1})
    squared = w2_minus_z * w2_minus_z
    assert squarefree_normalize(squared) == w2_minus_z


def test_w_slice_and_degrees():
    curve = SpectralCurve({(0, 2): 1, (3, 0): -1, (1, 1): 5})
    assert curve.w_degree() == 2
    assert curve.z_degree() == 3
    assert curve.w_slice(2) == [Fraction(1)]
    assert curve.w_slice(1) == [Fraction(0), Fraction(5)]
    assert curve.w_slice(0) == [0, 0, 0, Fraction(-1)]


def test_zero_terms_are_dropped():
    assert SpectralCurve({(0, 1): 0, (2, 0): 3}).terms == {(2, 0): Fraction(3)}
    assert SpectralCurve({(1, 1): 0}).is_zero()


def test_arithmetic():
    a = SpectralCurve({(0, 1): 1})
    b = SpectralCurve({(1, 0): 1})
    assert a * b == SpectralCurve({(1, 1): 1})
    assert (a - a).is_zero()
    assert (a * a - b) == SpectralCurve({(0, 2): 1, (1, 0): -1})


def test_eval_at_operators_commuting_pair():
    # z -> d^2, w -> d^3 on the curve w^2 - z^3: exact operator zero
    curve = SpectralCurve({(0, 2): 1, (3, 0): -1})
    d2, d3 = DiffOp.d(XRING, 2), DiffOp.d(XRING, 3)
    assert curve.eval_at_operators(d2, d3).is_zero()
    # and a curve that does not annihilate the pair reports a nonzero witness
    wrong = SpectralCurve({(0, 2): 1, (2, 0): -1})
    assert wrong.eval_at_operators(d2, d3) == DiffOp.d(XRING, 6) - DiffOp.d(XRING, 4)
