"""Bivariate spectral curves R(z, w) with exact rational coefficients.

The curve of a commuting pair is the squarefree part of the characteristic
polynomial det(w*I - A(z)) of the action of the second operator on the formal
kernel of the first.  Squarefree reduction is an exact gcd against the
w-derivative, carried out over the rational-function field Q(z).
"""

from __future__ import annotations

from fractions import Fraction

from .operators import DiffOp
from .rings.fraction_field import FractionElem, RationalField, UniPoly

_QQ = RationalField()


class SpectralCurve:
    """R(z, w) as a dict {(z_power, w_power): Fraction}, zero terms omitted."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {k: Fraction(v) for k, v in terms.items() if v != 0}

    def __eq__(self, other):
        return isinstance(other, SpectralCurve) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def w_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def z_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def __mul__(self, other: "SpectralCurve") -> "SpectralCurve":
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return SpectralCurve(out)

    def __sub__(self, other: "SpectralCurve") -> "SpectralCurve":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return SpectralCurve(out)

    def w_slice(self, j: int) -> list:
        """Coefficient of w^j as a dense z-coefficient list."""
        top = max((i for (i, jj) in self.terms if jj == j), default=-1)
        out = [Fraction(0)] * (top + 1)
        for (i, jj), c in self.terms.items():
            if jj == j:
                out[i] = c
        return out

    def eval_at_operators(self, a: DiffOp, b: DiffOp) -> DiffOp:
        """Substitute z -> a, w -> b monomial-wise; requires [a, b] = 0."""
        max_i = self.z_degree()
        max_j = self.w_degree()
        a_pows = [DiffOp.identity(a.ring)]
        for _ in range(max(max_i, 0)):
            a_pows.append(a_pows[-1] * a)
        b_pows = [DiffOp.identity(b.ring)]
        for _ in range(max(max_j, 0)):
            b_pows.append(b_pows[-1] * b)
        out = DiffOp.zero(a.ring)
        for (i, j), c in self.terms.items():
            out = out + (a_pows[i] * b_pows[j]).scale(a.ring.const(c))
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (k[1], k[0]), reverse=True):
            c = self.terms[(i, j)]
            mono = "*".join(
                ([f"z^{i}"] if i else []) + ([f"w^{j}"] if j else [])
            ) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def charpoly_w(matrix) -> SpectralCurve:
    """det(w*I - A) for a 4x4 (or nxn) matrix of Q[z] coefficient lists.

    ``matrix[i][j]`` is a dense list of Fractions (z-powers, low to high).
    The determinant is expanded by permutations: division-free and exact.
    """
    n = len(matrix)
    # entries of w*I - A as SpectralCurve values
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = {(k, 0): -c for k, c in enumerate(matrix[i][j]) if c != 0}
            if i == j:
                terms[(0, 1)] = terms.get((0, 1), 0) + 1
            row.append(SpectralCurve(terms))
        entries.append(row)
    return _det(entries)


def _det(entries) -> SpectralCurve:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    out = SpectralCurve({})
    sign = 1
    for j in range(n):
        minor = [
            [entries[i][k] for k in range(n) if k != j] for i in range(1, n)
        ]
        term = entries[0][j] * _det(minor)
        if sign < 0:
            term = SpectralCurve({}) - term
        out = _add(out, term)
        sign = -sign
    return out


def _add(a: SpectralCurve, b: SpectralCurve) -> SpectralCurve:
    out = dict(a.terms)
    for k, c in b.terms.items():
        out[k] = out.get(k, 0) + c
    return SpectralCurve(out)


def _to_w_poly(curve: SpectralCurve) -> UniPoly:
    """View R(z, w) as a polynomial in w over Frac(Q[z])."""
    coeffs = []
    for j in range(curve.w_degree() + 1):
        num = UniPoly(_QQ, curve.w_slice(j), var="z")
        den = UniPoly.const(_QQ, 1, var="z")
        coeffs.append(FractionElem(num, den, _normalized=True))
    field = _ZFracField()
    return UniPoly(field, coeffs, var="w")


class _ZFracField:
    """Field adapter for Frac(Q[z]) elements used as w-coefficients."""

    def __init__(self):
        one = UniPoly.const(_QQ, 1, var="z")
        self.zero = FractionElem(UniPoly(_QQ, [], var="z"), one, _normalized=True)
        self.one = FractionElem(one, one, _normalized=True)

    def from_rational(self, q):
        one = UniPoly.const(_QQ, 1, var="z")
        return FractionElem(UniPoly.const(_QQ, q, var="z"), one, _normalized=True)

    def inv(self, a: FractionElem) -> FractionElem:
        return a.inverse()

    def coerce(self, a):
        if isinstance(a, FractionElem):
            return a
        if isinstance(a, (int, Fraction)):
            return self.from_rational(a)
        raise TypeError(f"cannot coerce {a!r}")

    def __eq__(self, other):
        return isinstance(other, _ZFracField)

    def __hash__(self):
        return hash("Frac(Q[z])")


def squarefree_normalize(curve: SpectralCurve) -> SpectralCurve:
    """Squarefree part of R in w, denominators cleared, top w-coefficient 1.

    The gcd with dR/dw is computed over Q(z); the quotient is then scaled back
    to integral z-coefficients with unit content and, when the leading
    w-coefficient is a nonzero rational constant, normalized to 1.
    """
    rp = _to_w_poly(curve)
    # dR/dw
    field = rp.field
    dcoeffs = [
        rp.coeffs[k] * field.from_rational(Fraction(k))
        for k in range(1, len(rp.coeffs))
    ]
    drp = UniPoly(field, dcoeffs, var="w")
    g = rp.gcd(drp)
    part = rp.divmod(g)[0] if g.degree > 0 else rp
    # clear z-denominators: multiply by lcm of denominator polynomials
    dens = [c.den for c in part.coeffs if not c.num.is_zero()]
    lcm = UniPoly.const(_QQ, 1, var="z")
    for d in dens:
        gg = lcm.gcd(d)
        lcm = (lcm.divmod(gg)[0] if gg.degree > 0 else lcm) * d
    terms: dict = {}
    for j, c in enumerate(part.coeffs):
        if c.num.is_zero():
            continue
        scaled = c.num * lcm.divmod(c.den)[0]
        for i, q in enumerate(scaled.coeffs):
            if q != 0:
                terms[(i, j)] = q
    out = SpectralCurve(terms)
    # normalize: divide by the leading rational of the top w-slice
    top = out.w_degree()
    lead_slice = out.w_slice(top)
    lead = lead_slice[-1] if lead_slice else Fraction(1)
    if lead != 0 and lead != 1:
        out = SpectralCurve({k: c / lead for k, c in out.terms.items()})
    return out
