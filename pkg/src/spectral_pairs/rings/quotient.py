"""Quotient extensions Base[z]/(chi) for a monic chi, and rational roots.

The quotient is taken over an arbitrary commutative base ring (zero divisors
allowed: chi need be neither irreducible nor squarefree).  Only division-free
arithmetic is provided; inversion is attempted solely when the base ring is
the rationals and chi is irreducible, which is what the fraction-field stage
needs.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import NonMonicError, RingMismatchError, UnsupportedDegreeError
from .multipoly import MultiPoly, PolyRing, _as_fraction


class CharPoly:
    """A monic univariate polynomial chi(z) over a coefficient ring.

    ``coeffs`` lists c_0 .. c_d (low to high); c_d must equal the ring one.
    """

    def __init__(self, ring: PolyRing, coeffs):
        coeffs = [c if isinstance(c, MultiPoly) else ring.const(c) for c in coeffs]
        if len(coeffs) < 2:
            raise ValueError("chi must have degree >= 1")
        if coeffs[-1] != ring.one:
            raise NonMonicError("chi must be monic")
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval_at(self, value):
        """Horner evaluation at any element supporting the ring operations."""
        acc = value * 0  # zero of the target structure
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coeffs(self, fn, ring=None) -> "CharPoly":
        return CharPoly(ring or self.ring, [fn(c) for c in self.coeffs])

    def rational_coeffs(self) -> list:
        return [c.as_fraction() for c in self.coeffs]

    def derivative_coeffs(self) -> list:
        """d(chi)/dz coefficient list (low to high), over the same ring."""
        return [self.coeffs[k] * k for k in range(1, len(self.coeffs))]

    def __eq__(self, other):
        return (
            isinstance(other, CharPoly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        parts = [f"({c})*z^{k}" if k else f"({c})" for k, c in enumerate(self.coeffs)]
        return " + ".join(reversed(parts))


class QuotientRing:
    """Base[z]/(chi) with chi monic; elements are coordinate vectors in z."""

    def __init__(self, base: PolyRing, chi: CharPoly):
        self.base = base
        # chi may live over a smaller coefficient ring; lift it.
        self.chi = chi if chi.ring == base else chi.map_coeffs(
            lambda c: c.map_to(base), base
        )
        d = self.chi.degree
        self.degree = d
        # z^d = -(c_0 + c_1 z + ... + c_{d-1} z^{d-1})
        self._zd = [-c for c in self.chi.coeffs[:-1]]
        self.zero = QuotientExt(self, (base.zero,) * d)
        one = [base.one] + [base.zero] * (d - 1)
        self.one = QuotientExt(self, tuple(one))
        if d >= 2:
            gen = [base.zero] * d
            gen[1] = base.one
            self.gen = QuotientExt(self, tuple(gen))
        else:
            self.gen = QuotientExt(self, tuple(self._zd))

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and self.base == other.base
            and self.chi == other.chi
        )

    def __hash__(self):
        return hash((self.base, self.chi.coeffs))

    def __repr__(self):
        return f"{self.base}[z]/({self.chi})"

    def from_base(self, elem) -> "QuotientExt":
        if isinstance(elem, (int, Fraction)):
            elem = self.base.const(elem)
        if elem.ring != self.base:
            raise RingMismatchError("coefficient not in the base ring")
        coords = [elem] + [self.base.zero] * (self.degree - 1)
        return QuotientExt(self, tuple(coords))

    def const(self, value) -> "QuotientExt":
        return self.from_base(self.base.const(value))

    def from_z_coeffs(self, coeffs) -> "QuotientExt":
        """Reduce an arbitrary-degree z-coefficient list into the quotient."""
        coeffs = [
            c if isinstance(c, MultiPoly) else self.base.const(c) for c in coeffs
        ]
        d = self.degree
        work = list(coeffs)
        while len(work) > d:
            top = work.pop()
            if top.is_zero():
                continue
            k = len(work) - d  # top multiplies z^(d+k)
            for i, r in enumerate(self._zd):
                work[k + i] = work[k + i] + top * r
        work += [self.base.zero] * (d - len(work))
        return QuotientExt(self, tuple(work))


class QuotientExt:
    """Element of a :class:`QuotientRing`: polynomial in z of degree < deg chi."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: QuotientRing, coords):
        self.ring = ring
        self.coords = tuple(coords)

    def _coerce(self, other):
        if isinstance(other, QuotientExt):
            if other.ring != self.ring:
                raise RingMismatchError("quotient rings differ")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        if isinstance(other, MultiPoly):
            return self.ring.from_base(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuotientExt(
            self.ring, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return QuotientExt(self.ring, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.ring.degree
        base = self.ring.base
        prod = [base.zero] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coords):
                if b.is_zero():
                    continue
                prod[i + j] = prod[i + j] + a * b
        return self.ring.from_z_coeffs(prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.ring, self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def derive(self) -> "QuotientExt":
        # z is a constant for the derivation; differentiate coordinates
        return QuotientExt(self.ring, tuple(c.derive() for c in self.coords))

    def rational_coords(self) -> list:
        return [c.as_fraction() for c in self.coords]

    def inverse(self) -> "QuotientExt":
        """Invert when the base coefficients are rational constants.

        Extended Euclid in Q[z] against chi; raises ZeroDivisionError when the
        element is a zero divisor (chi not coprime with the lift).
        """
        a = [c.as_fraction() for c in self.coords]
        m = [c.as_fraction() for c in self.ring.chi.coeffs]
        g, s = _ext_euclid_mod(a, m)
        if len(g) != 1:
            raise ZeroDivisionError("element is a zero divisor in the quotient")
        inv = [c / g[0] for c in s]
        return self.ring.from_z_coeffs([Fraction(c) for c in inv])

    def __repr__(self):
        parts = [
            f"({c})*z^{k}" if k else f"({c})"
            for k, c in enumerate(self.coords)
            if not c.is_zero()
        ]
        return " + ".join(reversed(parts)) if parts else "0"


# -- rational univariate helpers (dense Fraction coefficient lists) ----------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: list, den: list):
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    while len(num) >= len(den) and num:
        f = num[-1] / den[-1]
        k = len(num) - len(den)
        q[k] = f
        for i, c in enumerate(den):
            num[k + i] -= f * c
        _trim(num)
    return q, num


def _ext_euclid_mod(a: list, m: list):
    """gcd(a, m) and s with s*a = gcd (mod m), over Q[z]."""
    r0, r1 = list(m), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        # s_new = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, qc in enumerate(q):
            for j, sc in enumerate(s1):
                prod[i + j] += qc * sc
        s_new = [
            (s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
            for i in range(max(len(s0), len(prod)))
        ]
        r0, r1 = r1, r
        s0, s1 = s1, _trim([Fraction(c) for c in s_new])
    return r0, s0


def reduce_mod_char(p: MultiPoly, chi: CharPoly) -> QuotientExt:
    """Reduce a polynomial containing z modulo a monic chi(z).

    The result lives in Base[z]/(chi) where Base drops the z variable.
    """
    by_z = p.coefficients_in("z")
    if by_z:
        base = next(iter(by_z.values())).ring
    else:
        vars_ = tuple(v for v in p.ring.variables if v != "z")
        base = PolyRing(vars_, p.ring.laurent - {"z"})
    qring = QuotientRing(base, chi)
    top = max(by_z) if by_z else 0
    coeffs = [by_z.get(k, base.zero) for k in range(top + 1)]
    return qring.from_z_coeffs(coeffs)


def rational_roots(chi: CharPoly) -> list:
    """All rational roots (with multiplicity) of chi over Q, degree <= 3."""
    if chi.degree > 3:
        raise UnsupportedDegreeError(f"degree {chi.degree} > 3")
    coeffs = [_as_fraction(c) if not isinstance(c, MultiPoly) else c.as_fraction()
              for c in chi.coeffs]
    # clear denominators -> integer polynomial
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // _gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in coeffs]

    roots = []
    work = [Fraction(c) for c in ints]
    # strip factors of z
    while work and work[0] == 0:
        roots.append(Fraction(0))
        work = work[1:]
    while len(work) > 1:
        a0 = int(work[0] * _den_lcm(work))
        an = int(work[-1] * _den_lcm(work))
        found = None
        for p in _divisors(abs(a0)):
            for q in _divisors(abs(an)):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _horner(work, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        work, rem = _deflate(work, found)
        assert rem == 0
        while work and work[0] == 0 and len(work) > 1:
            roots.append(Fraction(0))
            work = work[1:]
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _den_lcm(coeffs) -> int:
    L = 1
    for c in coeffs:
        L = L * c.denominator // _gcd(L, c.denominator)
    return L


def _divisors(n: int):
    if n == 0:
        return [1]  # a0 == 0 is handled by stripping z factors first
    out = [d for d in range(1, abs(n) + 1) if n % d == 0]
    return out


def _horner(coeffs, value):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * value + c
    return acc


def _deflate(coeffs, root):
    """Synthetic division of coeffs (low->high) by (z - root)."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    out[n - 1] = coeffs[n]
    for k in range(n - 2, -1, -1):
        out[k] = coeffs[k + 1] + root * out[k + 1]
    rem = coeffs[0] + root * out[0]
    return out, rem
