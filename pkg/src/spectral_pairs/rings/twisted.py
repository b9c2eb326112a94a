"""Laurent polynomials in t = exp(x/2) with the twisted derivation.

The derivation satisfies D(t^k) = (k/2) t^k, so e^x = t^2 and the exponential
eigenfunction multipliers t^g, t^(-(g+1)) are plain monomials.  Coefficients
live in a parameter ring without x (their own derivative is zero), but the
general Leibniz form is kept so the construction stays honest.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import RingMismatchError
from .multipoly import MultiPoly, PolyRing


class TwistedLaurentRing:
    """Base-coefficient Laurent polynomials in t with D(t^k) = (k/2) t^k."""

    def __init__(self, base: PolyRing):
        self.base = base
        self.zero = TwistedLaurent(self, {})
        self.one = TwistedLaurent(self, {0: base.one})

    def __eq__(self, other):
        return isinstance(other, TwistedLaurentRing) and self.base == other.base

    def __hash__(self):
        return hash(("twisted", self.base))

    def __repr__(self):
        return f"TwistedLaurent(t; {self.base})"

    def const(self, value) -> "TwistedLaurent":
        c = self.base.const(value)
        return TwistedLaurent(self, {0: c} if not c.is_zero() else {})

    def from_base(self, elem) -> "TwistedLaurent":
        if isinstance(elem, (int, Fraction)):
            return self.const(elem)
        if elem.ring != self.base:
            raise RingMismatchError("coefficient not in the base ring")
        return TwistedLaurent(self, {0: elem} if not elem.is_zero() else {})

    def t_power(self, k: int, coeff=1) -> "TwistedLaurent":
        c = coeff if isinstance(coeff, MultiPoly) else self.base.const(coeff)
        return TwistedLaurent(self, {k: c} if not c.is_zero() else {})


class TwistedLaurent:
    """Element: dict from integer t-exponent to nonzero base coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: TwistedLaurentRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, TwistedLaurent):
            if other.ring != self.ring:
                raise RingMismatchError("twisted Laurent rings differ")
            return other
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self.ring.from_base(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, self.ring.base.zero) + c
            if s.is_zero():
                terms.pop(k, None)
            else:
                terms[k] = s
        return TwistedLaurent(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return TwistedLaurent(self.ring, {k: -c for k, c in self.terms.items()})

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
        terms: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                s = terms.get(k, self.ring.base.zero) + c1 * c2
                if s.is_zero():
                    terms.pop(k, None)
                else:
                    terms[k] = s
        return TwistedLaurent(self.ring, terms)

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
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset((k, c) for k, c in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def derive(self) -> "TwistedLaurent":
        terms: dict = {}
        for k, c in self.terms.items():
            s = c.derive() + c * Fraction(k, 2)
            if not s.is_zero():
                terms[k] = s
        return TwistedLaurent(self.ring, terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "TwistedLaurent":
        """Invert a unit.  Only monomials with constant coefficient are units."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("not a unit in the twisted Laurent ring")
        (k, c), = self.terms.items()
        q = c.as_fraction()  # raises for non-constant coefficients
        return self.ring.t_power(-k, Fraction(1) / q)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if k == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*t^{k}")
        return " + ".join(parts)
