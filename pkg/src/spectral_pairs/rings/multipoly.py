"""Sparse multivariate polynomials over exact rationals.

Terms are stored as a dict mapping exponent vectors (tuples, one entry per
ring variable) to nonzero Fraction coefficients, so equality is structural.
Variables declared "laurent" may carry negative exponents; all others are
ordinary polynomial variables.  The derivation differentiates the variable
named ``x`` and treats every other variable as a constant.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import RingMismatchError

DERIVATION_VAR = "x"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to an exact rational")


class PolyRing:
    """A polynomial (optionally partly Laurent) ring over ℚ with d/dx."""

    def __init__(self, variables=(), laurent=()):
        self.variables = tuple(variables)
        self.laurent = frozenset(laurent)
        if not self.laurent <= set(self.variables):
            raise ValueError("laurent variables must be ring variables")
        self._zero_exp = (0,) * len(self.variables)
        self.zero = MultiPoly(self, {})
        self.one = MultiPoly(self, {self._zero_exp: Fraction(1)})

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.laurent == other.laurent
        )

    def __hash__(self):
        return hash((self.variables, self.laurent))

    def __repr__(self):
        lau = f", laurent={sorted(self.laurent)}" if self.laurent else ""
        return f"PolyRing({list(self.variables)}{lau})"

    def const(self, value) -> "MultiPoly":
        q = _as_fraction(value)
        if q == 0:
            return self.zero
        return MultiPoly(self, {self._zero_exp: q})

    def var(self, name: str, power: int = 1) -> "MultiPoly":
        i = self.variables.index(name)
        if power < 0 and name not in self.laurent:
            raise ValueError(f"negative power of non-laurent variable {name}")
        exp = list(self._zero_exp)
        exp[i] = power
        return MultiPoly(self, {tuple(exp): Fraction(1)})

    def from_terms(self, terms) -> "MultiPoly":
        clean = {e: _as_fraction(c) for e, c in terms.items() if c != 0}
        return MultiPoly(self, clean)


class MultiPoly:
    """Element of a :class:`PolyRing`.  Immutable after construction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic ring operations -------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{other.ring} != {self.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

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
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MultiPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly) or other.ring != self.ring:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # -- derivation -------------------------------------------------------

    def derive(self) -> "MultiPoly":
        """d/dx; every variable other than ``x`` is a constant."""
        if DERIVATION_VAR not in self.ring.variables:
            return self.ring.zero
        i = self.ring.variables.index(DERIVATION_VAR)
        terms: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            ne = e[:i] + (k - 1,) + e[i + 1:]
            s = terms.get(ne, 0) + c * k
            if s == 0:
                terms.pop(ne, None)
            else:
                terms[ne] = s
        return MultiPoly(self.ring, terms)

    # -- structure queries --------------------------------------------------

    def degree_in(self, name: str) -> int:
        """Largest exponent of ``name``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.ring.variables.index(name)
        return max(e[i] for e in self.terms)

    def coefficients_in(self, name: str) -> dict:
        """Split into {exponent of name: MultiPoly without that variable}."""
        i = self.ring.variables.index(name)
        rest_vars = self.ring.variables[:i] + self.ring.variables[i + 1:]
        rest = PolyRing(rest_vars, self.ring.laurent - {name})
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            re = e[:i] + e[i + 1:]
            bucket = out.setdefault(k, {})
            bucket[re] = bucket.get(re, 0) + c
        return {k: rest.from_terms(t) for k, t in out.items()}

    def constant_term(self) -> Fraction:
        return self.terms.get(self.ring._zero_exp, Fraction(0))

    def as_fraction(self) -> Fraction:
        """The value of a constant polynomial; raises if non-constant."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {self.ring._zero_exp}:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms[self.ring._zero_exp]

    # -- mapping between rings ----------------------------------------------

    def map_to(self, target: PolyRing) -> "MultiPoly":
        """Embed into a ring containing (by name) all variables used here."""
        idx = [target.variables.index(v) for v in self.ring.variables]
        zero = (0,) * len(target.variables)
        terms = {}
        for e, c in self.terms.items():
            ne = list(zero)
            for j, k in zip(idx, e):
                ne[j] = k
            terms[tuple(ne)] = c
        return MultiPoly(target, terms)

    def subs(self, values: dict, target: PolyRing | None = None) -> "MultiPoly":
        """Substitute exact rationals for some variables.

        Remaining variables must all exist in ``target`` (defaults to the
        ring spanned by the untouched variables, in order).
        """
        vals = {name: _as_fraction(v) for name, v in values.items()}
        keep = [v for v in self.ring.variables if v not in vals]
        if target is None:
            target = PolyRing(keep, self.ring.laurent & set(keep))
        out = target.zero
        for e, c in self.terms.items():
            coeff = c
            ne = [0] * len(target.variables)
            for name, k in zip(self.ring.variables, e):
                if k == 0:
                    continue
                if name in vals:
                    base = vals[name]
                    if base == 0 and k < 0:
                        raise ZeroDivisionError(f"{name}=0 with negative exponent")
                    coeff *= base ** k
                else:
                    ne[target.variables.index(name)] = k
            if coeff != 0:
                out = out + MultiPoly(target, {tuple(ne): coeff})
        return out

    def eval_numeric(self, values: dict) -> complex:
        """Evaluate at numeric (possibly complex) values of every variable."""
        total = 0j
        for e, c in self.terms.items():
            term = complex(c)
            for name, k in zip(self.ring.variables, e):
                if k:
                    term *= values[name] ** k
            total += term
        return total

    # -- display -------------------------------------------------------------

    def _sorted_terms(self):
        # graded lexicographic on the fixed variable order
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), item[0]),
            reverse=True,
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._sorted_terms():
            factors = [
                f"{v}^{k}" if k != 1 else v
                for v, k in zip(self.ring.variables, e)
                if k != 0
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")
