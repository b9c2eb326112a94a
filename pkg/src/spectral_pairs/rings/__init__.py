"""Exact differential coefficient rings."""

from .multipoly import DERIVATION_VAR, MultiPoly, PolyRing
from .quotient import (
    CharPoly,
    QuotientExt,
    QuotientRing,
    rational_roots,
    reduce_mod_char,
)
from .twisted import TwistedLaurent, TwistedLaurentRing
from .fraction_field import (
    FractionElem,
    FractionFieldRing,
    QuotientField,
    RationalField,
    UniPoly,
    normalize_fraction,
)

__all__ = [
    "DERIVATION_VAR",
    "MultiPoly",
    "PolyRing",
    "CharPoly",
    "QuotientExt",
    "QuotientRing",
    "rational_roots",
    "reduce_mod_char",
    "TwistedLaurent",
    "TwistedLaurentRing",
    "FractionElem",
    "FractionFieldRing",
    "QuotientField",
    "RationalField",
    "UniPoly",
    "normalize_fraction",
]
