"""Exact rational linear algebra on sparse rows.

Rows are dicts {column index: Fraction}.  Elimination is deterministic: rows
are processed in their given order and pivots are chosen as the first nonzero
entry in a fixed column order, so witnesses are reproducible run to run.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list, ncols: int):
    """Reduced row echelon form in place (on copies); returns (rows, pivots).

    ``pivots`` maps pivot column -> row index in the returned list.
    """
    work = [dict(r) for r in rows if r]
    pivots: dict = {}
    reduced = []
    for col in range(ncols):
        pivot_row = None
        for r in work:
            if r.get(col):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work.remove(pivot_row)
        inv = Fraction(1) / pivot_row[col]
        pivot_row = {c: v * inv for c, v in pivot_row.items()}
        for other in work:
            f = other.get(col)
            if f:
                for c, v in pivot_row.items():
                    nv = other.get(c, Fraction(0)) - f * v
                    if nv == 0:
                        other.pop(c, None)
                    else:
                        other[c] = nv
        for other in reduced:
            f = other.get(col)
            if f:
                for c, v in pivot_row.items():
                    nv = other.get(c, Fraction(0)) - f * v
                    if nv == 0:
                        other.pop(c, None)
                    else:
                        other[c] = nv
        pivots[col] = len(reduced)
        reduced.append(pivot_row)
        work = [r for r in work if r]
    return reduced, pivots


def nullspace(rows: list, ncols: int) -> list:
    """Basis of {v : A v = 0} as dense Fraction lists, one per free column."""
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for pc, ri in pivots.items():
            v[pc] = -reduced[ri].get(fc, Fraction(0))
        basis.append(v)
    return basis
