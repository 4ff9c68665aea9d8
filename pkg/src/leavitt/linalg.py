"""Sparse exact Gaussian elimination over an arbitrary field.

Equations are dicts mapping hashable variable keys to field coefficients.
Used for bounded ideal-membership solving, annihilator (syzygy) bases, and
the finite-dimensional oracle; never with floating point.
"""

from __future__ import annotations

from typing import Hashable, Optional


class LinearSystem:
    """A growing system of linear equations ``sum(coeff * var) = rhs``.

    Rows are kept in reduced row-echelon form incrementally, each with a
    pivot variable.  Inconsistency is detected on insertion.
    """

    def __init__(self, field):
        self.field = field
        self.rows: list[tuple[Hashable, dict, object]] = []  # (pivot, coeffs, rhs)
        self.inconsistent = False

    def reduce(self, coeffs: dict, rhs):
        """Reduce an equation against the current rows; returns (coeffs, rhs)."""
        coeffs = dict(coeffs)
        zero = self.field.zero
        for pivot, row, row_rhs in self.rows:
            c = coeffs.get(pivot)
            if c is not None and c != zero:
                for var, val in row.items():
                    nv = coeffs.get(var, zero) - c * val
                    if nv == zero:
                        coeffs.pop(var, None)
                    else:
                        coeffs[var] = nv
                rhs = rhs - c * row_rhs
        coeffs = {v: c for v, c in coeffs.items() if c != zero}
        return coeffs, rhs

    def add(self, coeffs: dict, rhs) -> bool:
        """Insert an equation; returns False if it makes the system inconsistent."""
        coeffs, rhs = self.reduce(coeffs, rhs)
        if not coeffs:
            if rhs != self.field.zero:
                self.inconsistent = True
                return False
            return True
        # pick the sparsest-looking pivot deterministically
        pivot = min(coeffs)
        inv = self.field.one / coeffs[pivot]
        row = {v: c * inv for v, c in coeffs.items()}
        row_rhs = rhs * inv
        # back-substitute into existing rows to stay fully reduced
        zero = self.field.zero
        for i, (p, r, rr) in enumerate(self.rows):
            c = r.get(pivot)
            if c is not None and c != zero:
                nr = dict(r)
                for var, val in row.items():
                    nv = nr.get(var, zero) - c * val
                    if nv == zero:
                        nr.pop(var, None)
                    else:
                        nr[var] = nv
                self.rows[i] = (p, nr, rr - c * row_rhs)
        self.rows.append((pivot, row, row_rhs))
        return True

    def solution(self) -> Optional[dict]:
        """A particular solution (free variables set to zero), or None."""
        if self.inconsistent:
            return None
        # rows are in reduced echelon form: x_pivot = rhs once free vars are 0
        zero = self.field.zero
        return {p: rhs for p, _, rhs in self.rows if rhs != zero}


def solve(field, equations: list[tuple[dict, object]]) -> Optional[dict]:
    """One solution of the system, as a sparse dict, or None if unsolvable."""
    sys = LinearSystem(field)
    for coeffs, rhs in equations:
        if not sys.add(coeffs, rhs):
            return None
    return sys.solution()


def nullspace(field, equations: list[dict], variables: list[Hashable]) -> list[dict]:
    """A basis of the solution space of homogeneous ``equations`` in
    ``variables`` (sparse dicts; variables absent from a basis vector are 0)."""
    sys = LinearSystem(field)
    zero = field.zero
    for coeffs in equations:
        sys.add(coeffs, zero)
    pivots = {p for p, _, _ in sys.rows}
    pivot_rows = {p: row for p, row, _ in sys.rows}
    basis = []
    one = field.one
    for free in variables:
        if free in pivots:
            continue
        vec = {free: one}
        for p, row in pivot_rows.items():
            c = row.get(free)
            if c is not None and c != zero:
                vec[p] = -c
        basis.append(vec)
    return basis


class SpanTracker:
    """Incremental span of vectors with witness tracking.

    Each inserted vector carries a tag; ``express`` writes a vector as a
    combination of previously inserted ones, returning {tag: coeff}.
    """

    def __init__(self, field):
        self.field = field
        # rows: (pivot, vector, witness) with vector reduced against earlier rows
        self.rows: list[tuple[Hashable, dict, dict]] = []

    def _reduce(self, vec: dict):
        vec = dict(vec)
        witness: dict = {}
        zero = self.field.zero
        for pivot, row, row_wit in self.rows:
            c = vec.get(pivot)
            if c is not None and c != zero:
                for var, val in row.items():
                    nv = vec.get(var, zero) - c * val
                    if nv == zero:
                        vec.pop(var, None)
                    else:
                        vec[var] = nv
                for tag, val in row_wit.items():
                    nv = witness.get(tag, zero) + c * val
                    if nv == zero:
                        witness.pop(tag, None)
                    else:
                        witness[tag] = nv
        return {v: c for v, c in vec.items() if c != zero}, witness

    def insert(self, vec: dict, tag) -> bool:
        """Add ``vec`` to the span; returns True if it enlarged the span."""
        red, wit = self._reduce(vec)
        if not red:
            return False
        pivot = min(red)
        inv = self.field.one / red[pivot]
        row = {v: c * inv for v, c in red.items()}
        row_wit = {t: c * inv for t, c in wit.items()}
        # the inserted vector itself contributes with coefficient inv,
        # minus what was already subtracted
        row_wit = {t: -c for t, c in row_wit.items()}
        row_wit[tag] = row_wit.get(tag, self.field.zero) + inv
        self.rows.append((pivot, row, row_wit))
        return True

    def express(self, vec: dict) -> Optional[dict]:
        """Write ``vec`` as {tag: coeff} over inserted vectors, or None."""
        red, wit = self._reduce(vec)
        if red:
            return None
        return wit

    @property
    def dimension(self) -> int:
        return len(self.rows)
