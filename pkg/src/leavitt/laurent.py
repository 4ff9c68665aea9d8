"""Exact Laurent polynomials in one variable over a field, plus the
principal-generator computation for row modules of Laurent matrices.

Monomials x^k are units, so gcds are computed on the polynomial parts after
shifting the lowest exponent to zero; matrices are reduced to a triangular
form by Bezout row operations, which decides membership in a row module and
extracts explicit division witnesses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .fields import QQ


class LaurentError(ValueError):
    pass


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial: sparse map exponent -> nonzero coefficient."""

    field: object
    coeffs: tuple  # sorted tuple of (exponent, coefficient)

    @staticmethod
    def make(field, mapping: dict) -> "LaurentPoly":
        zero = field.zero
        items = tuple(sorted((e, c) for e, c in mapping.items() if c != zero))
        return LaurentPoly(field, items)

    @staticmethod
    def zero(field) -> "LaurentPoly":
        return LaurentPoly(field, ())

    @staticmethod
    def one(field) -> "LaurentPoly":
        return LaurentPoly.make(field, {0: field.one})

    @staticmethod
    def x(field, exp: int = 1, coeff=None) -> "LaurentPoly":
        return LaurentPoly.make(field, {exp: field.one if coeff is None else coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int:
        return self.coeffs[0][0]

    @property
    def high(self) -> int:
        return self.coeffs[-1][0]

    def span(self) -> int:
        """Degree span (high - low); -1 for the zero polynomial."""
        return -1 if self.is_zero() else self.high - self.low

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self.coeffs)
        zero = self.field.zero
        for e, c in other.coeffs:
            acc[e] = acc.get(e, zero) + c
        return LaurentPoly.make(self.field, acc)

    def __neg__(self):
        return LaurentPoly(self.field, tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict = {}
        zero = self.field.zero
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                acc[e1 + e2] = acc.get(e1 + e2, zero) + c1 * c2
        return LaurentPoly.make(self.field, acc)

    def scale(self, k) -> "LaurentPoly":
        k = self.field.of(k)
        return LaurentPoly.make(self.field, {e: k * c for e, c in self.coeffs})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.field, tuple((e + k, c) for e, c in self.coeffs))

    def unit_normalize(self) -> tuple["LaurentPoly", "LaurentPoly"]:
        """Returns (normal, unit) with self = unit * normal, where normal has
        lowest exponent 0 and leading coefficient 1."""
        if self.is_zero():
            return self, LaurentPoly.one(self.field)
        lead = self.coeffs[-1][1]
        unit = LaurentPoly.make(self.field, {self.low: lead})
        inv = self.field.one / lead
        normal = LaurentPoly(self.field,
                             tuple((e - self.low, c * inv) for e, c in self.coeffs))
        return normal, unit

    def _dense(self) -> list:
        """Dense coefficient list of the shifted polynomial part (low -> 0)."""
        if self.is_zero():
            return []
        zero = self.field.zero
        out = [zero] * (self.span() + 1)
        for e, c in self.coeffs:
            out[e - self.low] = c
        return out

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def __repr__(self):
        return format_laurent(self)


def _dense_divmod(a: list, b: list, field):
    """Polynomial division on dense coefficient lists (b nonzero)."""
    a = list(a)
    zero = field.zero
    while a and a[-1] == zero:
        a.pop()
    q = [zero] * max(0, len(a) - len(b) + 1)
    inv = field.one / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c != zero:
            q[i] = c
            for j, bc in enumerate(b):
                a[i + j] = a[i + j] - c * bc
    while a and a[-1] == zero:
        a.pop()
    return q, a


def _from_dense(field, dense: list, shift: int = 0) -> LaurentPoly:
    return LaurentPoly.make(field, {i + shift: c for i, c in enumerate(dense)})


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> Optional[LaurentPoly]:
    """q with q*b = a, or None if b does not divide a."""
    if b.is_zero():
        return LaurentPoly.zero(a.field) if a.is_zero() else None
    if a.is_zero():
        return LaurentPoly.zero(a.field)
    q, r = _dense_divmod(a._dense(), b._dense(), a.field)
    if r:
        return None
    return _from_dense(a.field, q, a.low - b.low)


def division_step(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """(q, r) with a = q*b + r and span(r) < span(b), on polynomial parts."""
    if a.is_zero():
        return LaurentPoly.zero(a.field), a
    q, r = _dense_divmod(a._dense(), b._dense(), a.field)
    shift = a.low - b.low
    return _from_dense(a.field, q, shift), _from_dense(a.field, r, a.low)


def l_gcd(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """(g, u, v) with u*a + v*b = g, g unit-normal.  Not both zero."""
    if a.is_zero() and b.is_zero():
        raise LaurentError("gcd(0, 0) is undefined")
    field = a.field
    one, zero = LaurentPoly.one(field), LaurentPoly.zero(field)
    # Euclid on the polynomial parts; the x-shifts fold into the witnesses.
    r0, u0, v0 = a, one, zero
    r1, u1, v1 = b, zero, one
    while not r1.is_zero():
        q, r = division_step(r0, r1)
        r0, u0, v0, r1, u1, v1 = r1, u1, v1, r, u0 - q * u1, v0 - q * v1
    g, unit = r0.unit_normalize()
    uinv = LaurentPoly.make(field, {-unit.low: field.one / unit.coeffs[0][1]})
    return g, uinv * u0, uinv * v0


@dataclass(frozen=True)
class LaurentMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of LaurentPoly

    @staticmethod
    def make(entries: list[list[LaurentPoly]]) -> "LaurentMatrix":
        if not entries or not entries[0]:
            raise LaurentError("matrix dims must be >= 1")
        cols = len(entries[0])
        if any(len(r) != cols for r in entries):
            raise LaurentError("ragged matrix")
        return LaurentMatrix(len(entries), cols, tuple(tuple(r) for r in entries))

    @staticmethod
    def zeros(field, rows: int, cols: int) -> "LaurentMatrix":
        z = LaurentPoly.zero(field)
        return LaurentMatrix.make([[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(field, n: int) -> "LaurentMatrix":
        z, o = LaurentPoly.zero(field), LaurentPoly.one(field)
        return LaurentMatrix.make([[o if i == j else z for j in range(n)]
                                   for i in range(n)])

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return LaurentMatrix.make([[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.rows:
            raise LaurentError("dimension mismatch")
        field = self.entries[0][0].field
        z = LaurentPoly.zero(field)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return LaurentMatrix.make(out)

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def __repr__(self):
        return "[" + "; ".join(", ".join(format_laurent(p) for p in row)
                               for row in self.entries) + "]"


def _combine_rows(row_i, row_j, a, b):
    """Unimodular 2x2 Bezout transform making the pivot entry gcd(a, b)."""
    g, u, v = l_gcd(a, b)
    s = exact_divide(a, g)
    t = exact_divide(b, g)
    new_i = [u * x + v * y for x, y in zip(row_i, row_j)]
    new_j = [s * y - t * x for x, y in zip(row_i, row_j)]
    return new_i, new_j


def _triangularize(field, rows: list[list[LaurentPoly]], n: int):
    """Reduce stacked rows to echelon; returns (pivot_rows, expressions) where
    expressions[c] writes pivot row c over the input rows."""
    k = len(rows)
    z, o = LaurentPoly.zero(field), LaurentPoly.one(field)
    # carry expression vectors alongside: work[i] = (row, expr over inputs)
    work = [(list(r), [o if j == i else z for j in range(k)])
            for i, r in enumerate(rows)]
    pivots: dict[int, tuple[list, list]] = {}
    for col in range(n):
        live = [i for i, (r, _) in enumerate(work) if not r[col].is_zero()
                and all(r[c].is_zero() for c in range(col))]
        if not live:
            continue
        while len(live) > 1:
            # deterministic pivot: minimal degree span, then row order
            live.sort(key=lambda i: (work[i][0][col].span(), i))
            i, j = live[0], live[1]
            ri, rj = work[i][0], work[j][0]
            ni, nj = _combine_rows(ri, rj, ri[col], rj[col])
            ei, ej = _combine_rows(work[i][1], work[j][1], ri[col], rj[col])
            work[i] = (ni, ei)
            work[j] = (nj, ej)
            live = [x for x in live if not work[x][0][col].is_zero()]
        p = live[0]
        prow, pexpr = work[p]
        norm, unit = prow[col].unit_normalize()
        uinv = LaurentPoly.make(field, {-unit.low: field.one / unit.coeffs[0][1]})
        prow = [uinv * x for x in prow]
        pexpr = [uinv * x for x in pexpr]
        pivots[col] = (prow, pexpr)
        work[p] = ([z] * n, [z] * k)  # consumed
        # clear this column in the remaining rows
        for i, (r, e) in enumerate(work):
            if not r[col].is_zero():
                q, _ = division_step(r[col], prow[col])
                # pivot entries are unit-normal; division is exact here only
                # if divisible, otherwise reduce span and retry via combine
                rem = [x - q * y for x, y in zip(r, prow)]
                if rem[col].is_zero():
                    work[i] = (rem, [x - q * y for x, y in zip(e, pexpr)])
                else:
                    ni, nj = _combine_rows(prow, r, prow[col], r[col])
                    ei, ej = _combine_rows(pexpr, e, prow[col], r[col])
                    norm2, unit2 = ni[col].unit_normalize()
                    u2 = LaurentPoly.make(field,
                                          {-unit2.low: field.one / unit2.coeffs[0][1]})
                    prow = [u2 * x for x in ni]
                    pexpr = [u2 * x for x in ei]
                    pivots[col] = (prow, pexpr)
                    work[i] = (nj, ej)
    return pivots


def row_module_generator(gens: list[LaurentMatrix], n: int):
    """A single n x n matrix G with sum of row modules of ``gens`` equal to
    the row module of G, plus expressions of G's rows over the stacked
    generator rows: returns (G, expr) with expr[r] a list of (gen_index,
    row_index, LaurentPoly) triples."""
    if not gens:
        raise LaurentError("no generators")
    field = gens[0].entries[0][0].field
    for m in gens:
        if (m.rows, m.cols) != (n, n):
            raise LaurentError("all generators must be n x n")
    stacked = []
    origin = []
    for gi, m in enumerate(gens):
        for ri in range(n):
            stacked.append(list(m.entries[ri]))
            origin.append((gi, ri))
    pivots = _triangularize(field, stacked, n)
    z = LaurentPoly.zero(field)
    grid = [[z] * n for _ in range(n)]
    exprs: list[list] = [[] for _ in range(n)]
    for col, (row, expr) in pivots.items():
        grid[col] = row
        exprs[col] = [(origin[i][0], origin[i][1], c)
                      for i, c in enumerate(expr) if not c.is_zero()]
    return LaurentMatrix.make(grid), exprs


def left_divide(A: LaurentMatrix, G: LaurentMatrix) -> Optional[LaurentMatrix]:
    """X with X*G = A if every row of A lies in the row module of G
    (G triangular with pivot r on its diagonal, as produced above)."""
    if A.cols != G.cols or G.rows != G.cols:
        raise LaurentError("dimension mismatch")
    field = A.entries[0][0].field
    n = G.cols
    z = LaurentPoly.zero(field)
    xrows = []
    for arow in A.entries:
        rem = list(arow)
        xr = [z] * G.rows
        for col in range(n):
            if rem[col].is_zero():
                continue
            piv = G.entries[col][col]
            if piv.is_zero():
                return None
            q = exact_divide(rem[col], piv)
            if q is None:
                return None
            xr[col] = q
            rem = [x - q * y for x, y in zip(rem, G.entries[col])]
        if any(not x.is_zero() for x in rem):
            return None
        xrows.append(xr)
    return LaurentMatrix.make(xrows)


_TERM = re.compile(r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*\*?\s*)?"
                   r"(?:(?P<var>x)\s*(?:\^\s*(?P<exp>-?\d+))?)?\s*")


def parse_laurent(field, text: str) -> LaurentPoly:
    """Parse a Laurent literal such as ``3*x^-2 + 1 - x^4``."""
    pos = 0
    acc: dict = {}
    zero = field.zero
    saw_any = False
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise LaurentError(f"bad Laurent literal near offset {pos}: {text[pos:]!r}")
        if m.group("coeff") is None and m.group("var") is None:
            if text[pos:].strip():
                raise LaurentError(f"bad Laurent literal near offset {pos}")
            break
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("sign") is None and saw_any:
            raise LaurentError("terms must be separated by + or -")
        from fractions import Fraction
        coeff = field.of(Fraction(m.group("coeff"))) if m.group("coeff") else field.one
        exp = 0
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        acc[exp] = acc.get(exp, zero) + (coeff if sign == 1 else -coeff)
        pos = m.end()
        saw_any = True
    return LaurentPoly.make(field, acc)


def format_laurent(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    from fractions import Fraction
    pieces = []
    for e, c in reversed(p.coeffs):
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        if e == 0:
            body = f"{mag}"
        else:
            xs = "x" if e == 1 else f"x^{e}"
            body = xs if mag == p.field.one else f"{mag}*{xs}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)
