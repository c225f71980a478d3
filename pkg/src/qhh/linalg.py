"""Exact sparse linear algebra over GF(p) and Q.

Rows are dicts ``{column: value}``.  Elimination is row-incremental: each
row is reduced against the existing pivot rows by its leading column.  Over
Q rows are kept as primitive integer vectors (fraction-free elimination);
Fractions only appear when the reduced echelon form is requested.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .field import Rationals


class ShapeError(ValueError):
    pass


class SparseMatrix:
    def __init__(self, nrows: int, ncols: int, field, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    @classmethod
    def from_rows(cls, rows, ncols, field):
        rows = [{c: v for c, v in r.items() if v != 0} for r in rows]
        return cls(len(rows), ncols, field, rows)

    @classmethod
    def from_columns(cls, columns, nrows, field):
        m = cls(nrows, len(columns), field)
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v != 0:
                    m.rows[i][j] = v
        return m

    @classmethod
    def from_dense(cls, dense, field):
        rows = [{j: field(v) for j, v in enumerate(r) if field(v) != 0} for r in dense]
        ncols = len(dense[0]) if dense else 0
        return cls(len(rows), ncols, field, rows)

    @classmethod
    def identity(cls, n, field):
        return cls(n, n, field, [{i: field.one} for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, self.field.zero)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def to_dense(self):
        out = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def transpose(self):
        t = SparseMatrix(self.ncols, self.nrows, self.field)
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                t.rows[j][i] = v
        return t

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        f = self.field
        out = SparseMatrix(self.nrows, other.ncols, f)
        for i, r in enumerate(self.rows):
            acc = {}
            for k, a in r.items():
                for j, b in other.rows[k].items():
                    acc[j] = acc.get(j, f.zero) + a * b
            out.rows[i] = {j: f.reduce(v) for j, v in acc.items() if f.reduce(v) != 0}
        return out

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()}, {self.field.name})"


def _to_int_row(row):
    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    out = {c: int(Fraction(v) * den) for c, v in row.items()}
    return _primitive(out)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    if row and row[min(row)] < 0:
        row = {c: -v for c, v in row.items()}
    return row


class RowSpace:
    """Incrementally maintained echelon basis of a row space."""

    def __init__(self, field):
        self.field = field
        self.pivots = {}
        self._q = isinstance(field, Rationals)

    def __len__(self):
        return len(self.pivots)

    def _reduce(self, row):
        if self._q:
            row = _to_int_row(row)
            while row:
                c = min(row)
                piv = self.pivots.get(c)
                if piv is None:
                    return row
                a, b = piv[c], row[c]
                g = gcd(a, b)
                sa, sb = a // g, b // g
                new = {k: sa * v for k, v in row.items()}
                for k, v in piv.items():
                    w = new.get(k, 0) - sb * v
                    if w:
                        new[k] = w
                    else:
                        new.pop(k, None)
                row = _primitive(new) if new else new
            return row
        p = self.field.p
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                return {k: (v * inv) % p for k, v in row.items()}
            b = row[c]
            for k, v in piv.items():
                w = (row.get(k, 0) - b * v) % p
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
        return row

    def contains(self, row) -> bool:
        return not self._reduce(dict(row))

    def add(self, row) -> bool:
        """Insert ``row``; True if it was independent of the current span."""
        r = self._reduce(dict(row))
        if not r:
            return False
        self.pivots[min(r)] = r
        return True


def _echelon(M: SparseMatrix):
    """Pivot rows keyed by leading column."""
    space = RowSpace(M.field)
    for r in M.rows:
        if r:
            space.add(r)
    return space.pivots


def rank(M: SparseMatrix) -> int:
    return len(_echelon(M))


def rref(M: SparseMatrix):
    """Reduced row echelon form: ``(rows, pivot_columns)`` sorted by pivot."""
    f = M.field
    pivots = _echelon(M)
    cols = sorted(pivots)
    rows = {}
    for c in cols:
        r = pivots[c]
        if isinstance(f, Rationals):
            lead = Fraction(r[c])
            rows[c] = {k: Fraction(v) / lead for k, v in r.items()}
        else:
            rows[c] = dict(r)
    # back substitution, last pivot first
    for c in reversed(cols):
        pr = rows[c]
        for c2 in cols:
            if c2 >= c:
                break
            r2 = rows[c2]
            b = r2.get(c)
            if not b:
                continue
            for k, v in pr.items():
                w = f.reduce(r2.get(k, f.zero) - b * v)
                if w != 0:
                    r2[k] = w
                else:
                    r2.pop(k, None)
    return [rows[c] for c in cols], cols


def row_basis(M: SparseMatrix):
    rows, _ = rref(M)
    return rows


def rank_and_kernel(M: SparseMatrix):
    """``(rank, nullity, kernel basis)``; the basis vectors are dicts indexed by
    column, one per free column in increasing order, each with a 1 in its
    free column (reduced echelon form)."""
    f = M.field
    rows, pivcols = rref(M)
    pivset = set(pivcols)
    free = [j for j in range(M.ncols) if j not in pivset]
    fidx = {j: n for n, j in enumerate(free)}
    kernel = [{j: f.one} for j in free]
    for r, c in zip(rows, pivcols):
        for k, v in r.items():
            if k != c:
                kernel[fidx[k]][c] = f.reduce(-v)
    return len(pivcols), len(free), kernel


def in_span(basis_rows, vec, field) -> bool:
    space = RowSpace(field)
    for r in basis_rows:
        space.add(r)
    return space.contains(vec)
