"""Exact dense linear algebra over any FieldSpec.

Rank uses Gaussian elimination over finite fields and fraction-free
(Bareiss) elimination on cleared integers over the rationals, so entries
never grow through rational arithmetic.  Kernel bases come from the reduced
row echelon form and are canonical: one vector per free column, unit in the
free position, ordered by free column index.
"""

from __future__ import annotations

from math import gcd, lcm

from .fields import FieldElement, FieldSpec


class ExactMatrix:
    """Immutable dense matrix with entries in one field."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, rows_of_entries):
        rows = []
        for row in rows_of_entries:
            rows.append(tuple(spec.element(v) for v in row))
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        self.spec = spec
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(rows)

    @classmethod
    def zero(cls, spec, rows, cols):
        z = spec.zero
        return cls(spec, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, spec, n):
        z, o = spec.zero, spec.one
        return cls(spec, [[o if i == j else z for j in range(n)] for i in range(n)])

    def raw_rows(self):
        return [list(e.raw for e in row) for row in self.entries]

    def apply(self, vector):
        """Matrix times column vector, exact."""
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch")
        vec = [self.spec.element(v) for v in vector]
        out = []
        for row in self.entries:
            acc = self.spec.zero
            for a, b in zip(row, vec):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} over {self.spec!r})"


def _gauss_rank(ops, rows):
    sub, mul, inv, is_zero = ops.sub, ops.mul, ops.inv, ops.is_zero
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not is_zero(rows[i][col]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        pinv = inv(prow[col])
        for i in range(r + 1, len(rows)):
            row = rows[i]
            if is_zero(row[col]):
                continue
            factor = mul(row[col], pinv)
            for j in range(col, ncols):
                row[j] = sub(row[j], mul(factor, prow[j]))
        r += 1
        if r == len(rows):
            break
    return r


def _clear_row(row):
    denom = lcm(*(f.denominator for f in row)) if row else 1
    ints = [int(f * denom) for f in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _rank_bareiss(rows):
    """Fraction-free elimination on integer rows; exact rank over QQ."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank_ = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for i in range(rank_, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank_], rows[pivot] = rows[pivot], rows[rank_]
        prow = rows[rank_]
        for i in range(rank_ + 1, len(rows)):
            row = rows[i]
            for j in range(col + 1, ncols):
                row[j] = (prow[col] * row[j] - row[col] * prow[j]) // prev
            row[col] = 0
        prev = prow[col]
        rank_ += 1
        if rank_ == len(rows):
            break
    return rank_


def rank(matrix: ExactMatrix) -> int:
    """Exact rank over the matrix's field."""
    return rank_of_raw_rows(matrix.spec, matrix.raw_rows())


def rank_of_raw_rows(spec: FieldSpec, raw_rows) -> int:
    """Rank of rows given as raw representation lists.

    Fast path for callers that cache evaluation rows; rows are copied
    before elimination.
    """
    if spec.kind == "rational":
        return _rank_bareiss([_clear_row(list(r)) for r in raw_rows])
    return _gauss_rank(spec.ops, [list(r) for r in raw_rows])


def _rref(ops, rows):
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    sub, mul, inv, is_zero = ops.sub, ops.mul, ops.inv, ops.is_zero
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not is_zero(rows[i][col]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        pinv = inv(prow[col])
        for j in range(col, ncols):
            prow[j] = mul(prow[j], pinv)
        for i in range(len(rows)):
            if i == r:
                continue
            row = rows[i]
            if is_zero(row[col]):
                continue
            factor = row[col]
            for j in range(col, ncols):
                row[j] = sub(row[j], mul(factor, prow[j]))
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(matrix: ExactMatrix):
    """Canonical basis of the right kernel, size cols - rank.

    One vector per free column in ascending order; each has a one in its
    free position and the pivot rows filled in, which fixes the basis
    uniquely given the matrix.
    """
    spec = matrix.spec
    ops = spec.ops
    rows, pivots = _rref(ops, matrix.raw_rows())
    ncols = matrix.cols
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        vec = [ops.zero] * ncols
        vec[fc] = ops.one
        for r_i, pc in enumerate(pivots):
            vec[pc] = ops.neg(rows[r_i][fc])
        basis.append(tuple(FieldElement._make(spec, v) for v in vec))
    return basis
