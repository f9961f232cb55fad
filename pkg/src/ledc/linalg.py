"""Dense matrices over a prime field.

Matrices are immutable (flat row-major tuple of residues) and all
operations are pure functions returning fresh values. Sizes here are
desk scale, so everything is schoolbook Gaussian elimination with a
deterministic pivot rule: the first nonzero entry in column order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    DimensionMismatch,
    DuplicatePoint,
    Inconsistent,
    IndexOutOfRange,
    NotSquare,
    Underdetermined,
)
from .field import Felt, PrimeField, inv

# ---------- type ----------


@dataclass(frozen=True)
class MatrixGF:
    """rows x cols matrix over GF(q), entries stored row-major."""

    field: PrimeField
    rows: int
    cols: int
    entries: tuple[Felt, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    def at(self, i: int, j: int) -> Felt:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Felt, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Felt]]:
        return [list(self.row(i)) for i in range(self.rows)]


def make_matrix(f: PrimeField, rows: Sequence[Sequence[int]]) -> MatrixGF:
    """Build a matrix from nested sequences, reducing entries mod q."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    flat: list[Felt] = []
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch("ragged rows")
        flat.extend(v % f.q for v in r)
    return MatrixGF(f, nrows, ncols, tuple(flat))


def identity(f: PrimeField, n: int) -> MatrixGF:
    return make_matrix(f, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def zeros(f: PrimeField, rows: int, cols: int) -> MatrixGF:
    return MatrixGF(f, rows, cols, (0,) * (rows * cols))


def transpose(m: MatrixGF) -> MatrixGF:
    return make_matrix(m.field, [[m.at(i, j) for i in range(m.rows)] for j in range(m.cols)])


# ---------- elimination ----------


def rref(m: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    """Reduced row-echelon form; returns (rref, rank, pivot columns)."""
    q = m.field.q
    rows = m.to_rows()
    pivot_cols: list[int] = []
    pr = 0
    for c in range(m.cols):
        if pr == m.rows:
            break
        # first nonzero at or below the current pivot row
        src = next((r for r in range(pr, m.rows) if rows[r][c]), None)
        if src is None:
            continue
        rows[pr], rows[src] = rows[src], rows[pr]
        piv_inv = inv(m.field, rows[pr][c])
        rows[pr] = [v * piv_inv % q for v in rows[pr]]
        for r in range(m.rows):
            if r != pr and rows[r][c]:
                factor = rows[r][c]
                rows[r] = [(v - factor * p) % q for v, p in zip(rows[r], rows[pr])]
        pivot_cols.append(c)
        pr += 1
    return make_matrix(m.field, rows) if m.rows else m, pr, pivot_cols


def rank(m: MatrixGF) -> int:
    return rref(m)[1]


def det(m: MatrixGF) -> Felt:
    """Determinant via elimination with swap-sign tracking."""
    if m.rows != m.cols:
        raise NotSquare(f"determinant of {m.rows}x{m.cols} matrix")
    q = m.field.q
    rows = m.to_rows()
    sign = 1
    for c in range(m.cols):
        src = next((r for r in range(c, m.rows) if rows[r][c]), None)
        if src is None:
            return 0
        if src != c:
            rows[c], rows[src] = rows[src], rows[c]
            sign = -sign
        piv_inv = inv(m.field, rows[c][c])
        for r in range(c + 1, m.rows):
            if rows[r][c]:
                factor = rows[r][c] * piv_inv % q
                rows[r] = [(v - factor * p) % q for v, p in zip(rows[r], rows[c])]
    prod = 1
    for i in range(m.rows):
        prod = prod * rows[i][i] % q
    return prod * sign % q


def nullspace(m: MatrixGF) -> list[list[Felt]]:
    """Basis of the right kernel {v : m v = 0}.

    One basis vector per free column, in increasing column order, with
    the free variable set to 1.
    """
    q = m.field.q
    reduced, _, pivot_cols = rref(m)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [0] * m.cols
        v[free] = 1
        for r, pc in enumerate(pivot_cols):
            v[pc] = (-reduced.at(r, free)) % q
        basis.append(v)
    return basis


def solve(a: MatrixGF, b: Sequence[Felt]) -> list[Felt]:
    """Solve x a = b for the row vector x (length = a.rows)."""
    if len(b) != a.cols:
        raise DimensionMismatch(f"rhs length {len(b)} != {a.cols} columns")
    q = a.field.q
    # Transpose to the column convention and eliminate the augmented system.
    aug = make_matrix(
        a.field,
        [[a.at(i, j) for i in range(a.rows)] + [b[j] % q] for j in range(a.cols)],
    )
    reduced, _, pivot_cols = rref(aug)
    if a.rows in pivot_cols:
        raise Inconsistent("no x satisfies x a = b")
    if len(pivot_cols) < a.rows:
        raise Underdetermined(f"rank {len(pivot_cols)} < {a.rows} unknowns")
    x = [0] * a.rows
    for r, pc in enumerate(pivot_cols):
        x[pc] = reduced.at(r, a.rows)
    return x


# ---------- builders ----------


def vandermonde(f: PrimeField, points: Sequence[Felt], k: int) -> MatrixGF:
    """k x n matrix with entry (i, j) = points[j]^i."""
    pts = [p % f.q for p in points]
    if len(set(pts)) != len(pts):
        raise DuplicatePoint(f"evaluation points not distinct: {pts}")
    if k > len(pts):
        raise DimensionMismatch(f"k={k} exceeds {len(pts)} points")
    flat: list[Felt] = []
    current = [1] * len(pts)
    for _ in range(k):
        flat.extend(current)
        current = [c * p % f.q for c, p in zip(current, pts)]
    return MatrixGF(f, k, len(pts), tuple(flat))


def submatrix(m: MatrixGF, row_idx: Sequence[int], col_idx: Sequence[int]) -> MatrixGF:
    """Extract rows and columns by 0-based index lists, in the given order."""
    for i in row_idx:
        if not 0 <= i < m.rows:
            raise IndexOutOfRange(f"row {i} outside 0..{m.rows - 1}")
    for j in col_idx:
        if not 0 <= j < m.cols:
            raise IndexOutOfRange(f"column {j} outside 0..{m.cols - 1}")
    entries = tuple(m.at(i, j) for i in row_idx for j in col_idx)
    return MatrixGF(m.field, len(row_idx), len(col_idx), entries)


def block_assemble(blocks: Sequence[Sequence[Optional[MatrixGF]]]) -> MatrixGF:
    """Assemble a block grid into one matrix; None cells are zero blocks.

    Zero-block dimensions are inferred from the other blocks in the same
    block row and block column, so every grid row and column must hold at
    least one concrete matrix.
    """
    if not blocks or not blocks[0]:
        raise DimensionMismatch("empty block grid")
    ncols_grid = len(blocks[0])
    if any(len(brow) != ncols_grid for brow in blocks):
        raise DimensionMismatch("ragged block grid")
    f = next((b.field for brow in blocks for b in brow if b is not None), None)
    if f is None:
        raise DimensionMismatch("all blocks are zero placeholders")
    heights = [None] * len(blocks)
    widths: list[Optional[int]] = [None] * ncols_grid
    for i, brow in enumerate(blocks):
        for j, b in enumerate(brow):
            if b is None:
                continue
            if heights[i] is None:
                heights[i] = b.rows
            elif heights[i] != b.rows:
                raise DimensionMismatch(f"block row {i} mixes heights")
            if widths[j] is None:
                widths[j] = b.cols
            elif widths[j] != b.cols:
                raise DimensionMismatch(f"block column {j} mixes widths")
    if any(h is None for h in heights) or any(w is None for w in widths):
        raise DimensionMismatch("a block row or column has no concrete matrix")
    out_rows: list[list[Felt]] = []
    for i, brow in enumerate(blocks):
        for r in range(heights[i]):
            row: list[Felt] = []
            for j, b in enumerate(brow):
                if b is None:
                    row.extend([0] * widths[j])
                else:
                    row.extend(b.row(r))
            out_rows.append(row)
    return make_matrix(f, out_rows)


def row_vec_mul(x: Sequence[Felt], m: MatrixGF) -> list[Felt]:
    """Row vector times matrix: (x m)_j = sum_i x_i m_ij."""
    if len(x) != m.rows:
        raise DimensionMismatch(f"vector length {len(x)} != {m.rows} rows")
    q = m.field.q
    out = [0] * m.cols
    for i, xi in enumerate(x):
        if xi % q == 0:
            continue
        base = i * m.cols
        for j in range(m.cols):
            out[j] += xi * m.entries[base + j]
    return [v % q for v in out]
