"""Exact dense linear algebra over GF(2) on bit-packed matrices.

Rows are vectors in F2^cols, packed 64 columns per uint64 word.  All
eliminations pivot leftmost-column-first with first-row-wins tie breaking,
and bases are returned in reduced row-echelon form, so identical inputs
yield bit-identical outputs across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

WORD_BITS = 64


def _n_words(cols: int) -> int:
    return max(1, (cols + WORD_BITS - 1) // WORD_BITS)


def pack_rows(dense: np.ndarray) -> np.ndarray:
    """Pack a (rows, cols) 0/1 array into (rows, words) uint64, little-endian bits."""
    dense = np.asarray(dense, dtype=np.uint8)
    if dense.ndim == 1:
        dense = dense[None, :]
    rows, cols = dense.shape
    words = _n_words(cols)
    padded = np.zeros((rows, words * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = dense & 1
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64).copy()


def unpack_rows(data: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of pack_rows: (rows, words) uint64 -> (rows, cols) uint8."""
    raw = np.unpackbits(data.view(np.uint8), axis=1, bitorder="little")
    return np.ascontiguousarray(raw[:, :cols])


@dataclass(frozen=True)
class BitMatrix:
    """Dense bit-packed matrix over F2; rows are vectors in F2^cols."""

    rows: int
    cols: int
    data: np.ndarray  # (rows, words) uint64; padding bits beyond cols are zero

    def __post_init__(self):
        self.data.setflags(write=False)

    @staticmethod
    def zeros(rows: int, cols: int) -> "BitMatrix":
        return BitMatrix(rows, cols, np.zeros((rows, _n_words(cols)), dtype=np.uint64))

    @staticmethod
    def identity(n: int) -> "BitMatrix":
        return BitMatrix.from_dense(np.eye(n, dtype=np.uint8))

    @staticmethod
    def from_dense(dense: np.ndarray) -> "BitMatrix":
        dense = np.asarray(dense, dtype=np.uint8)
        if dense.ndim == 1:
            dense = dense[None, :]
        rows, cols = dense.shape
        if rows == 0:
            return BitMatrix.zeros(0, cols)
        return BitMatrix(rows, cols, pack_rows(dense))

    def to_dense(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        return unpack_rows(self.data, self.cols)

    def row_dense(self, i: int) -> np.ndarray:
        return unpack_rows(self.data[i : i + 1], self.cols)[0]

    def take_rows(self, idx) -> "BitMatrix":
        idx = np.asarray(idx, dtype=np.int64)
        return BitMatrix(len(idx), self.cols, self.data[idx].copy())

    def take_cols(self, cols_idx) -> "BitMatrix":
        cols_idx = np.asarray(cols_idx, dtype=np.int64)
        if self.rows == 0:
            return BitMatrix.zeros(0, len(cols_idx))
        dense = self.to_dense()
        return BitMatrix.from_dense(dense[:, cols_idx])

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.data, other.data)
        )


def stack(u: BitMatrix, w: BitMatrix) -> BitMatrix:
    if u.cols != w.cols:
        raise ValueError(f"column mismatch: {u.cols} != {w.cols}")
    return BitMatrix(u.rows + w.rows, u.cols, np.vstack([u.data, w.data]))


def _get_col(data: np.ndarray, c: int) -> np.ndarray:
    w, b = divmod(c, WORD_BITS)
    return (data[:, w] >> np.uint64(b)) & np.uint64(1)


def _sweep(data: np.ndarray, pivot_cols) -> list[int]:
    """In-place Gauss-Jordan sweep over the given columns.

    Pivot rows are swapped to the top in discovery order; every other row
    with a 1 in a pivot column is cleared.  Returns the pivot columns.
    """
    nrows = data.shape[0]
    r = 0
    pivots: list[int] = []
    for c in pivot_cols:
        if r == nrows:
            break
        col = _get_col(data[r:], c)
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            data[[r, p]] = data[[p, r]]
        hits = np.nonzero(_get_col(data, c))[0]
        hits = hits[hits != r]
        if hits.size:
            data[hits] ^= data[r]
        pivots.append(c)
        r += 1
    return pivots


def _rref(m: BitMatrix) -> BitMatrix:
    """Reduced row-echelon basis of the row space (zero rows dropped)."""
    if m.rows == 0:
        return m
    work = m.data.copy()
    pivots = _sweep(work, range(m.cols))
    return BitMatrix(len(pivots), m.cols, work[: len(pivots)].copy())


def rank(m: BitMatrix) -> int:
    """F2 row rank; does not mutate the input."""
    if m.rows == 0 or m.is_zero():
        return 0
    work = m.data.copy()
    return len(_sweep(work, range(m.cols)))


def row_basis(m: BitMatrix) -> BitMatrix:
    """Canonical (RREF) basis of rowspace(m)."""
    return _rref(m)


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of the left kernel {v in F2^rows : v . M = 0}, in RREF.

    Row count equals rows - rank(m).
    """
    n = m.rows
    if n == 0:
        return BitMatrix.zeros(0, 0)
    aug = stack_cols(m, BitMatrix.identity(n))
    work = aug.data.copy()
    pivots = _sweep(work, range(m.cols))
    r = len(pivots)
    tail = BitMatrix(n - r, aug.cols, work[r:].copy())
    combos = tail.take_cols(np.arange(m.cols, m.cols + n))
    return _rref(combos)


def stack_cols(u: BitMatrix, w: BitMatrix) -> BitMatrix:
    """Horizontal concatenation [u | w]."""
    if u.rows != w.rows:
        raise ValueError("row mismatch")
    du = u.to_dense()
    dw = w.to_dense()
    return BitMatrix.from_dense(np.hstack([du, dw]))


def coordinate_section(u: BitMatrix, coords) -> BitMatrix:
    """Basis of {v in rowspace(u) : v is zero outside coords}, in RREF.

    Computed by sweeping pivots over the complementary columns; the rows
    that survive with zero complement are exactly the section.
    """
    coords = np.asarray(sorted(set(int(c) for c in coords)), dtype=np.int64)
    mask = np.zeros(u.cols, dtype=bool)
    mask[coords] = True
    complement = np.nonzero(~mask)[0]
    if u.rows == 0:
        return BitMatrix.zeros(0, u.cols)
    work = u.data.copy()
    pivots = _sweep(work, complement.tolist())
    r = len(pivots)
    tail = BitMatrix(u.rows - r, u.cols, work[r:].copy())
    return _rref(tail)


def intersect(u: BitMatrix, w: BitMatrix) -> BitMatrix:
    """Basis of rowspace(u) ∩ rowspace(w) (Zassenhaus construction), in RREF."""
    if u.cols != w.cols:
        raise ValueError("column mismatch")
    n = u.cols
    left = stack(u, w)
    right = stack(u, BitMatrix.zeros(w.rows, n))
    work = stack_cols(left, right).data.copy()
    pivots = _sweep(work, range(n))
    r = len(pivots)
    tail = BitMatrix(left.rows - r, 2 * n, work[r:].copy())
    return _rref(tail.take_cols(np.arange(n, 2 * n)))


def quotient_dim(u: BitMatrix, w: BitMatrix) -> int:
    """dim((U + W) / W) = rank(stack(u, w)) - rank(w)."""
    if u.cols != w.cols:
        raise ValueError("column mismatch")
    return rank(stack(u, w)) - rank(w)


def membership(v: np.ndarray, u: BitMatrix) -> bool:
    """True iff the bit vector v lies in rowspace(u)."""
    v = np.asarray(v, dtype=np.uint8)
    if v.shape != (u.cols,):
        raise ValueError("length mismatch")
    vm = BitMatrix.from_dense(v)
    return rank(stack(u, vm)) == rank(u)


class RowSolver:
    """Echelon form of a matrix with combination tracking.

    Supports expressing vectors over the original rows and incremental
    membership tests; used for generator extraction and basis search.
    """

    def __init__(self, m: BitMatrix):
        self.cols = m.cols
        self.nrows = m.rows
        aug = stack_cols(m, BitMatrix.identity(m.rows)) if m.rows else m
        work = aug.data.copy() if m.rows else np.zeros((0, 1), dtype=np.uint64)
        pivots = _sweep(work, range(m.cols)) if m.rows else []
        self._pivots = pivots
        self._work = work
        self._rank = len(pivots)

    @property
    def rank(self) -> int:
        return self._rank

    def express(self, v: np.ndarray) -> np.ndarray | None:
        """Coefficients x over the original rows with x . M = v, or None."""
        v = np.asarray(v, dtype=np.uint8)
        row = pack_rows(np.concatenate([v, np.zeros(self.nrows, dtype=np.uint8)]))[0]
        total = self.cols + self.nrows
        for i, c in enumerate(self._pivots):
            w, b = divmod(c, WORD_BITS)
            if (int(row[w]) >> b) & 1:
                row = row ^ self._work[i]
        dense = unpack_rows(row[None, :], total)[0]
        if dense[: self.cols].any():
            return None
        return dense[self.cols :]


class RowBasis:
    """Incremental echelon basis accumulator over F2^n."""

    def __init__(self, cols: int):
        self.cols = cols
        self.words = _n_words(cols)
        self._rows: list[np.ndarray] = []
        self._pivots: list[int] = []

    def _reduce(self, row: np.ndarray) -> np.ndarray:
        for piv, r in zip(self._pivots, self._rows):
            w, b = divmod(piv, WORD_BITS)
            if (int(row[w]) >> b) & 1:
                row = row ^ r
        return row

    def add_dense(self, v: np.ndarray) -> bool:
        return self.add_packed(pack_rows(np.asarray(v, dtype=np.uint8))[0])

    def add_packed(self, row: np.ndarray) -> bool:
        """Insert a packed row; returns True if it enlarged the span."""
        row = self._reduce(row.copy())
        if not row.any():
            return False
        nz_word = int(np.nonzero(row)[0][0])
        low_bit = int(row[nz_word]) & -int(row[nz_word])
        piv = nz_word * WORD_BITS + low_bit.bit_length() - 1
        self._rows.append(row)
        self._pivots.append(piv)
        return True

    def contains_dense(self, v: np.ndarray) -> bool:
        row = self._reduce(pack_rows(np.asarray(v, dtype=np.uint8))[0].copy())
        return not row.any()

    @property
    def dim(self) -> int:
        return len(self._rows)

    def to_matrix(self) -> BitMatrix:
        if not self._rows:
            return BitMatrix.zeros(0, self.cols)
        return _rref(BitMatrix(len(self._rows), self.cols, np.vstack(self._rows)))
