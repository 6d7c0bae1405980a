"""Constraint subspace machinery.

A constraint is a subset of stabilizers multiplying to the identity; the
constraint subspace C is the left kernel of the stabilizer row matrix,
living in F2^|S|.  Local constraints are mined from translated windows;
topological ones are those destroyed by a change of boundary conditions.
The cut-topological dimension drives the lower bound on recoverable
information.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import f2core, models
from .f2core import BitMatrix
from .models import StabilizerCode
from .regions import Region, classify_cut

DEFAULT_MINING_WINDOW = 3


@dataclass
class ConstraintSpace:
    basis: BitMatrix  # rows select stabilizer subsets multiplying to identity
    tags: list

    @property
    def dim(self) -> int:
        return self.basis.rows


def constraint_space(code: StabilizerCode) -> ConstraintSpace:
    """Kernel of the |S| x 2N stabilizer row matrix (tags left unclassified)."""
    if "constraint_space" not in code.cache:
        basis = f2core.kernel_basis(code.matrix)
        code.cache["constraint_space"] = ConstraintSpace(basis, ["unclassified"] * basis.rows)
    return code.cache["constraint_space"]


def classify_constraint_tags(code: StabilizerCode, twins=None) -> ConstraintSpace:
    """An adapted constraint basis with per-row tags.

    Rows come in three layers: the mined/declared local span, then
    constraints surviving at least one supplied boundary-change twin
    (slideable non-local classes, tagged unclassified), then the
    remainder, which no equivalent change keeps (topological).
    """
    space = constraint_space(code)
    nstab = code.n_stabilizers
    acc = f2core.RowBasis(nstab)
    rows, tags = [], []

    def extend(matrix_rows, tag):
        for row in matrix_rows:
            if acc.add_dense(row):
                rows.append(row)
                tags.append(tag)

    extend(local_constraint_miner(code).to_dense(), "local-mined")
    declared = []
    for sel in models.declared_local_constraints(code):
        full = np.zeros(nstab, dtype=np.uint8)
        full[sel] = 1
        declared.append(full)
    extend(declared, "declared-local")
    if twins:
        for twin in twins:
            extend(surviving_constraints(code, twin).to_dense(), "unclassified")
    extend(space.basis.to_dense(), "topological" if twins else "unclassified")
    basis = BitMatrix.from_dense(np.array(rows, dtype=np.uint8)) if rows else BitMatrix.zeros(0, nstab)
    assert basis.rows == space.dim
    return ConstraintSpace(basis, tags)


def is_constraint(code: StabilizerCode, selection) -> bool:
    """Does the given stabilizer subset multiply to the identity operator?"""
    sel = np.zeros(code.n_stabilizers, dtype=np.uint8)
    sel[np.asarray(list(selection), dtype=np.int64)] ^= 1
    acc = np.zeros(2 * code.n_qubits, dtype=np.uint8)
    for i in np.nonzero(sel)[0]:
        acc ^= code.matrix.row_dense(int(i))
    return not acc.any()


# ---------------------------------------------------------------------------
# local constraint mining

def _stab_fits(cells: np.ndarray, origin: np.ndarray, w: int, L: int, wrap: bool) -> bool:
    rel = cells - origin[None, :]
    if wrap:
        rel = rel % L
    return bool(np.all(rel >= 0) and np.all(rel < w))


def _block_translation(code: StabilizerCode, t: np.ndarray) -> np.ndarray:
    """Stabilizer index permutation under lattice translation by t (pbc)."""
    L, d = code.L, code.dim
    n_cells = L**d
    shape = (L,) * d
    grid = np.indices(shape).reshape(d, -1).T
    moved = (grid + t[None, :]) % L
    flat = np.zeros(n_cells, dtype=np.int64)
    for i, pos in enumerate(moved):
        f = 0
        for c in pos:
            f = f * L + int(c)
        flat[i] = f
    n_blocks = code.n_stabilizers // n_cells
    perm = np.concatenate([b * n_cells + flat for b in range(n_blocks)])
    return perm


def local_constraint_miner(code: StabilizerCode, window: int = DEFAULT_MINING_WINDOW) -> BitMatrix:
    """Span of all constraints supported within a translated window box.

    For pbc codes the window kernel is computed once at the origin and
    translated (builders are translation covariant); obc windows are
    scanned directly.  The result is always a subspace of the constraint
    space.
    """
    key = ("mined", window)
    if key in code.cache:
        return code.cache[key]
    L = code.L
    w = min(window, L - 1)
    nstab = code.n_stabilizers
    cells = code.stab_cells()
    d = code.dim
    rows = []
    if code.bc == "pbc" and nstab % (L**d) == 0:
        origin = np.zeros(d, dtype=np.int64)
        members = [i for i in range(nstab) if _stab_fits(cells[i], origin, w, L, wrap=True)]
        if members:
            kern = f2core.kernel_basis(code.matrix.take_rows(members))
            kdense = kern.to_dense()
            sparse = [
                np.array(members, dtype=np.int64)[np.nonzero(kdense[j])[0]]
                for j in range(kern.rows)
            ]
            for t in itertools.product(range(L), repeat=d):
                perm = _block_translation(code, np.array(t, dtype=np.int64))
                for s in sparse:
                    full = np.zeros(nstab, dtype=np.uint8)
                    np.bitwise_xor.at(full, perm[s], 1)
                    rows.append(full)
    else:
        for o in itertools.product(range(L - w + 1), repeat=d):
            origin = np.array(o, dtype=np.int64)
            members = [i for i in range(nstab) if _stab_fits(cells[i], origin, w, L, wrap=False)]
            if not members:
                continue
            kern = f2core.kernel_basis(code.matrix.take_rows(members))
            kdense = kern.to_dense()
            for j in range(kern.rows):
                full = np.zeros(nstab, dtype=np.uint8)
                full[np.array(members, dtype=np.int64)[np.nonzero(kdense[j])[0]]] = 1
                rows.append(full)
    if rows:
        out = f2core.row_basis(BitMatrix.from_dense(np.array(rows, dtype=np.uint8)))
    else:
        out = BitMatrix.zeros(0, nstab)
    code.cache[key] = out
    return out


def _nontop_rowbasis(code: StabilizerCode, window: int = DEFAULT_MINING_WINDOW) -> f2core.RowBasis:
    basis = f2core.RowBasis(code.n_stabilizers)
    mined = local_constraint_miner(code, window)
    for i in range(mined.rows):
        basis.add_packed(mined.data[i])
    for sel in models.declared_local_constraints(code):
        full = np.zeros(code.n_stabilizers, dtype=np.uint8)
        full[sel] = 1
        basis.add_dense(full)
    return basis


def nontop_space(code: StabilizerCode, window: int = DEFAULT_MINING_WINDOW) -> BitMatrix:
    """The non-topological constraint subspace used by the minimization.

    pbc: span of declared local generators plus mined local constraints.
    obc (or any code born without wrapping): the full constraint space,
    since no boundary change remains to destroy anything.
    """
    key = ("nontop", window)
    if key in code.cache:
        return code.cache[key]
    if code.bc == "pbc":
        out = _nontop_rowbasis(code, window).to_matrix()
    else:
        out = constraint_space(code).basis
    code.cache[key] = out
    return out


# ---------------------------------------------------------------------------
# topological constraints

def _check_aligned(code_pbc: StabilizerCode, code_obc: StabilizerCode) -> None:
    if code_pbc.n_stabilizers != code_obc.n_stabilizers or code_pbc.n_qubits != code_obc.n_qubits:
        raise ValueError("stabilizer sets are not index-aligned")
    a = code_pbc.matrix.data
    b = code_obc.matrix.data
    if np.any(b & ~a):
        raise ValueError("obc stabilizers must have support contained in their pbc partners")


def surviving_constraints(code_pbc: StabilizerCode, code_obc: StabilizerCode) -> BitMatrix:
    """Basis of the pbc constraints that remain constraints after the change."""
    _check_aligned(code_pbc, code_obc)
    c_pbc = constraint_space(code_pbc).basis
    c_obc = f2core.kernel_basis(code_obc.matrix)
    return f2core.intersect(c_pbc, c_obc)


def topological_dim(code_pbc: StabilizerCode, code_obc: StabilizerCode) -> int:
    """dim C(pbc) minus the dimension of constraints surviving the change."""
    c_pbc = constraint_space(code_pbc).basis
    return c_pbc.rows - surviving_constraints(code_pbc, code_obc).rows


def topological_dim_multi(code_pbc: StabilizerCode, twins) -> int:
    """Constraints lost by every one of a set of equivalent boundary changes.

    dim C minus the span of all survivors.  With the three single-axis
    cuts this keeps slideable plane constraints out of the topological
    count (they survive the cut parallel to their plane).
    """
    c_pbc = constraint_space(code_pbc).basis
    union = f2core.RowBasis(code_pbc.n_stabilizers)
    for twin in twins:
        surv = surviving_constraints(code_pbc, twin)
        for i in range(surv.rows):
            union.add_packed(surv.data[i])
    return c_pbc.rows - union.dim


def axis_cut_twins(code: StabilizerCode):
    """The single-axis boundary changes of a pbc model, one per direction."""
    if code.bc != "pbc":
        raise ValueError("axis cuts apply to pbc codes")
    return [
        models.build_with_open_axes(code.model, code.L, (ax,))
        for ax in range(code.dim)
    ]


def cut_topological_dim(code: StabilizerCode, region: Region, nontop: BitMatrix | None = None) -> int:
    """dim( C / (C_uncut + nontop) ): independent cut topological constraints.

    C_uncut is the coordinate section of C onto the uncut stabilizer
    indices, so constraints whose representatives slide off the cut by
    non-topological moves contribute nothing.
    """
    space = constraint_space(code).basis
    if nontop is None:
        nontop = nontop_space(code)
    if nontop.rows:
        if nontop.cols != code.n_stabilizers:
            raise ValueError("nontop must live in F2^|S|")
        if f2core.rank(f2core.stack(space, nontop)) != space.rows:
            raise ValueError("nontop is not a subspace of the constraint space")
    if space.rows == 0:
        return 0
    cls = classify_cut(code, region)
    uncut = np.concatenate([cls.s_a, cls.s_b])
    c_uncut = f2core.coordinate_section(space, uncut)
    denom = f2core.stack(c_uncut, nontop) if nontop.rows else c_uncut
    return space.rows - f2core.rank(denom)
