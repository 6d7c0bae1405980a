"""Entanglement entropy of stabilizer eigenstates.

For a bipartition (A, B) the entropy is determined by subgroup dimensions:
S_A = |A| - d_GA and S_B = |B| - d_GB - d_l, where d_GX is the dimension of
the subgroup of the stabilizer group supported inside X and d_l the logical
dimension N - d_G.  Both are computed exactly over GF(2).  A dense
density-matrix oracle covers instances with N <= 12 qubits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import f2core
from .f2core import BitMatrix
from .models import StabilizerCode
from .regions import Region

DENSE_ORACLE_MAX_QUBITS = 12


@dataclass
class EntropyReport:
    size_a: int
    size_b: int
    dim_ga: int
    dim_gb: int
    logical_dim: int
    entropy_a: int
    entropy_b: int

    def __post_init__(self):
        assert self.entropy_a == self.size_a - self.dim_ga
        assert self.entropy_b == self.size_b - self.dim_gb - self.logical_dim
        assert self.entropy_a == self.entropy_b, "purity violated: S_A != S_B"

    def to_dict(self) -> dict:
        return {
            "size_a": self.size_a,
            "size_b": self.size_b,
            "dim_ga": self.dim_ga,
            "dim_gb": self.dim_gb,
            "logical_dim": self.logical_dim,
            "entropy_a": self.entropy_a,
            "entropy_b": self.entropy_b,
        }


def logical_dim(code: StabilizerCode) -> int:
    """d_l = N - rank(stabilizer rows)."""
    return code.n_qubits - code.rank()


def subgroup_dim_in(code: StabilizerCode, region: Region) -> int:
    """dim of the subgroup of G supported entirely inside the region."""
    return group_section(code, region).rows


def group_section(code: StabilizerCode, region: Region) -> BitMatrix:
    """Basis of the elements of G with support inside the region."""
    key = ("section", region.key())
    if key not in code.cache:
        coords = region.symplectic_coords(code.n_qubits)
        code.cache[key] = f2core.coordinate_section(code.matrix, coords)
    return code.cache[key]


def _complement_region(code: StabilizerCode, region: Region) -> Region:
    from . import regions

    mask = np.ones(code.n_qubits, dtype=bool)
    mask[region.qubits] = False
    return regions.from_qubits(np.nonzero(mask)[0], shape="complement")


def entanglement_entropy(code: StabilizerCode, region: Region) -> EntropyReport:
    """Exact integer entropies for any stabilizer eigenstate of the code."""
    comp = _complement_region(code, region)
    d_ga = subgroup_dim_in(code, region)
    d_gb = subgroup_dim_in(code, comp)
    d_l = logical_dim(code)
    na, nb = region.size, comp.size
    return EntropyReport(
        size_a=na,
        size_b=nb,
        dim_ga=d_ga,
        dim_gb=d_gb,
        logical_dim=d_l,
        entropy_a=na - d_ga,
        entropy_b=nb - d_gb - d_l,
    )


# ---------------------------------------------------------------------------
# dense oracle

def _pauli_apply(vec: np.ndarray, xmask: int, zmask: int, n: int) -> np.ndarray:
    """Apply the real operator (prod X)(prod Z) to a state vector.

    Requires disjoint X/Z supports per stabilizer, so the operator is real
    symmetric and squares to the identity.
    """
    idx = np.arange(2**n)
    signs = 1 - 2 * (np.bitwise_count(idx & zmask) & 1).astype(np.int64)
    out = signs * vec
    if xmask:
        out = out[idx ^ xmask]
    return out


def _bits_to_mask(bits: np.ndarray) -> int:
    mask = 0
    for q in np.nonzero(bits)[0]:
        mask |= 1 << int(q)
    return mask


def stabilizer_basis_rows(code: StabilizerCode) -> np.ndarray:
    """Indices of a maximal independent subset of S (first-wins greedy)."""
    if "basis_rows" not in code.cache:
        basis = f2core.RowBasis(2 * code.n_qubits)
        keep = []
        for i in range(code.n_stabilizers):
            if basis.add_packed(code.matrix.data[i]):
                keep.append(i)
        code.cache["basis_rows"] = np.array(keep, dtype=np.int64)
    return code.cache["basis_rows"]


def commuting_logical_basis(code: StabilizerCode) -> BitMatrix:
    """d_l independent, mutually commuting logical representatives.

    Computed from the symplectic centralizer of the stabilizer rows modulo
    the row space, then paired off by symplectic Gram-Schmidt; one member
    of each hyperbolic pair is kept.
    """
    n = code.n_qubits
    dense = code.matrix.to_dense()
    swapped = BitMatrix.from_dense(np.hstack([dense[:, n:], dense[:, :n]]))
    # centralizer: left kernel of swapped^T
    cent = f2core.kernel_basis(BitMatrix.from_dense(swapped.to_dense().T))
    stab_span = f2core.RowBasis(2 * n)
    for i in range(code.matrix.rows):
        stab_span.add_packed(code.matrix.data[i])
    reps = []
    mod = f2core.RowBasis(2 * n)
    for row in stab_span.to_matrix().to_dense():
        mod.add_dense(row)
    for i in range(cent.rows):
        v = cent.row_dense(i)
        if mod.add_dense(v):
            reps.append(v)
    # symplectic Gram-Schmidt over the 2*d_l representatives
    def sform(u, v):
        return (int(np.sum(u[:n] & v[n:])) + int(np.sum(u[n:] & v[:n]))) & 1

    commuting = []
    pool = [np.array(r, dtype=np.uint8) for r in reps]
    while pool:
        u = pool.pop(0)
        partner = None
        for j, v in enumerate(pool):
            if sform(u, v):
                partner = j
                break
        if partner is None:
            commuting.append(u)
            continue
        v = pool.pop(partner)
        pool = [w ^ (sform(w, v) * u) ^ (sform(w, u) * v) for w in pool]
        commuting.append(u)
    if not commuting:
        return BitMatrix.zeros(0, 2 * n)
    return BitMatrix.from_dense(np.array(commuting, dtype=np.uint8))


def _clean_out_of_region(code: StabilizerCode, row: np.ndarray, region: Region) -> np.ndarray:
    """Multiply by a group element to remove support from the region, if possible."""
    n = code.n_qubits
    coords = region.symplectic_coords(n)
    target = np.zeros(2 * n, dtype=np.uint8)
    target[coords] = row[coords]
    solver = code.cache.get("region_solver")
    if solver is None or code.cache.get("region_solver_key") != region.key():
        solver = f2core.RowSolver(code.matrix.take_cols(coords))
        code.cache["region_solver"] = solver
        code.cache["region_solver_key"] = region.key()
    combo = solver.express(target[coords])
    if combo is None:
        return row
    cleaned = row.copy()
    for i in np.nonzero(combo)[0]:
        cleaned ^= code.matrix.row_dense(int(i))
    return cleaned


def dense_entropy_oracle(
    code: StabilizerCode,
    region: Region,
    k_bits=None,
    a_bits=None,
) -> float:
    """Von Neumann entropy (bits) of the reduced state, by explicit partial trace.

    Builds the simultaneous eigenstate with stabilizer eigenvalues
    (-1)^k over a basis of S and logical eigenvalues (-1)^a over a
    commuting logical basis cleaned out of A, then traces out B
    numerically.  Restricted to N <= 12.
    """
    n = code.n_qubits
    if n > DENSE_ORACLE_MAX_QUBITS:
        raise ValueError(f"dense oracle limited to N <= {DENSE_ORACLE_MAX_QUBITS}")
    rows = stabilizer_basis_rows(code)
    k_bits = np.zeros(len(rows), dtype=np.uint8) if k_bits is None else np.asarray(k_bits, dtype=np.uint8)
    if len(k_bits) != len(rows):
        raise ValueError(f"need {len(rows)} stabilizer eigenvalue bits")
    logicals = commuting_logical_basis(code)
    a_bits = np.zeros(logicals.rows, dtype=np.uint8) if a_bits is None else np.asarray(a_bits, dtype=np.uint8)
    if len(a_bits) != logicals.rows:
        raise ValueError(f"need {logicals.rows} logical eigenvalue bits")

    ops = []
    for i, r in enumerate(rows):
        row = code.matrix.row_dense(int(r))
        ops.append((row, int(k_bits[i])))
    for i in range(logicals.rows):
        row = _clean_out_of_region(code, logicals.row_dense(i), region)
        ops.append((row, int(a_bits[i])))
    for row, _ in ops:
        if np.any(row[:n] & row[n:]):
            raise ValueError("oracle requires stabilizers with disjoint X/Z support")

    dim = 2**n
    vec = None
    for seed_state in range(dim):
        v = np.zeros(dim)
        v[seed_state] = 1.0
        for row, bit in ops:
            xm = _bits_to_mask(row[:n])
            zm = _bits_to_mask(row[n:])
            sign = -1.0 if bit else 1.0
            v = 0.5 * (v + sign * _pauli_apply(v, xm, zm, n))
        norm = np.linalg.norm(v)
        if norm > 1e-9:
            vec = v / norm
            break
    if vec is None:
        raise ValueError("projector annihilated every basis state (invalid eigenvalue labels)")

    a_qubits = list(int(q) for q in region.qubits)
    b_qubits = [q for q in range(n) if q not in set(a_qubits)]
    # axis 0 of the reshaped tensor is qubit n-1 under integer indexing
    axes = [n - 1 - q for q in a_qubits] + [n - 1 - q for q in b_qubits]
    psi = vec.reshape([2] * n).transpose(axes).reshape(2 ** len(a_qubits), -1)
    sv = np.linalg.svd(psi, compute_uv=False)
    probs = sv**2
    probs = probs[probs > 1e-15]
    return float(-(probs * np.log2(probs)).sum())
