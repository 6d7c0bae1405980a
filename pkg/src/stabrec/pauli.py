"""Phase-free Pauli operators over N qubits.

An operator is a pair of X/Z bit vectors; products XOR bitwise and every
operator squares to the identity.  Commutation uses the symplectic form
x_p.z_q + z_p.x_q mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PauliOp:
    n_qubits: int
    x_bits: np.ndarray  # uint8, 0/1, length n_qubits
    z_bits: np.ndarray

    def __post_init__(self):
        self.x_bits.setflags(write=False)
        self.z_bits.setflags(write=False)

    @staticmethod
    def identity(n: int) -> "PauliOp":
        return PauliOp(n, np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8))

    @staticmethod
    def from_symplectic(row: np.ndarray) -> "PauliOp":
        row = np.asarray(row, dtype=np.uint8)
        n = row.shape[0] // 2
        return PauliOp(n, row[:n].copy(), row[n:].copy())

    def to_symplectic(self) -> np.ndarray:
        return np.concatenate([self.x_bits, self.z_bits])

    def is_identity(self) -> bool:
        return not (self.x_bits.any() or self.z_bits.any())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliOp)
            and self.n_qubits == other.n_qubits
            and np.array_equal(self.x_bits, other.x_bits)
            and np.array_equal(self.z_bits, other.z_bits)
        )

    def __hash__(self):
        return hash((self.n_qubits, self.x_bits.tobytes(), self.z_bits.tobytes()))


def mul(p: PauliOp, q: PauliOp) -> PauliOp:
    """Phase-free product: bitwise XOR of X parts and of Z parts."""
    if p.n_qubits != q.n_qubits:
        raise ValueError(f"qubit count mismatch: {p.n_qubits} != {q.n_qubits}")
    return PauliOp(p.n_qubits, p.x_bits ^ q.x_bits, p.z_bits ^ q.z_bits)


def commutes(p: PauliOp, q: PauliOp) -> bool:
    if p.n_qubits != q.n_qubits:
        raise ValueError(f"qubit count mismatch: {p.n_qubits} != {q.n_qubits}")
    parity = (int(np.sum(p.x_bits & q.z_bits)) + int(np.sum(p.z_bits & q.x_bits))) & 1
    return parity == 0


def support_qubits(p: PauliOp) -> np.ndarray:
    """Indices of qubits where p acts non-identically."""
    return np.nonzero(p.x_bits | p.z_bits)[0]


def support(p: PauliOp, code) -> frozenset[int]:
    """Graph sites (vertices/edges) where p acts non-identically.

    A site with several qubits is in the support iff any of its qubits
    is acted on.
    """
    qs = support_qubits(p)
    return frozenset(int(code.site_of_qubit[q]) for q in qs)


def restrict(p: PauliOp, region) -> PauliOp:
    """(p)_A: bits outside the region zeroed.

    `region` may be a Region or any iterable of qubit indices.
    """
    qubits = getattr(region, "qubits", region)
    mask = np.zeros(p.n_qubits, dtype=np.uint8)
    mask[np.asarray(list(qubits), dtype=np.int64)] = 1
    return PauliOp(p.n_qubits, p.x_bits & mask, p.z_bits & mask)


def render(p: PauliOp, code=None) -> str:
    """Sparse text form, e.g. "X[3,2,0]a Z[1,1,1]b".

    Without a code, falls back to raw qubit indices ("X3 Z5").
    """
    tokens = []
    for q in support_qubits(p):
        x, z = int(p.x_bits[q]), int(p.z_bits[q])
        letter = "Y" if (x and z) else ("X" if x else "Z")
        if code is None:
            tokens.append(f"{letter}{q}")
        else:
            tokens.append(f"{letter}{code.qubit_label(int(q))}")
    return " ".join(tokens) if tokens else "I"
