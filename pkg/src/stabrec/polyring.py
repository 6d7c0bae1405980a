"""Laurent-polynomial stabilizer maps for translation-invariant codes.

A stabilizer map is a 2q x m matrix over F2[x^-1, x, ...] in three
variables: rows index single-qubit X then Z operators within a unit cell,
columns index stabilizer types, monomials are lattice translations.
Expanding a column against a polynomial of translations produces the
corresponding product of stabilizers; the cubic-code map gives an
independent counter for its surface-stabilizer dimension through the
boundary recursion system.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import f2core
from .f2core import BitMatrix
from .models import StabilizerCode
from .pauli import PauliOp


@dataclass(frozen=True)
class LaurentPoly3:
    """Polynomial with F2 coefficients: a finite set of exponent triples."""

    monomials: frozenset

    @staticmethod
    def from_terms(terms) -> "LaurentPoly3":
        out: set = set()
        for t in terms:
            t = tuple(int(c) for c in t)
            if t in out:
                out.remove(t)  # coefficients add mod 2
            else:
                out.add(t)
        return LaurentPoly3(frozenset(out))

    @staticmethod
    def zero() -> "LaurentPoly3":
        return LaurentPoly3(frozenset())

    @staticmethod
    def one() -> "LaurentPoly3":
        return LaurentPoly3(frozenset({(0, 0, 0)}))

    def __add__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        return LaurentPoly3(self.monomials ^ other.monomials)

    def __mul__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        return LaurentPoly3.from_terms(
            tuple(a + b for a, b in zip(s, t))
            for s in self.monomials
            for t in other.monomials
        )

    def shift(self, vec) -> "LaurentPoly3":
        vec = tuple(int(v) for v in vec)
        return LaurentPoly3(
            frozenset(tuple(a + b for a, b in zip(m, vec)) for m in self.monomials)
        )

    def inverse_exponents(self) -> "LaurentPoly3":
        return LaurentPoly3(frozenset(tuple(-c for c in m) for m in self.monomials))

    def is_zero(self) -> bool:
        return not self.monomials


def monomial(a: int, b: int, c: int) -> LaurentPoly3:
    return LaurentPoly3(frozenset({(a, b, c)}))


@dataclass(frozen=True)
class StabilizerMap:
    """2q x m grid of Laurent polynomials; X rows first, then Z rows."""

    q: int
    m: int
    entries: tuple  # entries[row][col]

    def __post_init__(self):
        if self.q < 1 or self.m < 1:
            raise ValueError("need q, m >= 1")
        if len(self.entries) != 2 * self.q or any(len(r) != self.m for r in self.entries):
            raise ValueError("entry grid must be 2q x m")


ALPHA = LaurentPoly3.from_terms([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
BETA = LaurentPoly3.from_terms([(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)])


def haah_map() -> StabilizerMap:
    """The cubic-code stabilizer map: columns (X-type, Z-type), rows
    (X on a, X on b, Z on a, Z on b); the Z column carries the inverse
    exponents of the X column, swapped between the two site qubits."""
    zero = LaurentPoly3.zero()
    return StabilizerMap(
        q=2,
        m=2,
        entries=(
            (ALPHA, zero),
            (BETA, zero),
            (zero, BETA.inverse_exponents()),
            (zero, ALPHA.inverse_exponents()),
        ),
    )


def expand(smap: StabilizerMap, col: int, P: LaurentPoly3, L: int) -> PauliOp:
    """The Pauli operator of a product of type-`col` stabilizers.

    Each monomial of P translates the column stabilizer; exponents are
    reduced mod L (periodic lattice).  Qubits are site-major with q per
    site, matching the lattice builders.
    """
    q = smap.q
    n = q * L**3
    x = np.zeros(n, dtype=np.uint8)
    z = np.zeros(n, dtype=np.uint8)
    for t in P.monomials:
        for row in range(2 * q):
            entry = smap.entries[row][col]
            for mono in entry.monomials:
                pos = tuple((mono[i] + t[i]) % L for i in range(3))
                flat = (pos[0] * L + pos[1]) * L + pos[2]
                qubit = flat * q + (row % q)
                if row < q:
                    x[qubit] ^= 1
                else:
                    z[qubit] ^= 1
    return PauliOp(n, x, z)


def map_to_code(smap: StabilizerMap, L: int, model_name: str = "from-map") -> StabilizerCode:
    """Expand every column at every lattice translate into a code.

    Column-major, translates in lexicographic order; for the cubic-code
    map this is row-identical to the lattice builder.
    """
    q = smap.q
    n = q * L**3
    rows = []
    labels = []
    tags = []
    for col in range(smap.m):
        for t in itertools.product(range(L), repeat=3):
            op = expand(smap, col, monomial(*t), L)
            rows.append(op.to_symplectic())
            labels.append(f"col{col}[{','.join(map(str, t))}]")
            tags.append(f"map-col{col}")
    cells = np.array(
        [p for p in itertools.product(range(L), repeat=3) for _ in range(q)],
        dtype=np.int64,
    )
    code = StabilizerCode(
        model=model_name,
        L=L,
        bc="pbc",
        dim=3,
        n_sub=q,
        sub_names=tuple("ab"[i] if q == 2 else str(i) for i in range(q)),
        n_qubits=n,
        qubit_cells=cells,
        qubit_subs=np.tile(np.arange(q), L**3),
        site_of_qubit=np.repeat(np.arange(L**3), q),
        labels=labels,
        type_tags=tags,
        matrix=BitMatrix.from_dense(np.array(rows, dtype=np.uint8)),
    )
    return code


# ---------------------------------------------------------------------------
# cubic-code boundary recursion

def _box_index(R: int):
    side = R + 1
    def idx(a, b, c):
        return (a * side + b) * side + c
    return idx, side**3


def haah_recursion_system(R: int, mirrored: bool = False) -> BitMatrix:
    """The F2 system forcing a product of X-type stabilizers out of the cube.

    Unknowns are the translation coefficients p(a) for a in [0, R]^3 (the
    stabilizers meeting the cut region); for every interior site, two
    relations force the operator to vanish there, one per site qubit.  The
    mirrored system (inverted offsets) counts the Z-type side.
    """
    if R < 1:
        raise ValueError("R >= 1 required")
    idx, n_unknowns = _box_index(R)
    rows = []
    sgn = -1 if mirrored else 1
    lo, hi = (0, R - 1) if mirrored else (1, R)
    offs1 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    offs2 = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
    for a in itertools.product(range(lo, hi + 1), repeat=3):
        for offs in (offs1, offs2):
            row = np.zeros(n_unknowns, dtype=np.uint8)
            row[idx(*a)] ^= 1
            for o in offs:
                b = tuple(a[i] - sgn * o[i] for i in range(3))
                row[idx(*b)] ^= 1
            rows.append(row)
    return BitMatrix.from_dense(np.array(rows, dtype=np.uint8))


def haah_nlss_count(R: int, mirrored: bool = False) -> int:
    """Surface-stabilizer count of the cubic code for an R-site cube, 2(n-1).

    Solves the recursion system; one kernel dimension per stabilizer type
    is the corner stabilizer touching the cube only at its double-identity
    site and is excluded; the total doubles the X-type answer by the
    code's inversion symmetry.
    """
    if R < 2:
        raise ValueError(
            "closed-form counting assumes R >= 2 (interior structure present)"
        )
    system = haah_recursion_system(R, mirrored=mirrored)
    idx, n_unknowns = _box_index(R)
    corner = idx(R, R, R) if mirrored else idx(0, 0, 0)
    # the double-identity-corner monomial must solve the system
    e = np.zeros(n_unknowns, dtype=np.uint8)
    e[corner] = 1
    dense = system.to_dense()
    if np.any((dense @ e) % 2):
        raise AssertionError("corner monomial fails the recursion system")
    n_solutions = n_unknowns - f2core.rank(system)
    if n_solutions < 1:
        raise AssertionError("recursion system lost the corner solution")
    return 2 * (n_solutions - 1)


def expansion_injective(R: int) -> bool:
    """Is P -> operator injective on the [0, R]^3 coefficient box?

    Checked on a lattice large enough that distinct translates cannot
    collide through the periodic wrap.
    """
    L = R + 2
    smap = haah_map()
    rows = []
    for t in itertools.product(range(R + 1), repeat=3):
        rows.append(expand(smap, 0, monomial(*t), L).to_symplectic())
    mat = BitMatrix.from_dense(np.array(rows, dtype=np.uint8))
    return f2core.rank(mat) == mat.rows
