"""Lattice stabilizer models: cluster(d), 2d/3d toric codes, X-cube, Haah's code.

Each builder emits stabilizers as lists of (pauli, position, sublattice)
items with positions on the integer lattice.  Under periodic boundary
conditions positions wrap mod L.  Open boundaries are realized by support
truncation: an item whose absolute position leaves the [0, L)^d box is
dropped while the stabilizer count stays fixed.  Because the drop decision
depends only on the item's absolute position, any two truncated stabilizers
lose shared qubits together, so pairwise commutation survives truncation;
it is re-validated at build time anyway.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import f2core
from .f2core import BitMatrix
from .pauli import PauliOp

MODELS = ("cluster1", "cluster2", "cluster3", "toric2", "toric3", "xcube", "haah")

_EDGE_SUBS = {2: ("x", "y"), 3: ("x", "y", "z")}


@dataclass(frozen=True)
class ModelSpec:
    model: str
    L: int
    bc: str = "pbc"

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; choose from {MODELS}")
        if self.bc not in ("pbc", "obc"):
            raise ValueError(f"bc must be 'pbc' or 'obc', got {self.bc!r}")
        if self.L < 2:
            raise ValueError("L must be at least 2")
        if self.model == "haah" and self.bc == "obc":
            raise ValueError(
                "haah obc is unsupported: no boundary construction is defined "
                "for the cubic code"
            )


@dataclass
class StabilizerCode:
    """A concrete stabilizer set over lattice qubits.

    Immutable after construction; derived quantities are cached lazily.
    """

    model: str
    L: int
    bc: str
    dim: int
    n_sub: int  # qubits (or edge directions) per lattice cell
    sub_names: tuple
    n_qubits: int
    qubit_cells: np.ndarray  # (N, dim) lattice cell of each qubit
    qubit_subs: np.ndarray  # (N,) sublattice index of each qubit
    site_of_qubit: np.ndarray  # (N,) graph site index (haah: 2 qubits per site)
    labels: list
    type_tags: list
    matrix: BitMatrix  # |S| x 2N symplectic rows [x | z]
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_stabilizers(self) -> int:
        return self.matrix.rows

    def qubit_label(self, q: int) -> str:
        coords = ",".join(str(int(c)) for c in self.qubit_cells[q])
        return f"[{coords}]{self.sub_names[self.qubit_subs[q]]}"

    def stabilizer(self, i: int) -> PauliOp:
        return PauliOp.from_symplectic(self.matrix.row_dense(i))

    def x_packed(self) -> np.ndarray:
        """(|S|, words) packed X parts."""
        if "x_packed" not in self.cache:
            dense = self.matrix.to_dense()
            n = self.n_qubits
            self.cache["x_packed"] = f2core.pack_rows(dense[:, :n])
            self.cache["z_packed"] = f2core.pack_rows(dense[:, n:])
            self.cache["support_packed"] = f2core.pack_rows(
                dense[:, :n] | dense[:, n:]
            )
        return self.cache["x_packed"]

    def z_packed(self) -> np.ndarray:
        self.x_packed()
        return self.cache["z_packed"]

    def support_packed(self) -> np.ndarray:
        """(|S|, words) packed supports (x OR z) over the N qubit columns."""
        self.x_packed()
        return self.cache["support_packed"]

    def stab_support_qubits(self, i: int) -> np.ndarray:
        return np.nonzero(
            f2core.unpack_rows(self.support_packed()[i : i + 1], self.n_qubits)[0]
        )[0]

    def stab_cells(self) -> list:
        """Support cells of each stabilizer (used for window geometry)."""
        if "stab_cells" not in self.cache:
            sup = f2core.unpack_rows(self.support_packed(), self.n_qubits)
            self.cache["stab_cells"] = [
                self.qubit_cells[np.nonzero(sup[i])[0]] for i in range(self.matrix.rows)
            ]
        return self.cache["stab_cells"]

    def rank(self) -> int:
        if "rank" not in self.cache:
            self.cache["rank"] = f2core.rank(self.matrix)
        return self.cache["rank"]


# ---------------------------------------------------------------------------
# item generation (model geometry)

_UNITS = {d: [np.eye(d, dtype=np.int64)[k] for k in range(d)] for d in (1, 2, 3)}


def _positions(L: int, dim: int):
    return (np.array(p, dtype=np.int64) for p in itertools.product(range(L), repeat=dim))


def _cluster_items(L, d):
    units = _UNITS[d]
    for v in _positions(L, d):
        items = [("Z", v, 0)]
        for e in units:
            items.append(("X", v + e, 0))
            items.append(("X", v - e, 0))
        yield f"K[{','.join(map(str, v))}]", "cluster", items


def _toric_star_items(L, d):
    units = _UNITS[d]
    for v in _positions(L, d):
        items = []
        for mu, e in enumerate(units):
            items.append(("X", v, mu))
            items.append(("X", v - e, mu))
        yield f"star[{','.join(map(str, v))}]", "star", items


def _toric2_plaq_items(L):
    ex, ey = _UNITS[2]
    for v in _positions(L, 2):
        items = [("Z", v, 0), ("Z", v + ey, 0), ("Z", v, 1), ("Z", v + ex, 1)]
        yield f"plaq[{','.join(map(str, v))}]", "plaquette", items


_PLANE_PAIRS = ((0, 1), (1, 2), (2, 0))
_PLANE_NAMES = ("xy", "yz", "zx")


def _toric3_plaq_items(L):
    units = _UNITS[3]
    for name, (mu, nu) in zip(_PLANE_NAMES, _PLANE_PAIRS):
        for v in _positions(L, 3):
            items = [
                ("Z", v, mu),
                ("Z", v + units[nu], mu),
                ("Z", v, nu),
                ("Z", v + units[mu], nu),
            ]
            yield f"plaq{name}[{','.join(map(str, v))}]", f"plaq-{name}", items


def _xcube_vertex_items(L):
    units = _UNITS[3]
    for name, (mu, nu) in zip(_PLANE_NAMES, _PLANE_PAIRS):
        for v in _positions(L, 3):
            items = [
                ("Z", v, mu),
                ("Z", v - units[mu], mu),
                ("Z", v, nu),
                ("Z", v - units[nu], nu),
            ]
            yield f"vert{name}[{','.join(map(str, v))}]", f"vertex-{name}", items


def _xcube_cube_items(L):
    units = _UNITS[3]
    for r in _positions(L, 3):
        items = []
        for mu in range(3):
            nu, rho = [k for k in range(3) if k != mu]
            for a, b in itertools.product((0, 1), repeat=2):
                items.append(("X", r + a * units[nu] + b * units[rho], mu))
        yield f"cube[{','.join(map(str, r))}]", "cube", items


# Haah's code: two qubits (a, b) per site.  The X-type term acts with X on
# qubit a at {r, r+x, r+y, r+z} and on qubit b at {r, r+xy, r+yz, r+zx};
# the Z-type term is the inversion image acting with Z.
_HAAH_A_OFF = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
_HAAH_B_OFF = [(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)]


def _haah_items(L):
    for r in _positions(L, 3):
        items = [("X", r + np.array(o), 0) for o in _HAAH_A_OFF]
        items += [("X", r + np.array(o), 1) for o in _HAAH_B_OFF]
        yield f"GX[{','.join(map(str, r))}]", "haah-x", items
    for r in _positions(L, 3):
        items = [("Z", r - np.array(o), 0) for o in _HAAH_B_OFF]
        items += [("Z", r - np.array(o), 1) for o in _HAAH_A_OFF]
        yield f"GZ[{','.join(map(str, r))}]", "haah-z", items


_MODEL_GEOMETRY = {
    # model: (dim, n_sub, sub_names, item generators taking L)
    "cluster1": (1, 1, ("",), (lambda L: _cluster_items(L, 1),)),
    "cluster2": (2, 1, ("",), (lambda L: _cluster_items(L, 2),)),
    "cluster3": (3, 1, ("",), (lambda L: _cluster_items(L, 3),)),
    "toric2": (2, 2, _EDGE_SUBS[2], (lambda L: _toric_star_items(L, 2), _toric2_plaq_items)),
    "toric3": (3, 3, _EDGE_SUBS[3], (lambda L: _toric_star_items(L, 3), _toric3_plaq_items)),
    "xcube": (3, 3, _EDGE_SUBS[3], (_xcube_vertex_items, _xcube_cube_items)),
    "haah": (3, 2, ("a", "b"), (_haah_items,)),
}


def _flatten(pos: np.ndarray, L: int) -> int:
    idx = 0
    for c in pos:
        idx = idx * L + int(c)
    return idx


def build(spec: ModelSpec) -> StabilizerCode:
    """Construct the model with invariants checked.

    obc truncates every stabilizer to the [0, L)^d box while keeping
    |S'| = |S|; commutation is re-validated and the build fails loudly
    on any violation.
    """
    open_axes = () if spec.bc == "pbc" else tuple(range(_MODEL_GEOMETRY[spec.model][0]))
    return _build_truncated(spec.model, spec.L, spec.bc, open_axes)


def build_with_open_axes(model: str, L: int, open_axes) -> StabilizerCode:
    """Truncate wrapping support along the given axes only (pbc elsewhere).

    Used to probe which constraints survive a change of boundary
    conditions along a single direction.
    """
    return _build_truncated(model, L, f"cut{''.join(map(str, open_axes))}", tuple(open_axes))


def _build_truncated(model: str, L: int, bc: str, open_axes) -> StabilizerCode:
    dim, n_sub, sub_names, generators = _MODEL_GEOMETRY[model]
    n_cells = L**dim
    n_qubits = n_cells * n_sub

    labels, tags, x_rows, z_rows = [], [], [], []
    for gen in generators:
        for label, tag, items in gen(L):
            x = np.zeros(n_qubits, dtype=np.uint8)
            z = np.zeros(n_qubits, dtype=np.uint8)
            for pauli, pos, sub in items:
                pos = np.asarray(pos, dtype=np.int64)
                if any(
                    (pos[ax] < 0 or pos[ax] >= L) for ax in open_axes
                ):
                    continue  # support deleted by the boundary change
                q = _flatten(pos % L, L) * n_sub + sub
                if pauli == "X":
                    x[q] ^= 1
                else:
                    z[q] ^= 1
            labels.append(label)
            tags.append(tag)
            x_rows.append(x)
            z_rows.append(z)

    xm = np.array(x_rows, dtype=np.uint8)
    zm = np.array(z_rows, dtype=np.uint8)
    matrix = BitMatrix.from_dense(np.hstack([xm, zm]))

    cells = np.array(
        [p for p in itertools.product(range(L), repeat=dim) for _ in range(n_sub)],
        dtype=np.int64,
    )
    subs = np.tile(np.arange(n_sub), n_cells)
    if model == "haah":
        sites = np.repeat(np.arange(n_cells), n_sub)
    else:
        sites = np.arange(n_qubits)

    code = StabilizerCode(
        model=model,
        L=L,
        bc=bc,
        dim=dim,
        n_sub=n_sub,
        sub_names=sub_names,
        n_qubits=n_qubits,
        qubit_cells=cells,
        qubit_subs=subs,
        site_of_qubit=sites,
        labels=labels,
        type_tags=tags,
        matrix=matrix,
    )
    failures = commutation_failures(code, limit=1)
    if failures:
        i, j = failures[0]
        raise ValueError(
            f"stabilizers do not commute after {bc} construction: "
            f"{labels[i]} vs {labels[j]}"
        )
    if not _covers_all_qubits(code):
        raise ValueError("support coverage violated: some qubit untouched")
    return code


def from_rows(
    x_rows: np.ndarray,
    z_rows: np.ndarray,
    qubit_cells: np.ndarray,
    labels=None,
    model: str = "custom",
    L: int | None = None,
    bc: str = "custom",
) -> StabilizerCode:
    """Assemble a StabilizerCode from explicit X/Z rows (for user codes)."""
    xm = np.asarray(x_rows, dtype=np.uint8)
    zm = np.asarray(z_rows, dtype=np.uint8)
    n = xm.shape[1]
    cells = np.asarray(qubit_cells, dtype=np.int64)
    if cells.ndim == 1:
        cells = cells[:, None]
    dim = cells.shape[1]
    if L is None:
        L = int(cells.max()) + 1
    nstab = xm.shape[0]
    labels = labels or [f"s{i}" for i in range(nstab)]
    return StabilizerCode(
        model=model,
        L=L,
        bc=bc,
        dim=dim,
        n_sub=1,
        sub_names=("",),
        n_qubits=n,
        qubit_cells=cells,
        qubit_subs=np.zeros(n, dtype=np.int64),
        site_of_qubit=np.arange(n),
        labels=list(labels),
        type_tags=["custom"] * nstab,
        matrix=BitMatrix.from_dense(np.hstack([xm, zm])),
    )


# ---------------------------------------------------------------------------
# validation

def commutation_failures(code: StabilizerCode, limit: int | None = None) -> list:
    """Anticommuting stabilizer pairs (empty list for a valid code).

    Only pairs sharing a qubit can anticommute, so candidates come from an
    inverted qubit->stabilizer index.
    """
    sup = f2core.unpack_rows(code.support_packed(), code.n_qubits)
    by_qubit: dict[int, list[int]] = {}
    for i in range(sup.shape[0]):
        for q in np.nonzero(sup[i])[0]:
            by_qubit.setdefault(int(q), []).append(i)
    pairs = set()
    for stabs in by_qubit.values():
        for a in range(len(stabs)):
            for b in range(a + 1, len(stabs)):
                pairs.add((stabs[a], stabs[b]))
    if not pairs:
        return []
    ii, jj = np.array(sorted(pairs)).T
    X, Z = code.x_packed(), code.z_packed()
    par = np.bitwise_count(X[ii] & Z[jj]).sum(axis=1)
    par += np.bitwise_count(Z[ii] & X[jj]).sum(axis=1)
    bad = np.nonzero(par & 1)[0]
    out = [(int(ii[k]), int(jj[k])) for k in bad]
    return out[:limit] if limit else out


def _covers_all_qubits(code: StabilizerCode) -> bool:
    sup = code.support_packed()
    combined = np.bitwise_or.reduce(sup, axis=0)
    return int(np.bitwise_count(combined).sum()) == code.n_qubits


@dataclass
class Diagnostics:
    n_qubits: int
    n_stabilizers: int
    d_g: int
    d_logical: int
    dim_constraints: int
    commuting: bool
    coverage: bool
    stab_count_ok: bool
    failures: list

    @property
    def passed(self) -> bool:
        return self.commuting and self.coverage and self.stab_count_ok


def validate(code: StabilizerCode) -> Diagnostics:
    """Check the stabilizer-set axioms and report exact counts."""
    failures = commutation_failures(code)
    d_g = code.rank()
    return Diagnostics(
        n_qubits=code.n_qubits,
        n_stabilizers=code.n_stabilizers,
        d_g=d_g,
        d_logical=code.n_qubits - d_g,
        dim_constraints=code.n_stabilizers - d_g,
        commuting=not failures,
        coverage=_covers_all_qubits(code),
        stab_count_ok=code.n_stabilizers >= code.n_qubits,
        failures=failures,
    )


def declared_local_constraints(code: StabilizerCode) -> list:
    """Model-declared local constraint generators as stabilizer index sets.

    toric3: the six plaquettes around each cube; xcube: the three vertex
    stabilizers at each vertex.  Every returned set multiplies to the
    identity (verified); the list may be linearly dependent.
    """
    L = code.L
    n_cells = L**3 if code.dim == 3 else 0
    sets: list[np.ndarray] = []
    if code.model == "toric3":
        # plaquette blocks follow the stars: offset L^3, order xy, yz, zx
        units = _UNITS[3]
        for r in _positions(L, 3):
            idxs = []
            for k, (mu, nu) in enumerate(_PLANE_PAIRS):
                rho = 3 - mu - nu
                base = n_cells * (1 + k)
                idxs.append(base + _flatten(r % L, L))
                idxs.append(base + _flatten((r + units[rho]) % L, L))
            sets.append(np.array(sorted(idxs), dtype=np.int64))
    elif code.model == "xcube":
        for v in _positions(L, 3):
            f = _flatten(v, L)
            sets.append(np.array([f, n_cells + f, 2 * n_cells + f], dtype=np.int64))
    else:
        return []
    dense = code.matrix.to_dense()
    for s in sets:
        if dense[s].sum(axis=0).__mod__(2).any():
            raise AssertionError(f"declared constraint {s} does not multiply to identity")
    return sets


def export_table(code: StabilizerCode) -> str:
    """Plain-text stabilizer table: label, type, X-support, Z-support per line."""
    lines = []
    dense = code.matrix.to_dense()
    n = code.n_qubits
    for i in range(code.n_stabilizers):
        xs = " ".join(code.qubit_label(q) for q in np.nonzero(dense[i, :n])[0])
        zs = " ".join(code.qubit_label(q) for q in np.nonzero(dense[i, n:])[0])
        lines.append(f"{code.labels[i]}\t{code.type_tags[i]}\t{xs or '-'}\t{zs or '-'}")
    return "\n".join(lines) + "\n"
