"""Bipartition regions and cut classification.

Per-model cuboid conventions (entanglement-surface qubits lie inside the
cut): edge models take every edge with both endpoints in the vertex grid
[origin, origin + R]; site models (cluster, haah) take all qubits on sites
in an R-wide box.  Classification into S_A / S_B / S_cut uses the actual
Pauli content of each stabilizer, not geometric cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import f2core
from .models import StabilizerCode

_EDGE_MODELS = ("toric2", "toric3", "xcube")
_SITE_MODELS = ("cluster1", "cluster2", "cluster3", "haah")


@dataclass
class Region:
    """Qubit subset A with its build descriptor."""

    qubits: np.ndarray  # sorted qubit indices
    shape: str
    origin: tuple
    extents: tuple
    wrapped_axes: tuple = ()
    note: str = ""
    cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.qubits = np.unique(np.asarray(self.qubits, dtype=np.int64))

    @property
    def size(self) -> int:
        return len(self.qubits)

    def descriptor(self) -> str:
        ext = "x".join(map(str, self.extents))
        return f"{self.shape}:{ext}@{','.join(map(str, self.origin))}"

    def mask(self, n_qubits: int) -> np.ndarray:
        if "mask" not in self.cache or self.cache["mask"].shape[0] != n_qubits:
            m = np.zeros(n_qubits, dtype=np.uint8)
            m[self.qubits] = 1
            self.cache["mask"] = m
        return self.cache["mask"]

    def symplectic_coords(self, n_qubits: int) -> np.ndarray:
        """Column indices of A inside the 2N symplectic space."""
        return np.concatenate([self.qubits, self.qubits + n_qubits])

    def key(self) -> bytes:
        return self.qubits.tobytes()


@dataclass
class CutClassification:
    s_a: np.ndarray  # stabilizers supported in A only
    s_b: np.ndarray  # supported in B only
    s_cut: np.ndarray  # supported in both

    @property
    def counts(self):
        return len(self.s_a), len(self.s_b), len(self.s_cut)


def from_qubits(qubits, shape: str = "custom") -> Region:
    """Arbitrary qubit-mask region (accepted by all downstream engines)."""
    q = np.asarray(sorted(set(int(i) for i in qubits)), dtype=np.int64)
    return Region(q, shape, (), (int(q.min()),) if len(q) else ())


def _check_guard(code: StabilizerCode, extents) -> None:
    for r in extents:
        if r < 1:
            raise ValueError("region extent must be positive")
        if 2 * r >= code.L:
            raise ValueError(
                f"region extent {r} too large for L={code.L}: the bounding box "
                f"must stay below L/2 in each direction"
            )


def _flatten(pos, L: int) -> int:
    idx = 0
    for c in pos:
        idx = idx * L + int(c)
    return idx


def _edge_grid_qubits(code: StabilizerCode, origin, extents) -> list:
    """Edges with both endpoints in the vertex grid [origin, origin+R]."""
    L, d, n_sub = code.L, code.dim, code.n_sub
    qubits = []
    for k in itertools.product(*(range(r + 1) for r in extents)):
        pos = tuple((origin[i] + k[i]) % L for i in range(d))
        for mu in range(d):
            if k[mu] < extents[mu]:
                qubits.append(_flatten(pos, L) * n_sub + mu)
    return qubits


def _site_box_qubits(code: StabilizerCode, origin, extents) -> list:
    L, d, n_sub = code.L, code.dim, code.n_sub
    qubits = []
    for k in itertools.product(*(range(r) for r in extents)):
        pos = tuple((origin[i] + k[i]) % L for i in range(d))
        base = _flatten(pos, L) * n_sub
        qubits.extend(range(base, base + n_sub))
    return qubits


def cuboid_region(code: StabilizerCode, origin=None, extents=None) -> Region:
    """Model-convention cuboid: R in edge lengths (edge models) or sites.

    For edge models A holds the edges with both endpoints inside the
    (R+1)-vertex grid; for cluster/haah A holds every qubit on the R^d
    site box.
    """
    if extents is None:
        raise ValueError("extents required")
    if isinstance(extents, int):
        extents = (extents,) * code.dim
    extents = tuple(int(r) for r in extents)
    if len(extents) != code.dim:
        raise ValueError(f"need {code.dim} extents for {code.model}")
    origin = tuple(int(o) for o in (origin or (0,) * code.dim))
    _check_guard(code, extents)
    if code.model in _EDGE_MODELS:
        qubits = _edge_grid_qubits(code, origin, extents)
        shape = {1: "segment", 2: "square", 3: "cube"}[code.dim]
    elif code.model in _SITE_MODELS:
        qubits = _site_box_qubits(code, origin, extents)
        shape = {1: "segment", 2: "square", 3: "cube"}[code.dim]
    else:
        raise ValueError(f"no cuboid convention for model {code.model!r}")
    if len(set(extents)) > 1:
        shape = "cuboid"
    return Region(np.array(qubits), shape, origin, extents)


def smooth_cluster_region(code: StabilizerCode, R: int, axis: int = 0) -> Region:
    """Corner-free cut for the cluster model: a slab of thickness R.

    The slab wraps every direction but `axis`, so its boundary has no
    corners at all; every closed region in the cluster model necessarily
    carries corner contributions (the boundary's total turning shows up
    as extra cut stabilizers), so zero recoverable information requires a
    wrapping cut.  R = 1 degenerates to a single-site region (flagged).
    """
    if not code.model.startswith("cluster"):
        raise ValueError("smooth regions are defined for the cluster model only")
    L, d = code.L, code.dim
    if R < 2:
        q = [0]
        return Region(
            np.array(q, dtype=np.int64),
            "smooth",
            (0,) * d,
            (1,) * d,
            note="degenerate R<2: single-site region",
        )
    if 2 * R >= L:
        raise ValueError("slab thickness must stay below L/2")
    qubits = []
    for pos in itertools.product(*(range(L) for _ in range(d))):
        if pos[axis] < R:
            qubits.append(_flatten(pos, L))
    wrapped = tuple(a for a in range(d) if a != axis)
    ext = tuple(R if a == axis else L for a in range(d))
    return Region(np.array(qubits), "smooth", (0,) * d, ext, wrapped_axes=wrapped)


def solid_torus_region(
    code: StabilizerCode,
    outer,
    axis: int = 2,
    tunnel_len: int | None = None,
    cross_size: int = 2,
    origin=None,
) -> Region:
    """Handlebody region in the 3d toric code: cuboid minus a tunnel.

    The tunnel removes a centered cross_size^2 column of grid vertices
    along `axis`; tunnel-surface qubits land in B.  A full-length tunnel
    gives genus 1; tunnel_len = 0 reduces to the plain cuboid; a partial
    length drills a blind (genus-0) hole.

    The clean genus counting needs breathing room: tunnel cross-section
    and solid walls both at least two vertices thick (outer >= 5 with the
    default cross_size).  Thinner tunnels are built as requested but pick
    up extra pinch contributions.
    """
    if code.model != "toric3":
        raise ValueError("solid-torus regions are defined for toric3")
    if isinstance(outer, int):
        outer = (outer,) * 3
    outer = tuple(int(r) for r in outer)
    _check_guard(code, outer)
    origin = tuple(int(o) for o in (origin or (0, 0, 0)))
    n_vertices_axis = outer[axis] + 1
    if tunnel_len is None:
        tunnel_len = n_vertices_axis
    tunnel_len = min(int(tunnel_len), n_vertices_axis)

    cross_axes = [a for a in range(3) if a != axis]
    lo = {}
    for a in cross_axes:
        start = (outer[a] + 1 - cross_size) // 2
        if tunnel_len > 0 and (start < 1 or start + cross_size > outer[a]):
            raise ValueError("tunnel touches the outer surface")
        lo[a] = start

    def in_tunnel(k):
        if tunnel_len == 0:
            return False
        if k[axis] >= tunnel_len:
            return False
        return all(lo[a] <= k[a] < lo[a] + cross_size for a in cross_axes)

    L = code.L
    keep = {
        k
        for k in itertools.product(*(range(r + 1) for r in outer))
        if not in_tunnel(k)
    }
    qubits = []
    for k in keep:
        pos = tuple((origin[i] + k[i]) % L for i in range(3))
        for mu in range(3):
            k2 = tuple(k[i] + (1 if i == mu else 0) for i in range(3))
            if k[mu] < outer[mu] and k2 in keep:
                qubits.append(_flatten(pos, L) * 3 + mu)
    shape = "solidtorus" if tunnel_len >= n_vertices_axis else (
        "cube" if tunnel_len == 0 else "dented"
    )
    return Region(np.array(qubits), shape, origin, outer)


def classify_cut(code: StabilizerCode, region: Region) -> CutClassification:
    """Partition stabilizer indices by actual Pauli support vs the region."""
    key = ("classify", region.key())
    if key in code.cache:
        return code.cache[key]
    sup = code.support_packed()
    amask = f2core.pack_rows(region.mask(code.n_qubits))[0]
    in_a = (sup & amask[None, :]).any(axis=1)
    out_a = (sup & ~amask[None, :]).any(axis=1)
    # padding bits are zero in sup, so ~amask padding garbage is harmless
    s_cut = np.nonzero(in_a & out_a)[0]
    s_a = np.nonzero(in_a & ~out_a)[0]
    s_b = np.nonzero(~in_a)[0]
    out = CutClassification(s_a, s_b, s_cut)
    code.cache[key] = out
    return out


def circular_interval(values: np.ndarray, L: int):
    """Minimal arc [start, start+extent) mod L covering the given values."""
    vals = np.unique(np.asarray(values, dtype=np.int64) % L)
    m = len(vals)
    if m == 0:
        return 0, 0
    if m == L:
        return 0, L
    nxt = np.roll(vals, -1).copy()
    nxt[-1] += L
    gaps = nxt - vals - 1
    i = int(np.argmax(gaps))
    start = int(vals[(i + 1) % m])
    extent = int((vals[i] - start) % L) + 1
    return start, extent


def region_cells_bounds(code: StabilizerCode, region: Region):
    """Minimal circular cell box covering A plus all cut-stabilizer supports.

    Returns (starts, extents) per axis in mod-L coordinates; fails if the
    region wraps an axis completely.
    """
    if region.wrapped_axes:
        raise ValueError("wrapping regions have no finite bounding box")
    L = code.L
    cls = classify_cut(code, region)
    cells = [code.qubit_cells[region.qubits]]
    stab_cells = code.stab_cells()
    cells.extend(stab_cells[i] for i in cls.s_cut)
    allc = np.vstack(cells)
    starts, extents = [], []
    for ax in range(code.dim):
        s, e = circular_interval(allc[:, ax], L)
        if e >= L:
            raise ValueError("cut support wraps the torus; no finite box exists")
        starts.append(s)
        extents.append(e)
    return np.array(starts, dtype=np.int64), np.array(extents, dtype=np.int64)
