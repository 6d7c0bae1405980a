"""Recoverable information of a bipartition, by three independent routes.

Method 1 (definition): minimal cut-basis count minus both entropies, with
the minimization realized in closed form as |S_cut| - rank of the
non-topological constraints projected onto the cut indices.

Method 2 (bound): the number of independent cut topological constraints,
a lower bound that is tight for the toric codes and the X-cube model.

Method 3 (surface stabilizers): dim of the group of products of one-sided
plus cut stabilizers supported entirely on the other side.  For periodic
codes both quotients are evaluated inside a window around the region so
that wrap-around global-constraint artifacts cannot masquerade as surface
stabilizers; for open codes they are global.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import constraints as cst
from . import entropy as ent
from . import f2core
from .f2core import BitMatrix
from .models import StabilizerCode
from .pauli import PauliOp, restrict
from .regions import Region, classify_cut, region_cells_bounds

DEFAULT_WINDOW = 3


@dataclass
class NLSSGenerator:
    operator: PauliOp  # supported on one side only
    generating_set: np.ndarray  # stabilizer indices whose product is the operator
    side: str  # "from-A": generated by A+cut stabilizers, supported in B
    pauli_type: str  # "X", "Z" or "mixed"


@dataclass
class GaussLawRelation:
    bulk_indices: np.ndarray  # one-sided stabilizers whose product is fixed
    cut_indices: np.ndarray  # cut stabilizers appearing in the generator
    boundary_operator: PauliOp  # restriction of the cut product to the bulk side
    side: str
    trivial: bool
    verified: bool


@dataclass
class RecInfoReport:
    s_a: int
    s_b: int
    cut_raw: int
    min_cut: int
    mu_definition: int
    mu_bound: int
    mu_nlss: int
    window: int | None
    nlss_generators: list = field(default_factory=list)

    def __post_init__(self):
        assert self.mu_definition == self.min_cut - self.s_a - self.s_b
        assert self.mu_definition >= 0, "recoverable information must be non-negative"
        assert self.mu_definition >= self.mu_bound, "bound exceeded its target"

    @property
    def agreement(self) -> bool:
        return self.mu_definition == self.mu_nlss

    def to_dict(self) -> dict:
        return {
            "s_a": self.s_a,
            "s_b": self.s_b,
            "cut_raw": self.cut_raw,
            "min_cut": self.min_cut,
            "mu_definition": self.mu_definition,
            "mu_bound": self.mu_bound,
            "mu_nlss": self.mu_nlss,
            "window": self.window,
            "agreement": self.agreement,
        }


# ---------------------------------------------------------------------------
# method 1: cut counting with constraint minimization

def min_cut_count(code: StabilizerCode, region: Region, nontop: BitMatrix | None = None) -> int:
    """Minimal number of cut basis stabilizers.

    Every independent non-topological constraint with a nonzero cut part
    removes one cut stabilizer from the basis; constraints whose cut
    projection vanishes (sums that slide off the cut) remove nothing.
    """
    cls = classify_cut(code, region)
    if nontop is None:
        nontop = cst.nontop_space(code)
    if nontop.rows == 0:
        return len(cls.s_cut)
    projected = nontop.take_cols(cls.s_cut)
    return len(cls.s_cut) - f2core.rank(projected)


def mu_definition(code: StabilizerCode, region: Region, nontop: BitMatrix | None = None) -> int:
    rep = ent.entanglement_entropy(code, region)
    return min_cut_count(code, region, nontop) - rep.entropy_a - rep.entropy_b


def mu_bound(code: StabilizerCode, region: Region, nontop: BitMatrix | None = None) -> int:
    """Lower bound: independent cut topological constraints."""
    return cst.cut_topological_dim(code, region, nontop)


# ---------------------------------------------------------------------------
# method 3: non-local surface stabilizers

def feasible_windows(code: StabilizerCode, region: Region, maximum: int = DEFAULT_WINDOW):
    """Shell widths whose window box still excludes part of the torus."""
    if code.bc != "pbc" or region.wrapped_axes:
        return []
    _, extents = region_cells_bounds(code, region)
    extent = int(extents.max())
    return [w for w in range(maximum + 1) if extent + 2 * w <= code.L - 1]


def _window_members(code: StabilizerCode, region: Region, window: int) -> np.ndarray:
    starts, extents = region_cells_bounds(code, region)
    if int(extents.max()) + 2 * window > code.L - 1:
        raise ValueError(
            f"window {window} does not fit: cut box extent {int(extents.max())} on "
            f"L={code.L} (need extent + 2*window <= L-1)"
        )
    L = code.L
    lo = (starts - window) % L
    widths = extents + 2 * window
    members = []
    for i, cells in enumerate(code.stab_cells()):
        rel = (cells - lo[None, :]) % L
        if np.all(rel < widths[None, :]):
            members.append(i)
    return np.array(members, dtype=np.int64)


def _nlss_setup(code: StabilizerCode, region: Region, window: int | None):
    """Window members and the effective shell width actually used."""
    if code.bc != "pbc":
        return np.arange(code.n_stabilizers), None
    if region.wrapped_axes:
        if cst.constraint_space(code).dim != 0:
            raise ValueError(
                "wrapping regions need a constraint-free code for the global "
                "surface-stabilizer count"
            )
        return np.arange(code.n_stabilizers), None
    if window is None:
        feas = feasible_windows(code, region)
        if not feas:
            raise ValueError(
                f"no window fits around the region on L={code.L}; enlarge L or "
                f"use an obc twin"
            )
        window = max(feas)
    return _window_members(code, region, window), window


def _quotient_parts(code: StabilizerCode, region: Region, window: int | None):
    members, used = _nlss_setup(code, region, window)
    key = ("nlss_parts", region.key(), used)
    if key in code.cache:
        return code.cache[key]
    wm = code.matrix.take_rows(members)
    cls = classify_cut(code, region)
    n = code.n_qubits
    acoords = region.symplectic_coords(n)
    bmask = np.ones(n, dtype=bool)
    bmask[region.qubits] = False
    bq = np.nonzero(bmask)[0]
    bcoords = np.concatenate([bq, bq + n])

    in_a = np.isin(members, cls.s_a)
    in_b = np.isin(members, cls.s_b)
    g_b = f2core.coordinate_section(wm, bcoords)
    g_a = f2core.coordinate_section(wm, acoords)
    span_b = code.matrix.take_rows(members[in_b])
    span_a = code.matrix.take_rows(members[in_a])
    out = (members, used, wm, g_a, g_b, span_a, span_b)
    code.cache[key] = out
    return out


def mu_nlss(code: StabilizerCode, region: Region, window: int | None = None) -> int:
    """dim(G_A / span(S_A)) + dim(G_B / span(S_B)), window-regularized."""
    _, _, _, g_a, g_b, span_a, span_b = _quotient_parts(code, region, window)
    return f2core.quotient_dim(g_a, span_a) + f2core.quotient_dim(g_b, span_b)


def _pauli_type(row: np.ndarray, n: int) -> str:
    has_x = bool(row[:n].any())
    has_z = bool(row[n:].any())
    if has_x and has_z:
        return "mixed"
    return "X" if has_x else "Z"


def nlss_generators(code: StabilizerCode, region: Region, window: int | None = None) -> list:
    """Coset representatives for both quotients, with explicit generating sets.

    Each from-A generator is rewritten, within its coset, as a product of
    A-side and cut stabilizers only (B-side components are multiplied out),
    so supp(operator) ∩ A = ∅ holds exactly; symmetrically for from-B.
    """
    members, used, wm, g_a, g_b, span_a, span_b = _quotient_parts(code, region, window)
    cls = classify_cut(code, region)
    solver = f2core.RowSolver(wm)
    n = code.n_qubits
    cut_set = set(int(i) for i in cls.s_cut)
    a_set = set(int(i) for i in cls.s_a)
    b_set = set(int(i) for i in cls.s_b)

    out = []
    for section, span, side, keep in (
        (g_b, span_b, "from-A", lambda i: i in a_set or i in cut_set),
        (g_a, span_a, "from-B", lambda i: i in b_set or i in cut_set),
    ):
        seen = f2core.RowBasis(2 * n)
        for i in range(span.rows):
            seen.add_packed(span.data[i])
        for i in range(section.rows):
            row = section.row_dense(i)
            if not seen.add_dense(row):
                continue  # inside the one-sided span: not a surface stabilizer
            combo = solver.express(row)
            assert combo is not None, "section row must lie in the window span"
            chosen = [int(members[j]) for j in np.nonzero(combo)[0] if keep(int(members[j]))]
            op_row = np.zeros(2 * n, dtype=np.uint8)
            for g in chosen:
                op_row ^= code.matrix.row_dense(g)
            out.append(
                NLSSGenerator(
                    operator=PauliOp.from_symplectic(op_row),
                    generating_set=np.array(sorted(chosen), dtype=np.int64),
                    side=side,
                    pauli_type=_pauli_type(op_row, n),
                )
            )
    return out


def gauss_law_report(gen: NLSSGenerator, code: StabilizerCode, region: Region) -> GaussLawRelation:
    """Operator identity: product of bulk stabilizers = cut product restricted.

    For a from-A generator the bulk side is A and the relation reads
    prod_{s in F_A} s = (prod_{s in F_cut} s)|_A; identity failure signals
    an internal bug.
    """
    cls = classify_cut(code, region)
    cut_set = set(int(i) for i in cls.s_cut)
    bulk = np.array([i for i in gen.generating_set if int(i) not in cut_set], dtype=np.int64)
    cut = np.array([i for i in gen.generating_set if int(i) in cut_set], dtype=np.int64)
    n = code.n_qubits
    bulk_row = np.zeros(2 * n, dtype=np.uint8)
    for i in bulk:
        bulk_row ^= code.matrix.row_dense(int(i))
    cut_row = np.zeros(2 * n, dtype=np.uint8)
    for i in cut:
        cut_row ^= code.matrix.row_dense(int(i))
    cut_op = PauliOp.from_symplectic(cut_row)
    if gen.side == "from-A":
        boundary = restrict(cut_op, region)
    else:
        comp = np.setdiff1d(np.arange(n), region.qubits)
        boundary = restrict(cut_op, comp)
    verified = np.array_equal(boundary.to_symplectic(), bulk_row)
    if not verified:
        raise AssertionError("Gauss-law identity failed: generator is inconsistent")
    return GaussLawRelation(
        bulk_indices=bulk,
        cut_indices=cut,
        boundary_operator=boundary,
        side=gen.side,
        trivial=(len(bulk) == 0),
        verified=verified,
    )


# ---------------------------------------------------------------------------
# minimality checking (statement S3)

def verify_minimality(code: StabilizerCode, region: Region, cut_basis, candidates) -> list:
    """Return the candidates whose cut part is fully consumed by some
    non-topological constraint (a violation of minimality).

    Each candidate carries an explicit generating set of stabilizer
    indices (an NLSSGenerator, or a plain index iterable); its cut part
    F taken within cut_basis is what a minimal basis must not let a
    non-topological constraint absorb entirely.
    """
    cls = classify_cut(code, region)
    cut_basis = np.asarray(sorted(set(int(i) for i in cut_basis)), dtype=np.int64)
    if not set(cut_basis.tolist()).issubset(set(int(i) for i in cls.s_cut)):
        raise ValueError("cut_basis must consist of cut stabilizers")
    allowed = set(cut_basis.tolist()) | set(int(i) for i in cls.s_a) | set(
        int(i) for i in cls.s_b
    )
    nontop = cst.nontop_space(code)
    pi_cut = nontop.take_cols(cls.s_cut) if nontop.rows else None
    violations = []
    for cand in candidates:
        idx = cand.generating_set if isinstance(cand, NLSSGenerator) else cand
        idx = set(int(i) for i in idx)
        if not idx.issubset(allowed):
            raise ValueError(
                "candidate generating set not contained in cut_basis plus "
                "one-sided stabilizers"
            )
        f_cut = sorted(idx & set(cut_basis.tolist()))
        if not f_cut or pi_cut is None:
            continue
        indicator = np.zeros(code.n_stabilizers, dtype=np.uint8)
        indicator[f_cut] = 1
        if f2core.membership(indicator[cls.s_cut], pi_cut):
            violations.append(cand)
    return violations


# ---------------------------------------------------------------------------
# exhaustive and greedy oracles

BRUTE_MAX_STABILIZERS = 16
BRUTE_MAX_CONSTRAINTS = 4


def brute_force_mu(code: StabilizerCode, region: Region) -> int:
    """Exhaustive minimum of (cut basis count - S_A - S_B) over all bases.

    Enumerates every removal set (one stabilizer per independent
    constraint) whose complement still spans the group.  Meaningful as a
    direct minimization on codes where every constraint is
    non-topological (open boundaries).
    """
    nstab = code.n_stabilizers
    if nstab > BRUTE_MAX_STABILIZERS:
        raise ValueError(f"brute force limited to |S| <= {BRUTE_MAX_STABILIZERS}")
    d_g = code.rank()
    dim_c = nstab - d_g
    if dim_c > BRUTE_MAX_CONSTRAINTS:
        raise ValueError(f"brute force limited to dim C <= {BRUTE_MAX_CONSTRAINTS}")
    rep = ent.entanglement_entropy(code, region)
    cls = classify_cut(code, region)
    cut_set = set(int(i) for i in cls.s_cut)
    best = None
    for removal in itertools.combinations(range(nstab), dim_c):
        keep = [i for i in range(nstab) if i not in removal]
        if f2core.rank(code.matrix.take_rows(keep)) != d_g:
            continue
        n_cut = sum(1 for i in keep if i in cut_set)
        mu = n_cut - rep.entropy_a - rep.entropy_b
        best = mu if best is None else min(best, mu)
    assert best is not None, "no valid basis found (inconsistent code)"
    return best


def random_basis(code: StabilizerCode, rng: np.random.Generator) -> np.ndarray:
    """A random maximal independent subset of S."""
    order = rng.permutation(code.n_stabilizers)
    basis = f2core.RowBasis(2 * code.n_qubits)
    keep = [int(i) for i in order if basis.add_packed(code.matrix.data[int(i)])]
    return np.array(sorted(keep), dtype=np.int64)


def greedy_min_cut(code: StabilizerCode, region: Region, basis_rows) -> int:
    """Greedy descent on the cut-basis count by constraint swaps.

    While some non-basis stabilizer expands over the basis through a cut
    member, swap them (the expansion plus the stabilizer is a constraint,
    so the swap preserves independence).  Terminates at the global
    minimum: at a fixed point every uncut non-basis stabilizer expands
    over uncut members only, which forces the cut count to the rank bound.
    """
    cls = classify_cut(code, region)
    cut_set = set(int(i) for i in cls.s_cut)
    basis = set(int(i) for i in basis_rows)
    while True:
        solver = f2core.RowSolver(code.matrix.take_rows(sorted(basis)))
        ordered = sorted(basis)
        swapped = False
        for d in range(code.n_stabilizers):
            if d in basis or d in cut_set:
                continue
            combo = solver.express(code.matrix.row_dense(d))
            assert combo is not None
            expansion = [ordered[j] for j in np.nonzero(combo)[0]]
            cut_members = [c for c in expansion if c in cut_set]
            if cut_members:
                basis.remove(cut_members[0])
                basis.add(d)
                swapped = True
                break
        if not swapped:
            break
    return sum(1 for i in basis if i in cut_set)


# ---------------------------------------------------------------------------
# aggregation

def compute_report(
    code: StabilizerCode,
    region: Region,
    window: int | None = None,
    include_generators: bool = False,
) -> RecInfoReport:
    rep = ent.entanglement_entropy(code, region)
    cls = classify_cut(code, region)
    nontop = cst.nontop_space(code)
    mc = min_cut_count(code, region, nontop)
    mu_def = mc - rep.entropy_a - rep.entropy_b
    bound = mu_bound(code, region, nontop)
    mu3 = mu_nlss(code, region, window)
    gens = nlss_generators(code, region, window) if include_generators else []
    _, used = _nlss_setup(code, region, window)
    return RecInfoReport(
        s_a=rep.entropy_a,
        s_b=rep.entropy_b,
        cut_raw=len(cls.s_cut),
        min_cut=mc,
        mu_definition=mu_def,
        mu_bound=bound,
        mu_nlss=mu3,
        window=used,
        nlss_generators=gens,
    )
