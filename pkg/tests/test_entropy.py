import numpy as np
import pytest

from stabrec import entropy, models, regions
from stabrec.verify import _code


def test_subgroup_dim_empty_region():
    code = _code("toric2", 4)
    assert entropy.subgroup_dim_in(code, regions.from_qubits([])) == 0


def test_subgroup_dim_cluster_segment():
    code = _code("cluster1", 16)
    R = 5
    reg = regions.cuboid_region(code, extents=(R,))
    assert entropy.subgroup_dim_in(code, reg) == R - 2


def test_subgroup_dim_toric3():
    code = _code("toric3", 8)
    for R in (2, 3):
        reg = regions.cuboid_region(code, extents=R)
        d_ga = entropy.subgroup_dim_in(code, reg)
        assert reg.size - d_ga == 6 * R**2 + 1


@pytest.mark.parametrize(
    "model,L,R,formula",
    [
        ("toric2", 8, 2, lambda R: 4 * R - 1),
        ("toric2", 8, 3, lambda R: 4 * R - 1),
        ("xcube", 8, 2, lambda R: 6 * R**2 + 9 * R - 4),
        ("xcube", 10, 3, lambda R: 6 * R**2 + 9 * R - 4),
        ("haah", 8, 2, lambda R: 6 * R**2 - 6 * R + 2),
        ("haah", 10, 3, lambda R: 6 * R**2 - 6 * R + 2),
    ],
)
def test_entropy_closed_forms(model, L, R, formula):
    code = _code(model, L)
    rep = entropy.entanglement_entropy(code, regions.cuboid_region(code, extents=R))
    assert rep.entropy_a == formula(R)
    assert rep.entropy_a == rep.entropy_b


def test_logical_dims():
    assert entropy.logical_dim(_code("toric2", 6)) == 2
    assert entropy.logical_dim(_code("toric2", 6, "obc")) == 0
    assert entropy.logical_dim(_code("cluster2", 5)) == 0
    assert entropy.logical_dim(_code("cluster3", 3, "obc")) == 0


def test_entropy_invariant_under_relabeling():
    code = _code("toric2", 6)
    reg = regions.cuboid_region(code, extents=2)
    base = entropy.entanglement_entropy(code, reg).entropy_a
    rng = np.random.default_rng(12)
    perm = rng.permutation(code.n_stabilizers)
    dense = code.matrix.to_dense()[perm]
    shuffled = models.from_rows(
        dense[:, : code.n_qubits], dense[:, code.n_qubits :], code.qubit_cells
    )
    assert entropy.entanglement_entropy(shuffled, reg).entropy_a == base


def test_purity_across_models_and_bcs():
    cases = [
        ("toric2", 6, "pbc", 2), ("toric2", 6, "obc", 2),
        ("toric3", 4, "pbc", 1), ("toric3", 4, "obc", 1),
        ("xcube", 4, "obc", 1), ("haah", 4, "pbc", 1),
        ("cluster2", 6, "pbc", 2),
    ]
    for model, L, bc, R in cases:
        code = _code(model, L, bc)
        reg = regions.cuboid_region(code, origin=(1,) * code.dim, extents=R)
        rep = entropy.entanglement_entropy(code, reg)
        assert rep.entropy_a == rep.entropy_b


def test_dense_oracle_matches_formula_toric2_minimal():
    code = _code("toric2", 2)
    reg = regions.from_qubits([0, 1])
    want = entropy.entanglement_entropy(code, reg).entropy_a
    got = entropy.dense_entropy_oracle(code, reg)
    assert abs(got - want) < 1e-9


def test_dense_oracle_excited_states_same_entropy():
    code = _code("toric2", 2)
    reg = regions.from_qubits([0, 1])
    want = entropy.entanglement_entropy(code, reg).entropy_a
    n_basis = len(entropy.stabilizer_basis_rows(code))
    k = np.zeros(n_basis, dtype=np.uint8)
    k[0] = 1
    got = entropy.dense_entropy_oracle(code, reg, k_bits=k)
    assert abs(got - want) < 1e-9
    a = np.array([1, 0], dtype=np.uint8)
    got = entropy.dense_entropy_oracle(code, reg, k_bits=k, a_bits=a)
    assert abs(got - want) < 1e-9


def test_dense_oracle_trivial_single_qubit():
    triv = models.from_rows(
        np.array([[0]], dtype=np.uint8), np.array([[1]], dtype=np.uint8), np.array([[0]])
    )
    got = entropy.dense_entropy_oracle(triv, regions.from_qubits([0]))
    assert abs(got) < 1e-9


def test_dense_oracle_size_guard():
    code = _code("toric2", 4)
    with pytest.raises(ValueError):
        entropy.dense_entropy_oracle(code, regions.from_qubits([0]))
