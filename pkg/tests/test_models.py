import numpy as np
import pytest

from stabrec import f2core, models
from stabrec.models import ModelSpec, build
from stabrec.verify import _code


def test_spec_validation():
    with pytest.raises(ValueError):
        ModelSpec("haah", 4, "obc")
    with pytest.raises(ValueError):
        ModelSpec("toric4", 4)
    with pytest.raises(ValueError):
        ModelSpec("toric2", 1)


def test_cluster1_counts():
    d = models.validate(_code("cluster1", 8))
    assert (d.n_qubits, d.n_stabilizers, d.dim_constraints) == (8, 8, 0)


def test_toric2_counts():
    d = models.validate(_code("toric2", 4))
    assert (d.n_qubits, d.n_stabilizers, d.d_g, d.d_logical) == (32, 32, 30, 2)


def test_haah_counts():
    code = _code("haah", 4)
    d = models.validate(code)
    assert (d.n_qubits, d.n_stabilizers) == (128, 128)
    # every stabilizer touches 4 of 8 cube corners per qubit type
    for i in (0, 100):
        s = code.stabilizer(i)
        bits = s.x_bits | s.z_bits
        a_sites = set(np.nonzero(bits[0::2])[0].tolist())
        b_sites = set(np.nonzero(bits[1::2])[0].tolist())
        assert len(a_sites) == 4 and len(b_sites) == 4


def test_toric3_validate():
    d = models.validate(_code("toric3", 4))
    assert d.passed and d.d_logical == 3
    assert d.dim_constraints == 4**3 + 3


def test_xcube_validate():
    d = models.validate(_code("xcube", 4))
    assert d.passed and d.d_logical == 6 * 4 - 3


def test_corrupted_code_reports_commutation_failure():
    code = build(ModelSpec("toric2", 3))
    dense = code.matrix.to_dense()
    dense[0, 0] ^= 1  # flip one X bit of the first star
    bad = models.from_rows(
        dense[:, : code.n_qubits], dense[:, code.n_qubits :], code.qubit_cells
    )
    d = models.validate(bad)
    assert not d.commuting
    assert d.failures


def test_pbc_constraint_dimension_identity():
    for model, L in [("cluster2", 3), ("toric2", 4), ("toric3", 3), ("xcube", 3), ("haah", 3)]:
        d = models.validate(_code(model, L))
        assert d.dim_constraints == d.n_stabilizers - d.d_g


def test_toric2_obc_has_no_constraints():
    d = models.validate(_code("toric2", 4, "obc"))
    assert d.d_g == d.n_qubits and d.dim_constraints == 0 and d.d_logical == 0


def test_rebuild_is_bit_identical():
    a = build(ModelSpec("xcube", 3))
    b = build(ModelSpec("xcube", 3))
    assert a.matrix == b.matrix
    assert a.labels == b.labels


@pytest.mark.parametrize("model,L", [("cluster2", 4), ("toric2", 4), ("toric3", 3), ("xcube", 3)])
def test_obc_support_contained_in_pbc(model, L):
    pbc = _code(model, L)
    obc = _code(model, L, "obc")
    assert obc.n_stabilizers == pbc.n_stabilizers
    assert not np.any(obc.matrix.data & ~pbc.matrix.data)
    # and strictly smaller somewhere
    assert not (obc.matrix == pbc.matrix)


def test_declared_local_constraints():
    t3 = _code("toric3", 4)
    sets = models.declared_local_constraints(t3)
    assert len(sets) == 64 and all(len(s) == 6 for s in sets)
    xc = _code("xcube", 4)
    sets = models.declared_local_constraints(xc)
    assert len(sets) == 64 and all(len(s) == 3 for s in sets)
    for model, L in [("cluster2", 3), ("toric2", 3), ("haah", 3)]:
        assert models.declared_local_constraints(_code(model, L)) == []


def test_export_table():
    code = _code("toric2", 2)
    table = models.export_table(code)
    lines = table.strip().split("\n")
    assert len(lines) == code.n_stabilizers
    first = lines[0].split("\t")
    assert first[0] == "star[0,0]" and first[1] == "star"
    assert first[3] == "-"  # stars carry no Z support


def test_support_coverage_every_model():
    for model, L in [("cluster3", 3), ("toric2", 3), ("toric3", 3), ("xcube", 3), ("haah", 3)]:
        assert models.validate(_code(model, L)).coverage


def test_wrapped_minimal_instances_build():
    # L = 2 wrapped instances stay valid stabilizer sets
    for model in ("toric2", "toric3", "xcube", "haah", "cluster1"):
        d = models.validate(_code(model, 2))
        assert d.commuting and d.coverage
