import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabrec import pauli
from stabrec.pauli import PauliOp
from stabrec.verify import _code


def op_from_string(n, xs=(), zs=()):
    x = np.zeros(n, dtype=np.uint8)
    z = np.zeros(n, dtype=np.uint8)
    x[list(xs)] = 1
    z[list(zs)] = 1
    return PauliOp(n, x, z)


def random_op(n, rng):
    return PauliOp(n, rng.integers(0, 2, n, dtype=np.uint8), rng.integers(0, 2, n, dtype=np.uint8))


def test_mul_three_qubit_example():
    # X on 1, Y on 3 times Z on 2, Z on 3 gives X1 Z2 X3 (1-indexed)
    p = op_from_string(3, xs=[0, 2], zs=[2])
    q = op_from_string(3, zs=[1, 2])
    r = pauli.mul(p, q)
    assert np.array_equal(r.x_bits, [1, 0, 1])
    assert np.array_equal(r.z_bits, [0, 1, 0])


def test_mul_self_inverse_and_identity():
    rng = np.random.default_rng(0)
    p = random_op(6, rng)
    assert pauli.mul(p, p).is_identity()
    assert pauli.mul(p, PauliOp.identity(6)) == p


def test_mul_length_mismatch():
    with pytest.raises(ValueError):
        pauli.mul(PauliOp.identity(3), PauliOp.identity(4))


def test_commutes_trivials():
    x1 = op_from_string(2, xs=[0])
    z1 = op_from_string(2, zs=[0])
    z2 = op_from_string(2, zs=[1])
    assert not pauli.commutes(x1, z1)
    assert pauli.commutes(x1, z2)


@pytest.mark.parametrize("model,L", [("cluster2", 3), ("toric2", 3), ("toric3", 2), ("xcube", 3), ("haah", 3)])
def test_all_stabilizer_pairs_commute(model, L):
    from stabrec import models

    assert models.commutation_failures(_code(model, L)) == []


@given(st.integers(2, 10), st.integers(0, 2**30))
def test_symplectic_form_bilinear(n, seed):
    rng = np.random.default_rng(seed)
    a, b, c = (random_op(n, rng) for _ in range(3))
    lhs = pauli.commutes(pauli.mul(a, b), c)
    rhs = pauli.commutes(a, c) == pauli.commutes(b, c)
    assert lhs == rhs


def test_support_trivials():
    code = _code("cluster1", 6)
    assert pauli.support(PauliOp.identity(6), code) == frozenset()
    assert pauli.support(op_from_string(6, xs=[2]), code) == frozenset({2})


def test_support_haah_cube_corners():
    code = _code("haah", 4)
    gx = code.stabilizer(0)
    gz = code.stabilizer(4**3)
    # seven corners carry operators; the double-identity corner does not
    assert len(pauli.support(gx, code)) == 7
    assert len(pauli.support(gz, code)) == 7
    # four corners per qubit type
    assert len(set(np.nonzero(gx.x_bits)[0] // 2)) == 7
    assert int(gx.x_bits.sum()) == 8


def test_restrict_trivials():
    rng = np.random.default_rng(4)
    p = random_op(8, rng)
    assert pauli.restrict(p, range(8)) == p
    assert pauli.restrict(p, []).is_identity()


@given(st.integers(2, 12), st.integers(0, 2**30))
def test_restrict_partition(n, seed):
    rng = np.random.default_rng(seed)
    p = random_op(n, rng)
    region = [i for i in range(n) if rng.integers(0, 2)]
    comp = [i for i in range(n) if i not in region]
    assert pauli.mul(pauli.restrict(p, region), pauli.restrict(p, comp)) == p


def test_render_sparse_string():
    code = _code("haah", 3)
    p = op_from_string(code.n_qubits, xs=[0], zs=[3])
    text = pauli.render(p, code)
    assert text == "X[0,0,0]a Z[0,0,1]b"
    assert pauli.render(PauliOp.identity(code.n_qubits), code) == "I"
    y = op_from_string(4, xs=[1], zs=[1])
    assert pauli.render(y) == "Y1"
