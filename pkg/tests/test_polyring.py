import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabrec import f2core, models, pauli, polyring
from stabrec.polyring import LaurentPoly3, haah_map, monomial
from stabrec.verify import _code


def test_haah_map_entries():
    m = haah_map()
    assert m.entries[0][0].monomials == frozenset({(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)})
    assert m.entries[1][0].monomials == frozenset({(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)})
    assert m.entries[3][1].monomials == frozenset({(0, 0, 0), (-1, 0, 0), (0, -1, 0), (0, 0, -1)})
    assert m.entries[2][1].monomials == frozenset({(0, 0, 0), (-1, -1, 0), (0, -1, -1), (-1, 0, -1)})
    assert m.entries[0][1].is_zero() and m.entries[2][0].is_zero()


def test_poly_algebra():
    p = LaurentPoly3.from_terms([(0, 0, 0), (1, 0, 0)])
    assert (p + p).is_zero()
    q = p * monomial(0, 1, 0)
    assert q.monomials == frozenset({(0, 1, 0), (1, 1, 0)})
    assert p.shift((2, 0, -1)).monomials == frozenset({(2, 0, -1), (3, 0, -1)})


def test_expand_single_stabilizer_matches_lattice():
    code = _code("haah", 4)
    op = polyring.expand(haah_map(), 0, LaurentPoly3.one(), 4)
    assert op == code.stabilizer(0)


def test_expand_two_translates():
    L = 8
    P = LaurentPoly3.from_terms([(3, 2, 0), (0, 1, 4)])
    m = haah_map()
    combined = polyring.expand(m, 0, P, L)
    separate = pauli.mul(
        polyring.expand(m, 0, monomial(3, 2, 0), L),
        polyring.expand(m, 0, monomial(0, 1, 4), L),
    )
    assert combined == separate


def test_expand_zero_polynomial():
    assert polyring.expand(haah_map(), 0, LaurentPoly3.zero(), 4).is_identity()


@given(st.integers(0, 2**30))
def test_expand_is_homomorphism(seed):
    rng = np.random.default_rng(seed)
    L = 5
    terms = [tuple(int(v) for v in rng.integers(0, L, 3)) for _ in range(4)]
    P = LaurentPoly3.from_terms(terms[:2])
    Q = LaurentPoly3.from_terms(terms[2:])
    m = haah_map()
    col = int(rng.integers(0, 2))
    assert polyring.expand(m, col, P + Q, L) == pauli.mul(
        polyring.expand(m, col, P, L), polyring.expand(m, col, Q, L)
    )


def test_map_to_code_matches_lattice_builder():
    for L in (2, 3):
        assert polyring.map_to_code(haah_map(), L).matrix == _code("haah", L).matrix


def test_map_to_code_degenerate_wrap_validates():
    code = polyring.map_to_code(haah_map(), 2)
    d = models.validate(code)
    assert d.commuting and d.coverage


def test_single_row_map_gives_product_of_x_code():
    zero = LaurentPoly3.zero()
    smap = polyring.StabilizerMap(
        q=1, m=1, entries=((LaurentPoly3.one(),), (zero,))
    )
    code = polyring.map_to_code(smap, 3)
    assert code.n_stabilizers == code.n_qubits == 27
    d = models.validate(code)
    assert d.commuting and d.coverage and d.d_g == 27


@pytest.mark.parametrize("R", [2, 3, 4])
def test_haah_nlss_count(R):
    assert polyring.haah_nlss_count(R) == 12 * R - 2


def test_haah_count_mirror_symmetry():
    for R in (2, 3):
        assert polyring.haah_nlss_count(R, mirrored=True) == polyring.haah_nlss_count(R)


def test_recursion_internal_structure():
    for R in (2, 3, 4):
        # boundary-plane unknowns: three faces through the origin corner
        assert (R + 1) ** 3 - R**3 == 3 * R**2 + 3 * R + 1
        # the two relations are redundant at interior sites with a full
        # negative-octant neighborhood
        system = polyring.haah_recursion_system(R)
        assert 2 * R**3 - f2core.rank(system) == (R - 1) ** 3


def test_expansion_injective():
    for R in (2, 3, 4):
        assert polyring.expansion_injective(R)


def test_count_guard():
    with pytest.raises(ValueError):
        polyring.haah_nlss_count(1)


def test_count_agrees_with_lattice_methods():
    from stabrec import recinfo, regions

    code = _code("haah", 10)
    for R in (2, 3):
        reg = regions.cuboid_region(code, extents=R)
        assert (
            polyring.haah_nlss_count(R)
            == recinfo.mu_nlss(code, reg)
            == recinfo.mu_definition(code, reg)
        )
