import numpy as np
import pytest

from stabrec import models, recinfo, regions
from stabrec.verify import _code


def test_toric2_square_cut_counts():
    code = _code("toric2", 8)
    for R in (2, 3):
        reg = regions.cuboid_region(code, extents=R)
        cls = regions.classify_cut(code, reg)
        stars = sum(1 for i in cls.s_cut if code.type_tags[i] == "star")
        plaqs = len(cls.s_cut) - stars
        assert stars == 4 * R and plaqs == 4 * R


def test_toric3_cut_counts():
    code = _code("toric3", 8)
    R = 3
    reg = regions.cuboid_region(code, extents=R)
    cls = regions.classify_cut(code, reg)
    stars = sum(1 for i in cls.s_cut if code.type_tags[i] == "star")
    assert stars == 6 * R**2 + 2
    assert len(cls.s_cut) - stars == 12 * R * (R + 1)


def test_xcube_cut_cube_count():
    code = _code("xcube", 10)
    R = 3
    reg = regions.cuboid_region(code, extents=R)
    cls = regions.classify_cut(code, reg)
    cubes = sum(1 for i in cls.s_cut if code.type_tags[i] == "cube")
    assert cubes == 6 * R**2 + 12 * R  # corner cubes share no edge, not cut


def test_haah_double_identity_corner_cubes_not_cut():
    code = _code("haah", 10)
    R = 3
    reg = regions.cuboid_region(code, extents=R)
    cls = regions.classify_cut(code, reg)
    assert len(cls.s_cut) == 12 * R**2 + 2
    # the two exceptional cubes touch A only at their double-identity corner
    L = code.L
    def flat(x, y, z):
        return (x * L + y) * L + z
    gx_corner = flat(L - 1, L - 1, L - 1)
    gz_corner = L**3 + flat(R % L, R, R)
    assert gx_corner in set(cls.s_b.tolist())
    assert gz_corner in set(cls.s_b.tolist())


def test_cluster1_cut_count():
    code = _code("cluster1", 16)
    reg = regions.cuboid_region(code, extents=(5,))
    cls = regions.classify_cut(code, reg)
    assert len(cls.s_cut) == 4


def test_region_guard():
    code = _code("toric2", 8)
    with pytest.raises(ValueError):
        regions.cuboid_region(code, extents=4)  # 2R >= L
    with pytest.raises(ValueError):
        regions.cuboid_region(code, extents=0)


def test_classification_is_partition():
    for model, L, ext in [("toric2", 6, 2), ("xcube", 6, 2), ("haah", 6, 2)]:
        code = _code(model, L)
        reg = regions.cuboid_region(code, extents=ext)
        cls = regions.classify_cut(code, reg)
        assert len(cls.s_a) + len(cls.s_b) + len(cls.s_cut) == code.n_stabilizers
        combined = np.concatenate([cls.s_a, cls.s_b, cls.s_cut])
        assert len(np.unique(combined)) == code.n_stabilizers


def test_translation_invariance():
    code = _code("toric3", 8)
    base = recinfo.compute_report(code, regions.cuboid_region(code, extents=2))
    moved = recinfo.compute_report(
        code, regions.cuboid_region(code, origin=(3, 5, 1), extents=2)
    )
    assert base.to_dict() == moved.to_dict()


def test_translation_across_wrap():
    code = _code("toric2", 8)
    base = recinfo.compute_report(code, regions.cuboid_region(code, extents=3))
    moved = recinfo.compute_report(
        code, regions.cuboid_region(code, origin=(6, 6), extents=3)
    )
    assert base.to_dict() == moved.to_dict()


def test_smooth_region_wrong_model():
    with pytest.raises(ValueError):
        regions.smooth_cluster_region(_code("toric2", 6), 2)


def test_smooth_degenerate_single_site():
    reg = regions.smooth_cluster_region(_code("cluster2", 8), 1)
    assert reg.size == 1 and "degenerate" in reg.note


def test_solid_torus_errors_and_degenerations():
    code = _code("toric3", 12)
    with pytest.raises(ValueError):
        # cross section touching the outer surface
        regions.solid_torus_region(code, (2, 2, 2), axis=2, cross_size=2)
    cuboid = regions.cuboid_region(code, extents=5)
    filled = regions.solid_torus_region(code, (5, 5, 5), axis=2, tunnel_len=0)
    assert np.array_equal(filled.qubits, cuboid.qubits)


def test_circular_interval():
    assert regions.circular_interval([7, 0, 1], 8) == (7, 3)
    assert regions.circular_interval([2, 3, 4], 8) == (2, 3)
    assert regions.circular_interval(list(range(8)), 8) == (0, 8)


def test_descriptor_strings():
    code = _code("toric2", 8)
    reg = regions.cuboid_region(code, extents=3)
    assert reg.descriptor() == "square:3x3@0,0"
