"""
Unit tests for exact polytope geometry.
"""
# 说明：Polytope / Region 精确几何的单元测试。
# 覆盖：
# - from_points：一维端点规范化、二维凸包去掉内点
# - contains_point / contains：边界点视为包含
# - intersect_all：二维裁剪、一维空交，以及 min_pairing

from fractions import Fraction

import pytest

from mirlib.core.affine.geometry import Polytope, intersect_all
from mirlib.core.exceptions import ValidationError


def test_interval_normalized_to_endpoints() -> None:
    # 验证一维多面体只保留两个端点
    interval = Polytope.from_points([(0,), (2,), (1,)])
    assert interval.vertices == ((Fraction(0),), (Fraction(2),))


def test_hull_drops_interior_points() -> None:
    # 验证二维凸包不含内点与共线点
    square = Polytope.from_points([(0, 0), (1, 0), (1, 1), (0, 1), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), 0)])
    assert len(square.vertices) == 4


def test_containment_includes_boundary() -> None:
    # 验证边界点被包含，外部点不被包含
    square = Polytope.box((0, 0), 1)
    assert square.contains_point((1, 0))
    assert not square.contains_point((Fraction(3, 2), 0))
    assert square.contains(Polytope.box((0, 0), Fraction(1, 2)))


def test_planar_intersection_and_pairing() -> None:
    # 验证两个方体之交为 [0,1]^2，并在其上最小化线性泛函
    region = intersect_all([Polytope.box((0, 0), 1), Polytope.box((1, 1), 1)])
    assert not region.is_empty()
    assert region.min_pairing((1, 1)) == 0
    assert region.min_pairing((-1, 0)) == -1
    assert region.contains_point((Fraction(1, 2), Fraction(1, 2)))


def test_disjoint_intervals_give_empty_region() -> None:
    # 验证不相交区间之交为空，在其上取最小值报错
    region = intersect_all([Polytope.from_points([(0,), (1,)]), Polytope.from_points([(2,), (3,)])])
    assert region.is_empty()
    with pytest.raises(ValidationError):
        region.min_pairing((1,))


def test_inconsistent_dimensions_rejected() -> None:
    # 验证顶点维数不一致时报错
    with pytest.raises(ValidationError):
        Polytope.from_points([(0, 0), (1,)])
