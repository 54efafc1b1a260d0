"""
Unit tests for the maps from pairs barycentric cells to Adams cubes.
"""
# 说明：PBΣ 胞腔到 Adams 立方体的四个映射的单元测试。
# 覆盖：目标立方体、点映射、面映射的偏序性、单元素 vI 的乘积分解检查（对照输出 / 输入立方体的层）与坐标校验

from fractions import Fraction

import pytest

from mirlib.adams import input_cube, output_cube, pairs_cell_to_adams, singleton_bijection
from mirlib.adams.pairs import cell_point
from mirlib.core.affine import PairsBarycentricCell, circle_atlas, pairs_barycentric_cells, triangle_atlas
from mirlib.core.exceptions import ValidationError

EDGE_CELL = PairsBarycentricCell(inner=((0,),), outer=((0,), (0, 1)))


def test_targets_of_edge_cell() -> None:
    # 验证 σ_{0⊂(0⊂01)} 的输出棱柱为一维，其余目标为点
    maps = pairs_cell_to_adams(EDGE_CELL)
    assert maps["mu_ou"].target.labels == (("+", 0), ("+", 1), ("-", 0))
    assert maps["mu_ou"].target.dimension == 1
    assert maps["max"].target.dimension == 0
    assert maps["min"].target.dimension == 0
    assert maps["mu_in"].target.dimension == 0


def test_point_images() -> None:
    # 验证输出棱柱坐标 (+,1) 复制成员 01 的坐标
    maps = pairs_cell_to_adams(EDGE_CELL)
    images = maps.image([Fraction(1, 3)])
    assert images["mu_ou"] == (Fraction(1, 3),)
    assert images["max"] == ()


def test_singleton_bijection() -> None:
    # 验证单元素 vI 时胞腔与 输出 × 输入 立方体之积一一对应
    maps = pairs_cell_to_adams(EDGE_CELL)
    assert maps.bijection == {
        "domain_dimension": 1,
        "output_dimension": 1,
        "input_dimension": 0,
        "targets": [output_cube([(0,), (0, 1)]).name(), input_cube([(0,)]).name()],
        "bijective": True,
    }
    upper = PairsBarycentricCell(inner=((0, 1),), outer=((0,), (0, 1)))
    assert singleton_bijection(upper)["input_dimension"] == 1


def test_singleton_cells_of_a_triangle_are_products() -> None:
    # 验证三角形上每个单元素 vI 胞腔：维数相加，且面偏序与格点层均与两个立方体一致
    cells = [c for c in pairs_barycentric_cells(triangle_atlas()) if len(c.inner) == 1]
    assert cells
    for cell in cells:
        result = singleton_bijection(cell)
        assert result["bijective"], cell.label()
        assert result["domain_dimension"] == result["output_dimension"] + result["input_dimension"]
    top = PairsBarycentricCell(inner=((0, 2),), outer=((0,), (0, 2), (0, 1, 2)))
    assert singleton_bijection(top)["output_dimension"] == 1
    assert pairs_cell_to_adams(top)["mu_ou"].target.dimension == 0


def test_maps_are_poset_maps() -> None:
    # 验证所有圆周胞腔的四个映射都保持面关系
    for cell in pairs_barycentric_cells(circle_atlas(3)):
        assert pairs_cell_to_adams(cell).is_poset_map(), cell.label()


def test_bijection_needs_singleton() -> None:
    # 验证 |vI| > 1 时不做双射检查
    cell = PairsBarycentricCell(inner=((0,), (0, 1)), outer=((0,), (0, 1)))
    assert pairs_cell_to_adams(cell).bijection is None
    with pytest.raises(ValidationError):
        singleton_bijection(cell)


def test_cell_point_validation() -> None:
    # 验证坐标个数与范围
    assert cell_point(EDGE_CELL) == {(0, 1): Fraction(1, 2)}
    with pytest.raises(ValidationError):
        cell_point(EDGE_CELL, [0, 0])
    with pytest.raises(ValidationError):
        cell_point(EDGE_CELL, [2])
