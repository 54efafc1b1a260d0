"""
Unit tests for twisted sheaves.
"""
# 说明：TwistedSheaf 与 sheaf_validate 的单元测试。
# 覆盖：
# - 构造检查：非链、形状、次数
# - 二次方程：平凡线丛通过，符号错误给出失败链与残差
# - 生成元置换、JSON 读写

from fractions import Fraction

import pytest

from mirlib.category import ChartMatrix, Generator, TwistedSheaf, line_bundle, load_sheaf, save_sheaf, sheaf_validate
from mirlib.category.sheaf import sheaf_from_dict, sheaf_to_dict
from mirlib.core.affine.atlas import with_updates
from mirlib.core.affinoid import twisting_cocycle
from mirlib.core.exceptions import ValidationError


def _two_term(atlas):
    # F(0) = F(1) = e (deg 0) ⊕ f (deg 1)；F_0 : e -> f
    modules = {v: (Generator("e", 0), Generator("f", 1)) for v in atlas.vertex_ids}
    return TwistedSheaf(atlas=atlas, modules=modules)


def test_construction_checks(interval) -> None:
    # 验证非链、形状与次数错误在构造时报错
    sheaf = _two_term(interval)
    with pytest.raises(ValidationError):
        sheaf.with_map((1, 0), ChartMatrix.zeros(interval, (0, 1), 2, 2))
    with pytest.raises(ValidationError):
        sheaf.with_map((0, 1), ChartMatrix.zeros(interval, (0, 1), 1, 2))
    with pytest.raises(ValidationError):
        # 边上的映射次数为 0：e -> f 不允许
        sheaf.with_map((0, 1), ChartMatrix.from_rows(interval, (0, 1), [[0, 0], [1, 0]], 2))
    differential = ChartMatrix.from_rows(interval, (0,), [[0, 0], [1, 0]], 2)
    assert sheaf.with_map((0,), differential).structure_map((0,)).describe() == [["0", "0"], ["1", "0"]]


def test_trivial_line_bundle_validates(triangle) -> None:
    # 验证平凡线丛满足二次方程，详情记录检查的链数
    cocycle = twisting_cocycle(triangle)
    sheaf, report = line_bundle(triangle, cocycle)
    assert report.passed, report.to_text()
    assert report.details["checked_chains"] == 7
    assert sheaf.total_rank() == 3


def test_wrong_sign_is_located(triangle) -> None:
    # 验证 v_012 = 1 时全为 1 的转移函数在 012 上违反方程
    flipped = with_updates(triangle, sign_cocycle={(0, 1, 2): 1})
    _, report = line_bundle(flipped, twisting_cocycle(flipped))
    assert report.failing_locations("sheaf_equation") == [(0, 1, 2)]
    assert report.failures[0].witness["residual"] == [["2"]]


def test_differential_must_square_to_zero(interval) -> None:
    # 验证顶点上满足 F_0² = 0 的微分通过校验
    cocycle = twisting_cocycle(interval)
    modules = {v: (Generator("e", 0),) for v in interval.vertex_ids}
    modules[0] = (Generator("e", 0), Generator("f", 1))
    sheaf = TwistedSheaf(atlas=interval, modules=modules)
    good = sheaf.with_map((0,), ChartMatrix.from_rows(interval, (0,), [[0, 0], [1, 0]], 2))
    assert sheaf_validate(good, cocycle).passed


def test_permuted_generators(interval) -> None:
    # 验证交换生成元后结构映射随之置换
    sheaf = _two_term(interval).with_map((0,), ChartMatrix.from_rows(interval, (0,), [[0, 0], [1, 0]], 2))
    swapped = sheaf.permuted(0, [1, 0])
    assert [g.label for g in swapped.modules[0]] == ["f", "e"]
    assert swapped.structure_map((0,)).describe() == [["0", "1"], ["0", "0"]]
    with pytest.raises(ValidationError):
        sheaf.permuted(0, [0, 0])


def test_json_round_trip(tmp_path, circle3) -> None:
    # 验证写出再读入后结构映射不变
    cocycle = twisting_cocycle(circle3)
    sheaf, _ = line_bundle(circle3, cocycle, precision=4)
    path = save_sheaf(sheaf, tmp_path / "bundle.json")
    loaded = load_sheaf(circle3, path)
    assert loaded.name == sheaf.name
    assert sheaf_to_dict(loaded)["maps"] == sheaf_to_dict(sheaf)["maps"]
    assert sheaf_validate(loaded, cocycle, Fraction(4)).passed


def test_malformed_sheaf(circle3) -> None:
    # 验证缺少 vertex 字段的模块描述报错
    with pytest.raises(ValidationError):
        sheaf_from_dict(circle3, {"modules": [{"generators": []}]})
