"""
Unit tests for chart atlases and their validation.
"""
# 说明：ChartAtlas 数据模型与 atlas_validate 的单元测试。
# 覆盖：
# - 环面偏移 offset、截面索引、链判定与图卡区域 domain
# - atlas_validate：正常图册通过，嵌套条件默认为 warning，符号上链与非整微分被报告
# - 构造时的结构错误（重复顶点、未知顶点、非法分母）

from fractions import Fraction

import pytest

from mirlib.core.affine import (
    ChartAtlas,
    Section,
    atlas_validate,
    circle_atlas,
    interval_atlas,
    tetrahedron_atlas,
    triangle_atlas,
)
from mirlib.core.affine.atlas import with_updates
from mirlib.core.exceptions import ValidationError


def test_circle_offsets_use_nearest_representative() -> None:
    # 验证 q_2 − q_0 = 2/3 取最近代表元 −1/3，反向为 1/3
    atlas = circle_atlas(3)
    assert atlas.offset(0, 2) == (Fraction(-1, 3),)
    assert atlas.offset(2, 0) == (Fraction(1, 3),)
    assert atlas.offset(1, 1) == (Fraction(0),)


def test_chains_of_circle() -> None:
    # 验证圆周图册的链按 (长度, 字典序) 排列
    atlas = circle_atlas(3)
    assert atlas.chains() == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    assert atlas.is_chain((0, 2))
    assert not atlas.is_chain((0, 1, 2))
    assert not atlas.is_chain((1, 0))


def test_domain_of_edge() -> None:
    # 验证链 01 的图卡区域以 q_1 为原点为 [−5/12, 1/12]
    atlas = circle_atlas(3)
    domain = atlas.domain((0, 1))
    assert domain.anchor == 1
    assert domain.min_pairing((1,)) == Fraction(-5, 12)
    assert domain.min_pairing((-1,)) == Fraction(-1, 12)


def test_domain_rejects_non_chain() -> None:
    # 验证非链（未排序）请求区域时报错
    with pytest.raises(ValidationError):
        interval_atlas().domain((1, 0))


def test_sections_default_to_zero_and_are_ordered() -> None:
    # 验证缺失的截面为零，反向索引报错
    atlas = circle_atlas(3)
    assert atlas.section(0, 1) == Section((Fraction(0),), Fraction(0))
    with pytest.raises(ValidationError):
        atlas.section(1, 0)


def test_fixture_atlases_validate() -> None:
    # 验证内置图册通过校验；嵌套条件只作为 warning 注释
    for atlas in (circle_atlas(3), interval_atlas(), triangle_atlas()):
        report = atlas_validate(atlas)
        assert report.passed, report.to_text()
    report = atlas_validate(circle_atlas(3))
    assert any(note.code == "nesting" for note in report.annotations)


def test_strict_nesting_turns_warnings_into_failures() -> None:
    # 验证 strict_nesting=True 时嵌套违例成为失败
    report = atlas_validate(circle_atlas(3), strict_nesting=True)
    assert "nesting" in report.failure_codes()


def test_non_integral_differential_reported() -> None:
    # 验证 df_01 − df_02 + df_12 非整时被报告在三元组 012 上
    atlas = with_updates(
        triangle_atlas(),
        sections={(0, 1): Section((Fraction(1, 2), Fraction(0)), Fraction(0))},
    )
    report = atlas_validate(atlas)
    assert report.failing_locations("non_integral_differential") == [(0, 1, 2)]


def test_sign_cochain_must_be_cocycle() -> None:
    # 验证四面体上只有 v_012 = 1 的符号上链不是上闭链
    atlas = with_updates(tetrahedron_atlas(), sign_cocycle={(0, 1, 2): 1})
    report = atlas_validate(atlas)
    assert report.failing_locations("sign_not_cocycle") == [(0, 1, 2, 3)]


def test_construction_errors() -> None:
    # 验证重复顶点、未知顶点与非法格点分母在构造时报错
    atlas = circle_atlas(3)
    with pytest.raises(ValidationError):
        ChartAtlas(dimension=1, vertices=atlas.vertices + atlas.vertices[:1], simplices=())
    with pytest.raises(ValidationError):
        ChartAtlas(dimension=1, vertices=atlas.vertices, simplices=((0, 7),))
    with pytest.raises(ValidationError):
        ChartAtlas(dimension=1, vertices=atlas.vertices, simplices=(), lattice_denominator=0)
