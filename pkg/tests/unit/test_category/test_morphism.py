"""
Unit tests for sheaf morphisms and the DG operations.
"""
# 说明：SheafMorphism、compose、delta、μ¹、μ² 的单元测试。
# 覆盖：
# - 次数与形状检查、线性运算
# - 逐点恒等是 μ² 的双边单位且 μ¹(Id) = 0
# - δ 的内点删除符号、μ¹ 在圆周上给出 Čech 微分、μ¹∘μ¹ = 0

from fractions import Fraction

import pytest

from mirlib.category import (
    ChartMatrix,
    SheafMorphism,
    compatible_transitions,
    delta,
    identity_morphism,
    line_bundle,
    mu1,
    mu2,
    random_morphism,
    zero_morphism,
)
from mirlib.core.affine import Section
from mirlib.core.affine.atlas import with_updates
from mirlib.core.affinoid import AffinoidElement, twisting_cocycle
from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.random import create_rng


def _twisted_triangle(triangle):
    # 非零截面与符号的三角形，转移函数取相容的单项式
    atlas = with_updates(
        triangle,
        sections={(0, 1): Section((Fraction(1), Fraction(0)), Fraction(1, 3))},
        sign_cocycle={(0, 1, 2): 1},
    )
    cocycle = twisting_cocycle(atlas)
    sheaf, report = line_bundle(atlas, cocycle, compatible_transitions(atlas, cocycle))
    assert report.passed, report.to_text()
    return atlas, cocycle, sheaf


def _vertex_morphism(sheaf, values):
    atlas = sheaf.atlas
    components = {(v,): ChartMatrix.from_rows(atlas, (v,), [[value]], 1) for v, value in values.items()}
    return SheafMorphism(source=sheaf, target=sheaf, degree=0, components=components)


def test_degree_is_checked(circle3) -> None:
    # 验证线丛上次数 0 的态射不能有边分量
    sheaf, _ = line_bundle(circle3, twisting_cocycle(circle3))
    with pytest.raises(ValidationError):
        SheafMorphism(
            source=sheaf, target=sheaf, degree=0, components={(0, 1): ChartMatrix.from_rows(circle3, (0, 1), [[1]], 1)}
        )


def test_linear_structure(circle3) -> None:
    # 验证加减与零分量的丢弃
    sheaf, _ = line_bundle(circle3, twisting_cocycle(circle3))
    a = _vertex_morphism(sheaf, {0: 1, 1: 2})
    assert (a - a).is_zero()
    assert (a + a).component((1,)).describe() == [["4"]]
    assert zero_morphism(sheaf, sheaf, 0).support() == []
    with pytest.raises(ValidationError):
        a + zero_morphism(sheaf, sheaf, 1)


def test_identity_is_a_unit(triangle) -> None:
    # 验证 Id ∘ f = f ∘ Id = f，且 μ¹(Id) = 0
    atlas, cocycle, sheaf = _twisted_triangle(triangle)
    identity = identity_morphism(sheaf)
    f = random_morphism(sheaf, sheaf, 1, create_rng(5), density=1.0)
    assert mu2(identity, f, cocycle).equals_up_to(f)
    assert mu2(f, identity, cocycle).equals_up_to(f)
    assert mu1(identity, cocycle).is_zero()


def test_circle_differential_is_cech(circle3) -> None:
    # 验证平凡线丛上 μ¹(a) 在边 ij 上为 a_j − a_i
    cocycle = twisting_cocycle(circle3)
    sheaf, _ = line_bundle(circle3, cocycle)
    image = mu1(_vertex_morphism(sheaf, {0: 1, 1: 3, 2: 7}), cocycle)
    assert image.degree == 1
    assert image.support() == [(0, 1), (0, 2), (1, 2)]
    assert [image.component(e).describe()[0][0] for e in image.support()] == ["2", "6", "4"]


def test_delta_deletes_interior_points(triangle) -> None:
    # 验证 (δT)_012 = −T_02
    sheaf, _ = line_bundle(triangle, twisting_cocycle(triangle))
    edge = ChartMatrix.from_rows(triangle, (0, 2), [[AffinoidElement.monomial(triangle, (0, 2), 0, (1, 0))]], 1)
    morphism = SheafMorphism(source=sheaf, target=sheaf, degree=1, components={(0, 2): edge})
    image = delta(morphism)
    assert image.degree == 2
    assert image.support() == [(0, 1, 2)]
    assert image.component((0, 1, 2)).equals_up_to(-edge.restrict((0, 1, 2)))


def test_mu1_squares_to_zero(triangle) -> None:
    # 验证扭曲线丛上随机态射满足 μ¹(μ¹(T)) = 0
    _, cocycle, sheaf = _twisted_triangle(triangle)
    for seed in range(3):
        morphism = random_morphism(sheaf, sheaf, 0, create_rng(seed), density=1.0)
        assert mu1(mu1(morphism, cocycle), cocycle).is_zero()


def test_morphisms_need_one_atlas(circle3, triangle) -> None:
    # 验证不同图册上的层之间不能构造态射
    on_circle, _ = line_bundle(circle3, twisting_cocycle(circle3))
    on_triangle, _ = line_bundle(triangle, twisting_cocycle(triangle))
    with pytest.raises(ValidationError):
        zero_morphism(on_circle, on_triangle, 0)
