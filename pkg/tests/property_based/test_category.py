"""
Property-based tests for the DG structure on twisted sheaves.
"""
# 说明：随机态射上的 DG 范畴恒等式。
# 覆盖：
# - μ¹∘μ¹ = 0：圆周与 2-环面的平凡线丛、带扭三角形线丛、三角形与圆周上的秩 2 锥层
# - 锥层的生成元次数为 0 与 1，F_i 与 F_ij 非零
# - 复合的结合律与逐点恒等的单位性
# - Leibniz 法则 μ¹μ²(S,T) = μ²(μ¹S,T) + (−1)^{|S|} μ²(S,μ¹T)

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from mirlib.category import (
    ChartMatrix,
    Generator,
    TwistedSheaf,
    compatible_transitions,
    identity_morphism,
    line_bundle,
    mu1,
    mu2,
    random_morphism,
    sheaf_validate,
)
from mirlib.core.affine import Section, circle_atlas, edges_of, torus_atlas, triangle_atlas
from mirlib.core.affine.atlas import with_updates
from mirlib.core.affinoid import twisting_cocycle

from .conftest import seeds


def _twisted_triangle():
    atlas = with_updates(
        triangle_atlas(),
        sections={(0, 1): Section((Fraction(1), Fraction(0)), Fraction(1, 3))},
        sign_cocycle={(0, 1, 2): 1},
    )
    cocycle = twisting_cocycle(atlas)
    sheaf, _ = line_bundle(atlas, cocycle, compatible_transitions(atlas, cocycle))
    return cocycle, sheaf


def _trivial(atlas):
    cocycle = twisting_cocycle(atlas)
    sheaf, _ = line_bundle(atlas, cocycle)
    return cocycle, sheaf


def _cone(atlas):
    # 每个顶点上 a (0 次) 与 b (1 次)，F_i = d: a -> b，F_ij = diag(1, -1)
    cocycle = twisting_cocycle(atlas)
    modules = {v: (Generator(f"a{v}", 0), Generator(f"b{v}", 1)) for v in atlas.vertex_ids}
    maps = {(v,): ChartMatrix.from_rows(atlas, (v,), [[0, 0], [1, 0]], 2) for v in atlas.vertex_ids}
    for edge in edges_of(atlas):
        maps[edge] = ChartMatrix.from_rows(atlas, edge, [[1, 0], [0, -1]], 2)
    return cocycle, TwistedSheaf(atlas=atlas, modules=modules, maps=maps, name="cone")


TWISTED = _twisted_triangle()
CIRCLE = _trivial(circle_atlas(3))
TORUS = _trivial(torus_atlas(2, 3))
TRIANGLE_CONE = _cone(triangle_atlas())
CIRCLE_CONE = _cone(circle_atlas(3))
ALL_CASES = {
    "twisted-triangle": TWISTED,
    "circle": CIRCLE,
    "torus": TORUS,
    "triangle-cone": TRIANGLE_CONE,
    "circle-cone": CIRCLE_CONE,
}
cases = pytest.mark.parametrize("case", list(ALL_CASES.values()), ids=list(ALL_CASES))
DG_SETTINGS = settings(max_examples=20, suppress_health_check=[HealthCheck.too_slow], deadline=None)


def _random(sheaf, degree, seed):
    return random_morphism(sheaf, sheaf, degree, seed, density=1.0, radius=1, terms=2)


@cases
def test_fixture_sheaves_validate(case) -> None:
    # 验证每个用例中的层满足带扭二次方程
    cocycle, sheaf = case
    report = sheaf_validate(sheaf, cocycle)
    assert report.passed, report.to_text()


def test_cones_carry_higher_maps() -> None:
    # 验证锥层的顶点微分与边映射非零，且含奇数次生成元
    _, sheaf = TRIANGLE_CONE
    assert sheaf.degrees(0) == [0, 1]
    assert not sheaf.structure_map((0,)).is_zero()
    assert not sheaf.structure_map((0, 2)).is_zero()


@cases
@given(degree=st.integers(0, 1), seed=seeds)
@DG_SETTINGS
def test_differential_squares_to_zero(case, degree, seed) -> None:
    # 验证任意随机态射满足 μ¹(μ¹ T) = 0
    cocycle, sheaf = case
    t = _random(sheaf, degree, seed)
    assert mu1(mu1(t, cocycle), cocycle).is_zero()


@cases
@given(s_degree=st.integers(0, 1), t_degree=st.integers(0, 1), s_seed=seeds, t_seed=seeds)
@DG_SETTINGS
def test_leibniz_rule(case, s_degree, t_degree, s_seed, t_seed) -> None:
    # 验证 μ¹ 关于 μ² 满足分次 Leibniz 法则
    cocycle, sheaf = case
    s = _random(sheaf, s_degree, s_seed)
    t = _random(sheaf, t_degree, t_seed)
    lhs = mu1(mu2(s, t, cocycle), cocycle)
    rhs = mu2(mu1(s, cocycle), t, cocycle) + mu2(s, mu1(t, cocycle), cocycle).signed(s_degree)
    assert lhs.equals_up_to(rhs)


@cases
@given(a_degree=st.integers(0, 1), b_degree=st.integers(0, 1), c_degree=st.integers(0, 1), seed=seeds)
@DG_SETTINGS
def test_composition_is_associative(case, a_degree, b_degree, c_degree, seed) -> None:
    # 验证 (ab)c = a(bc)，带扭系数 α 参与的链上亦成立
    cocycle, sheaf = case
    a = _random(sheaf, a_degree, seed)
    b = _random(sheaf, b_degree, seed + 1)
    c = _random(sheaf, c_degree, seed + 2)
    left = mu2(mu2(a, b, cocycle), c, cocycle)
    right = mu2(a, mu2(b, c, cocycle), cocycle)
    assert left.equals_up_to(right)


@cases
@given(degree=st.integers(0, 2), seed=seeds)
@DG_SETTINGS
def test_identity_is_a_two_sided_unit(case, degree, seed) -> None:
    # 验证逐点恒等是复合的双边单位
    cocycle, sheaf = case
    f = _random(sheaf, degree, seed)
    identity = identity_morphism(sheaf)
    assert mu2(identity, f, cocycle).equals_up_to(f)
    assert mu2(f, identity, cocycle).equals_up_to(f)
