"""
Unit tests for chart-ring elements.
"""
# 说明：AffinoidElement（图卡环元素）的单元测试。
# 覆盖：
# - 多面体赋值截断与精度传播
# - restrict：指数平移 ⟨q_J − q_I, A⟩ 与缺失包含关系
# - unit_invert：主导项 + 几何级数；非单位与零元报 PrecisionError
# - coefficient_of、format 与 JSON

from fractions import Fraction

import pytest

from mirlib.core.affinoid import AffinoidElement
from mirlib.core.exceptions import ChartError, PrecisionError, ValidationError
from mirlib.core.novikov import INF


def test_valuation_uses_chart_domain(circle3) -> None:
    # 验证 z 在图卡 [−5/12, 5/12] 上的多面体赋值为 −5/12
    z = AffinoidElement.monomial(circle3, 0, 0, (1,))
    assert z.polytope_valuation() == Fraction(-5, 12)
    assert AffinoidElement.zero(circle3, 0).polytope_valuation() == INF


def test_truncation_drops_high_terms(circle3) -> None:
    # 验证 w = 1 − 5/12 = 7/12 >= 1/2 的项被丢弃
    element = AffinoidElement.from_terms(circle3, 0, [(1, (1,), 1)], precision=Fraction(1, 2))
    assert element.is_zero()
    assert element.precision == Fraction(1, 2)


def test_multiplication_precision(circle3) -> None:
    # 验证乘法精度 min(E_a + min(0, w_b), E_b + min(0, w_a))
    z = AffinoidElement.monomial(circle3, 0, 0, (1,))
    c = AffinoidElement.constant(circle3, 0, 3, precision=2)
    product = z * c
    assert product.precision == Fraction(19, 12)
    assert product.terms == ((Fraction(0), (1,), 3),)


def test_restrict_rebases_exponents(circle3) -> None:
    # 验证 z 从图卡 0 限制到链 01 时 T 指数增加 ⟨q_1 − q_0, 1⟩ = 1/3
    z = AffinoidElement.monomial(circle3, 0, 0, (1,))
    moved = z.restrict((0, 1))
    assert moved.chart == (0, 1)
    assert moved.terms == ((Fraction(1, 3), (1,), 1),)
    assert moved.restrict(1) is moved


def test_restrict_without_simplex(circle3) -> None:
    # 验证不张成单形的链之间限制报 ChartError
    z = AffinoidElement.monomial(circle3, 0, 0, (1,))
    with pytest.raises(ChartError):
        z.restrict((1, 2))


def test_arithmetic_requires_same_chart(circle3) -> None:
    # 验证不同图卡的元素不能直接相加
    with pytest.raises(ValidationError):
        AffinoidElement.constant(circle3, 0) + AffinoidElement.constant(circle3, 1)


def test_unit_invert_geometric_series(circle3) -> None:
    # 验证 (1 + T z)^{-1} 与原元素之积在精度 4 内为 1
    a = AffinoidElement.from_terms(circle3, 0, [(0, (0,), 1), (1, (1,), 1)], precision=4)
    inverse = a.unit_invert()
    assert inverse.precision == 4
    assert (a * inverse).equals_up_to(AffinoidElement.constant(circle3, 0, 1))


def test_unit_invert_exact_monomial(circle3) -> None:
    # 验证精确单项式的逆仍为精确单项式
    inverse = AffinoidElement.monomial(circle3, 0, Fraction(1, 3), (1,), 2).unit_invert()
    assert inverse.is_exact()
    assert inverse.terms == ((Fraction(-1, 3), (-1,), Fraction(1, 2)),)


def test_non_units_rejected(circle3) -> None:
    # 验证 1 + z 无主导项，零元不可逆
    with pytest.raises(PrecisionError):
        AffinoidElement.from_terms(circle3, 0, [(0, (0,), 1), (0, (1,), 1)]).unit_invert()
    with pytest.raises(PrecisionError):
        AffinoidElement.zero(circle3, 0).unit_invert()


def test_coefficient_of_shifts_precision(circle3) -> None:
    # 验证 z 的系数已知到 E − min⟨x, 1⟩ = 3 + 5/12
    element = AffinoidElement.from_terms(circle3, 0, [(1, (1,), 1), (2, (1,), 1)], precision=3)
    coefficient = element.coefficient_of((1,))
    assert coefficient.precision == Fraction(41, 12)
    assert coefficient.val() == 1


def test_format_and_json(circle3) -> None:
    # 验证文本格式与 JSON 读回
    element = AffinoidElement.from_terms(circle3, 0, [(0, (0,), 1), (Fraction(1, 3), (1,), -2)], precision=2)
    assert element.format() == "1 + -2*T^{1/3}*z^{1}"
    again = AffinoidElement.from_json(circle3, element.to_json())
    assert again == element
