"""
Unit tests for matrices over a chart ring.
"""
# 说明：ChartMatrix 的单元测试。
# 覆盖：零矩阵与单位矩阵、矩阵乘法、限制、源次数符号、形状 / 图卡不匹配与 JSON 读入

from fractions import Fraction

import pytest

from mirlib.category import ChartMatrix
from mirlib.core.affinoid import AffinoidElement
from mirlib.core.exceptions import ValidationError


def test_zeros_and_identity(circle3) -> None:
    # 验证零矩阵与单位矩阵的形状与取值
    zero = ChartMatrix.zeros(circle3, (0,), 2, 3)
    assert zero.shape == (2, 3)
    assert zero.is_zero()
    identity = ChartMatrix.identity(circle3, (0,), 2)
    assert [(r, c) for r, c, _ in identity.nonzero()] == [(0, 0), (1, 1)]


def test_product(circle3) -> None:
    # 验证 [[1, z]] @ [[2], [z^{-1}]] = [[3]]
    row = ChartMatrix.from_rows(circle3, (0,), [[1, AffinoidElement.monomial(circle3, 0, 0, (1,))]], 2)
    col = ChartMatrix.from_rows(circle3, (0,), [[2], [AffinoidElement.monomial(circle3, 0, 0, (-1,))]], 1)
    product = row @ col
    assert product.shape == (1, 1)
    assert product.entries[0, 0] == AffinoidElement.constant(circle3, 0, 3)


def test_restrict_moves_every_entry(circle3) -> None:
    # 验证限制到链 01 时每项的 T 指数按 z 的格类平移
    matrix = ChartMatrix.from_rows(circle3, (0,), [[AffinoidElement.monomial(circle3, 0, 0, (1,))]], 1)
    moved = matrix.restrict((1,))
    assert moved.chart == (0, 1)
    assert moved.entries[0, 0].terms == ((Fraction(1, 3), (1,), 1),)


def test_source_signs(circle3) -> None:
    # 验证奇次源生成元对应的列变号
    matrix = ChartMatrix.from_rows(circle3, (0,), [[1, 1]], 2).source_signs([0, 1])
    assert matrix.describe() == [["1", "-1"]]


def test_mismatches_rejected(circle3) -> None:
    # 验证图卡或形状不匹配时报错
    a = ChartMatrix.zeros(circle3, (0,), 1, 1)
    with pytest.raises(ValidationError):
        a + ChartMatrix.zeros(circle3, (1,), 1, 1)
    with pytest.raises(ValidationError):
        a @ ChartMatrix.zeros(circle3, (0,), 2, 1)
    with pytest.raises(ValidationError):
        ChartMatrix.from_rows(circle3, (0,), [[1, 2]], 1)


def test_from_json(circle3) -> None:
    # 验证 JSON 单项式列表读入
    data = [[[{"t": "1/2", "z": [1], "c": "2"}], []]]
    matrix = ChartMatrix.from_json(circle3, (0,), data, 2)
    assert matrix.describe() == [["2*T^{1/2}*z^{1}", "0"]]
    assert matrix.to_json() == [[[{"t": "1/2", "z": [1], "c": "2"}], []]]
