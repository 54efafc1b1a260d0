"""
Unit tests for truncated morphism complexes.
"""
# 说明：hom_complex 有限基与 μ¹ 矩阵的单元测试。
# 覆盖：基的维数与指数 λ_A、基元素的坐标、格盒外项的泄漏计数、μ¹ 矩阵、参数校验

from fractions import Fraction

import pytest

from mirlib.category import ChartMatrix, SheafMorphism, hom_complex, line_bundle
from mirlib.core.affinoid import AffinoidElement, twisting_cocycle
from mirlib.core.exceptions import ValidationError


@pytest.fixture
def bundle(circle3):
    cocycle = twisting_cocycle(circle3)
    sheaf, _ = line_bundle(circle3, cocycle)
    return sheaf, cocycle


def test_basis_dimensions(bundle) -> None:
    # 验证半径 0 时每条链一个基元素，半径 1 时三个
    sheaf, _ = bundle
    small = hom_complex(sheaf, sheaf, radius=0, precision=8)
    assert (small.dimension(0), small.dimension(1)) == (3, 3)
    assert small.chain_count() == 6
    large = hom_complex(sheaf, sheaf, radius=1, precision=8)
    assert (large.dimension(0), large.dimension(1)) == (9, 9)


def test_basis_exponent(bundle) -> None:
    # 验证 λ_A 为 −min⟨x, A⟩ 向上取到 (1/3)Z：z 在顶点图卡上为 T^{2/3}
    sheaf, _ = bundle
    complex_ = hom_complex(sheaf, sheaf, radius=1, precision=8)
    element = next(b for b in complex_.basis[0] if b.chain == (0,) and b.lattice_class == (1,))
    assert element.exponent == Fraction(2, 3)


def test_basis_element_coordinates(bundle) -> None:
    # 验证基元素展开为单位向量
    sheaf, _ = bundle
    complex_ = hom_complex(sheaf, sheaf, radius=1, precision=8)
    element = complex_.basis[1][4]
    coords, leaked = complex_.coordinates(complex_.element_morphism(element))
    assert leaked == 0
    assert [k for k, c in enumerate(coords) if not c.is_zero()] == [4]
    assert coords[4].terms == ((0, 1),)


def test_leakage_counted(bundle, circle3) -> None:
    # 验证格盒外的项计入泄漏
    sheaf, _ = bundle
    complex_ = hom_complex(sheaf, sheaf, radius=0, precision=8)
    matrix = ChartMatrix.from_rows(circle3, (0,), [[AffinoidElement.monomial(circle3, 0, 1, (2,))]], 1)
    morphism = SheafMorphism(source=sheaf, target=sheaf, degree=0, components={(0,): matrix})
    _, leaked = complex_.coordinates(morphism)
    assert leaked == 1


def test_differential_matrix(bundle) -> None:
    # 验证半径 0 时 μ¹ 矩阵为圆周的关联矩阵
    sheaf, cocycle = bundle
    complex_ = hom_complex(sheaf, sheaf, radius=0, precision=8)
    matrix, leaked = complex_.differential(0, cocycle)
    assert leaked == 0
    table = [[matrix[r, c].coefficient(0) for c in range(3)] for r in range(3)]
    assert table == [[-1, 1, 0], [-1, 0, 1], [0, -1, 1]]


def test_parameters_validated(bundle, triangle) -> None:
    # 验证非正精度、负半径与不同图册被拒绝
    sheaf, _ = bundle
    with pytest.raises(ValidationError):
        hom_complex(sheaf, sheaf, precision=0)
    with pytest.raises(ValidationError):
        hom_complex(sheaf, sheaf, radius=-1)
    other, _ = line_bundle(triangle, twisting_cocycle(triangle))
    with pytest.raises(ValidationError):
        hom_complex(sheaf, other)
