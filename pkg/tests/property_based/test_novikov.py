"""
Property-based tests for Novikov scalar arithmetic.
"""
# 说明：截断 Novikov 标量的代数性质。
# 覆盖：
# - 加法与乘法的交换律、结合律与分配律
# - 赋值的可加性与平移
# - 单位的逆在窗口内乘回 1

from hypothesis import given, settings, strategies as st

from mirlib.core.novikov import NovikovScalar

from .conftest import exponents, novikov_scalars


@given(novikov_scalars(), novikov_scalars())
def test_commutativity(a, b) -> None:
    # 验证精确标量的加法与乘法交换
    assert a + b == b + a
    assert a * b == b * a


@given(novikov_scalars(), novikov_scalars(), novikov_scalars())
@settings(deadline=None)
def test_associativity_and_distributivity(a, b, c) -> None:
    # 验证结合律与分配律在精确算术下严格成立
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(novikov_scalars(nonzero=True), novikov_scalars(nonzero=True))
def test_valuation_is_additive(a, b) -> None:
    # 验证 val(ab) = val(a) + val(b)
    assert (a * b).val() == a.val() + b.val()


@given(novikov_scalars(nonzero=True), exponents())
def test_shift_moves_valuation(a, offset) -> None:
    # 验证乘以 T^offset 平移赋值且可逆
    moved = a.shift(offset)
    assert moved.val() == a.val() + offset
    assert moved.shift(-offset) == a


@given(novikov_scalars(nonzero=True), st.integers(1, 3))
@settings(deadline=None)
def test_inverse_of_a_unit(a, window) -> None:
    # 验证赋值为 0 的单位的逆乘回 1（截断到当前精度窗口）
    unit = a.shift(-a.val())
    product = unit * unit.invert()
    assert product.equals_up_to(NovikovScalar.one(), window)
    assert product.truncate(window).val() == 0
