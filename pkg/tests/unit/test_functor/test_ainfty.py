"""
Unit tests for A-infinity relations and the functor equation.
"""
# 说明：A∞ 关系与 𝒞 的 A∞ 函子方程的单元测试。
# 覆盖：✠ 符号、结合性成立与破坏、函子方程成立与在顶点处的失败、源目标不同时跳过

from mirlib.category import line_bundle
from mirlib.core.affinoid import twisting_cocycle
from mirlib.functor import (
    CechMap,
    ainfty_functor_check,
    ainfty_relations_check,
    build_functor,
    floer_complex,
    functor_residual,
    relation_residual,
)
from mirlib.functor.ainfty import seidel_mark


def test_mark(circle3, circle_identity) -> None:
    # 验证 ✠_n = Σ_{i ≤ n} (|a_i| − 1)，按书写顺序取末尾 n 个
    ledger, data = circle_identity
    complex_ = floer_complex(ledger, data, circle3)
    assert seidel_mark(complex_, ["q", "p", "p"], 0) == 0
    assert seidel_mark(complex_, ["q", "p", "p"], 2) == -2
    assert seidel_mark(complex_, ["p", "q", "q"], 2) == 0


def test_associativity(circle3, circle_identity) -> None:
    # 验证全部三元组的 A∞ 关系残差为零
    ledger, data = circle_identity
    complex_ = floer_complex(ledger, data, circle3)
    assert relation_residual(complex_, ["q", "p", "p"]).is_zero()
    report = ainfty_relations_check(complex_, max_arity=4)
    assert report.passed, report.to_text()
    assert report.details["checked_tuples"] == 2 + 4 + 8 + 16


def test_broken_associativity(circle3, circle_identity) -> None:
    # 验证 μ²(q, p) = 2q 时 (q, p, p) 上的关系失败
    ledger, data = circle_identity
    complex_ = floer_complex(ledger.with_count(13, 2), data, circle3)
    assert relation_residual(complex_, ["q", "p", "p"]).to_dict() == {"q": "-2"}
    report = ainfty_relations_check(complex_, max_arity=3)
    assert ("q", "p", "p") in report.failing_locations("ainfty_relation")


def test_functor_equation(circle3, circle_identity) -> None:
    # 验证 𝒞 满足一、二、三元的函子方程
    ledger, data = circle_identity
    functor = build_functor(ledger, data, circle3)
    assert functor_residual(functor.cech, functor.cocycle, ["p", "q"]).is_zero()
    report = ainfty_functor_check(functor.cech, functor.cocycle, max_arity=3)
    assert report.passed, report.to_text()
    assert report.details["checked_tuples"] == 14


def test_functor_equation_failure(circle3, circle_identity) -> None:
    # 验证把顶点 0 处的 input 计数改为 2 后 (p, p) 在 (0,) 上失败
    ledger, data = circle_identity
    functor = build_functor(ledger.with_count(3, 2), data, circle3)
    residual = functor_residual(functor.cech, functor.cocycle, ["p", "p"])
    assert sorted(residual.components) == [(0,)]
    report = ainfty_functor_check(functor.cech, functor.cocycle, max_arity=2)
    assert (0,) in report.failing_locations("ainfty_functor")


def test_skipped_between_different_sheaves(circle3, circle_identity) -> None:
    # 验证源层与目标层不同时函子方程被跳过
    ledger, data = circle_identity
    functor = build_functor(ledger, data, circle3)
    other, _ = line_bundle(circle3, twisting_cocycle(circle3), name="other")
    cech = CechMap(source=functor.source, target=other, complex=functor.complex)
    report = ainfty_functor_check(cech, functor.cocycle)
    assert report.passed
    assert [a.code for a in report.annotations] == ["skipped"]
    assert report.details["checked_tuples"] == 0
