"""
Unit tests for the aggregate functor checks.
"""
# 说明：函子整体检查的单元测试。
# 覆盖：composition_sign、build_functor 的自配对、恒等与翻转夹具全部通过、𝒫∘𝒞 的符号失败、annulus 同伦、
# 逐条删除计数后的失败及其位置

from fractions import Fraction

import pytest

from mirlib.core.affinoid import twisting_cocycle
from mirlib.functor import (
    FloerChain,
    FloerHomotopy,
    LedgerEntry,
    LedgerFamily,
    build_functor,
    composition_check,
    functor_check,
)
from mirlib.functor.checks import composition_sign


def test_composition_sign() -> None:
    # 验证 (−1)^{n(n−1)/2}
    assert [composition_sign(n) for n in (1, 2, 3, 4, 5)] == [0, 1, 1, 0, 0]


def test_build_functor_self_pair(circle3, circle_identity) -> None:
    # 验证 L' = L 时目标层即源层，报告只有 ledger 与 sheaf
    ledger, data = circle_identity
    functor = build_functor(ledger, data, circle3)
    assert functor.target is functor.source
    assert sorted(functor.reports) == ["ledger", "sheaf"]
    assert all(r.passed for r in functor.reports.values())


def test_identity_functor_passes(circle3, circle_identity) -> None:
    # 验证圆周恒等夹具的全部残差为零
    ledger, data = circle_identity
    report = functor_check(ledger, data, circle3, precision=8, radius=1)
    assert report.passed, report.to_text()
    assert report.details["status"] == {
        "ledger": "PASS",
        "sheaf": "PASS",
        "cech": "PASS",
        "floer_map": "PASS",
        "composition": "PASS",
        "ainfty_relations": "PASS",
        "ainfty_functor": "PASS",
    }


def test_flip_sign_in_dimension_two(triangle, triangle_flip) -> None:
    # 验证 n = 2 时 𝒫∘𝒞 = −Id；output 计数取 +1 时失败
    ledger, data = triangle_flip
    report = functor_check(ledger, data, triangle, radius=0)
    assert report.passed, report.to_text()
    flipped = functor_check(ledger.with_count(6, 1), data, triangle, radius=0)
    assert flipped.failure_codes() == ["composition"]
    assert flipped.details["status"]["composition"] == "FAIL"


def test_homotopy_repairs_composition(circle3, circle_identity) -> None:
    # 验证 annulus 同伦 h 的 μ¹h + hμ¹ 计入 𝒫∘𝒞 − Id
    ledger, data = circle_identity
    functor = build_functor(ledger, data, circle3, twisting_cocycle(circle3))
    report = composition_check(functor.cech, functor.pmap, functor.homotopy)
    assert report.passed
    assert report.details["sign"] == 1
    homotopy = FloerHomotopy(
        entries=[LedgerEntry(LedgerFamily.ANNULUS, (), {"input": "p", "output": "q"}, energy=Fraction(1))]
    )
    assert homotopy(FloerChain.generator("p")).to_dict() == {"q": "1*T^{1}"}
    assert homotopy(FloerChain.generator("q")).is_zero()


def _located_near(entry, location) -> bool:
    # 顶点链与 where 相交，或标签元组含该条目的 pair 标签
    if all(isinstance(x, int) for x in location):
        return bool(set(location) & set(entry.where))
    return entry.labels.get("pair") in location


DELETIONS = [("circle3", "circle_identity", k) for k in range(14)] + [
    ("triangle", "triangle_flip", k) for k in range(8)
]


@pytest.mark.parametrize("atlas_name, ledger_name, index", DELETIONS)
def test_every_deleted_count_is_detected(request, atlas_name, ledger_name, index) -> None:
    # 验证删去任一计数后检查失败，且失败落在被删条目的链或元数上
    atlas = request.getfixturevalue(atlas_name)
    ledger, data = request.getfixturevalue(ledger_name)
    entry = ledger.entries[index]
    report = functor_check(ledger.without(index), data, atlas, radius=0)
    assert not report.passed
    status = report.details["status"]
    assert status["ledger"] == "PASS"
    if entry.family is LedgerFamily.DISC:
        assert "FAIL" in (status["ainfty_relations"], status["ainfty_functor"]), status
    else:
        assert any(_located_near(entry, loc) for loc in report.failing_locations()), report.to_text()
