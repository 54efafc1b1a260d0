"""
Unit tests for structured check reports.
"""
# 说明：CheckReport / CheckFailure / CheckAnnotation 的单元测试。
# 覆盖：通过状态、失败位置查询、合并、注释级别校验、JSON 与文本导出

import json

import pytest

from mirlib.core.utils.param_validation import ParamValidationError
from mirlib.reporting import CheckReport


def test_empty_report_passes() -> None:
    # 验证没有失败记录时报告通过
    report = CheckReport(name="atlas")
    assert report.passed
    assert report.to_text() == "atlas: PASS"


def test_failures_and_locations() -> None:
    # 验证失败码与按码过滤的失败位置
    report = CheckReport(name="sheaf")
    report.fail("sheaf_equation", "residual is nonzero", location=(0, 1), witness={"row": 0})
    report.fail("precision", "window exhausted")
    assert not report.passed
    assert report.failure_codes() == ["sheaf_equation", "precision"]
    assert report.failing_locations() == [(0, 1)]
    assert report.failing_locations("precision") == []


def test_merge_collects_details() -> None:
    # 验证合并后失败与注释被并入，子报告的 details 以其名字为键
    outer = CheckReport(name="build")
    inner = CheckReport(name="cocycle", details={"checked_chains": 1})
    inner.fail("cocycle_failure", "alpha is not a cocycle", location=(0, 1, 2, 3))
    inner.annotate("info", "monomial witnesses only")
    outer.merge(inner)
    assert outer.failing_locations("cocycle_failure") == [(0, 1, 2, 3)]
    assert outer.details == {"cocycle": {"checked_chains": 1}}
    assert len(outer.annotations) == 1


def test_merge_rejects_other_types() -> None:
    # 验证只能合并 CheckReport
    with pytest.raises(ParamValidationError):
        CheckReport(name="x").merge({"name": "y"})


def test_annotation_level_validated() -> None:
    # 验证未知注释级别被拒绝
    with pytest.raises(ParamValidationError):
        CheckReport(name="x").annotate("debug", "not a level")


def test_json_and_text_exports() -> None:
    # 验证 JSON 导出包含状态与失败，文本导出列出失败位置
    report = CheckReport(name="atlas")
    report.fail("nesting", "P_1 not contained in P_0", location=(0, 1))
    report.annotate("warning", "closed containment", code="closed_star")
    data = json.loads(report.to_json())
    assert data["status"] == "FAIL"
    assert data["failures"][0] == {
        "code": "nesting",
        "message": "P_1 not contained in P_0",
        "location": [0, 1],
        "witness": None,
    }
    text = report.to_text().splitlines()
    assert text[0] == "atlas: FAIL"
    assert text[1] == "  - [nesting] at [0, 1] P_1 not contained in P_0"
    assert text[2] == "  (warning) closed containment"
