"""
Unit tests for CLI input parsing and report rendering.
"""
# 说明：命令行输入解析与输出渲染的单元测试。
# 覆盖：有理数列表、链与棱柱标签解析、JSON 读取错误、错误对象、报告的 text / json 输出

import io
import json
from fractions import Fraction

import pytest

from mirlib.cli.io import error_object, parse_chain, parse_prism_label, parse_rationals, read_json, write_report
from mirlib.core.exceptions import ValidationError
from mirlib.reporting import CheckReport


def test_parse_rationals() -> None:
    # 验证逗号分隔且跳过空项
    assert parse_rationals("1/2, ,3") == [Fraction(1, 2), Fraction(3)]
    assert parse_rationals("") == []


def test_parse_chain() -> None:
    # 验证逐字符与点分两种写法
    assert parse_chain("012") == (0, 1, 2)
    assert parse_chain("0.10.11") == (0, 10, 11)
    with pytest.raises(ValidationError):
        parse_chain("0a")


def test_parse_prism_label() -> None:
    # 验证 +v / -v 形式，其余报错
    assert parse_prism_label("+0") == ("+", 0)
    assert parse_prism_label("-12") == ("-", 12)
    for bad in ("0", "+", "+x"):
        with pytest.raises(ValidationError):
            parse_prism_label(bad)


def test_read_json(tmp_path) -> None:
    # 验证缺少路径与坏 JSON 都转成 ValidationError
    with pytest.raises(ValidationError):
        read_json(None, what="atlas")
    path = tmp_path / "bad.json"
    path.write_text("{]", encoding="utf-8")
    with pytest.raises(ValidationError):
        read_json(str(path), what="atlas")
    path.write_text('{"a": 1}', encoding="utf-8")
    assert read_json(str(path), what="atlas") == {"a": 1}


def test_error_object() -> None:
    # 验证错误对象的类型与消息
    assert error_object(ValidationError("bad chain")) == {"error": {"type": "ValidationError", "message": "bad chain"}}


def test_write_report() -> None:
    # 验证 json 输出可解析，text 输出先写前言
    report = CheckReport(name="demo")
    report.fail("broken", "something failed", location=(0, 1))
    stream = io.StringIO()
    write_report(report, "json", stream)
    assert json.loads(stream.getvalue())["status"] == "FAIL"
    stream = io.StringIO()
    write_report(report, "text", stream, text="preamble\n")
    assert stream.getvalue().splitlines() == ["preamble", "demo: FAIL", "  - [broken] at [0, 1] something failed"]
