"""
Input parsing and output rendering for the command line.

Responsibilities
  - Read JSON inputs, turning decode errors into ValidationError.
  - Parse rational lists, chains and cube labels given as flags.
  - Render CheckReports as JSON or text and build the error object printed
    on exit status 2.
"""
# 说明：命令行的输入解析与输出渲染。
# 约定：
# - 数值一律为精确有理数字符串；JSON 输出经 serialize_to_json（键排序，可复现）
# - 错误对象形如 {"error": {"type": ..., "message": ...}}

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, List, Optional, TextIO, Tuple

from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.param_validation import as_rational
from mirlib.core.utils.serialization import serialize_to_json
from mirlib.reporting.check_report import CheckReport

FORMATS = ("text", "json", "dot")


def read_json(path: Optional[str], *, what: str) -> Any:
    if not path:
        raise ValidationError(f"--{what} is required for this command")
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc.msg})") from exc


def parse_rationals(text: str) -> List[Any]:
    """'1/2,1/3' -> [Fraction(1, 2), Fraction(1, 3)]; blanks are skipped."""
    return [as_rational(item.strip()) for item in text.split(",") if item.strip()]


def parse_chain(text: str) -> Tuple[int, ...]:
    # "012" 逐字符解析；顶点编号大于 9 时写成 "0.10.11"
    items = text.split(".") if "." in text else list(text)
    try:
        return tuple(int(v) for v in items)
    except ValueError as exc:
        raise ValidationError(f"cannot read chain '{text}'") from exc


def parse_prism_label(text: str) -> Tuple[str, int]:
    if len(text) < 2 or text[0] not in "+-":
        raise ValidationError(f"prism labels look like +0 or -2, got '{text}'")
    try:
        return text[0], int(text[1:])
    except ValueError as exc:
        raise ValidationError(f"cannot read prism label '{text}'") from exc


def error_object(exc: BaseException) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


def write_report(report: CheckReport, fmt: str, stream: TextIO, *, text: Optional[str] = None) -> None:
    """Emit a report; text mode prints the optional preamble before the report summary."""
    if fmt == "json":
        stream.write(serialize_to_json(report.to_dict(), indent=2) + "\n")
        return
    if text:
        stream.write(text.rstrip("\n") + "\n")
    stream.write(report.to_text() + "\n")
