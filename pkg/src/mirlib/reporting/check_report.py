"""
Structured reports for validators and identity checkers.

Provides dataclasses to capture failures (with the offending chain or label
and an exact witness), free-form annotations, and JSON/text renderers.

Responsibilities
  - Define failure and annotation records shared by every checker.
  - Aggregate results into a CheckReport whose pass/fail status is the
    emptiness of its failure list.
  - Provide JSON and human-readable text exports.

Usage Context
  - Returned by atlas_validate, cocycle_check, sheaf_validate,
    ledger_validate, composition_check, ainfty_check and the CLI.

Limitations
  - Witnesses are stored already rendered (strings / nested lists) so that
    reports never hold live algebraic objects.
"""
# 说明：校验器与恒等式检查器共用的结构化报告。
# 职责：
# - CheckFailure：一条失败记录（错误码、信息、位置、精确见证）
# - CheckAnnotation：info / warning / critical 级别的注释
# - CheckReport：聚合失败与注释，passed 当且仅当失败列表为空；支持合并与 JSON / 文本导出

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from mirlib.core.utils.param_validation import ParamValidationError, ensure_type
from mirlib.core.utils.serialization import serialize_to_json

_LEVELS = ("info", "warning", "critical")


@dataclass
class CheckFailure:
    # 单条失败：code 为机器可读错误码，location 为链 / 顶点 / 标签元组
    code: str
    message: str
    location: Optional[Sequence[Any]] = None
    witness: Any = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "code": self.code,
            "message": self.message,
            "location": None if self.location is None else list(self.location),
            "witness": self.witness,
        }


@dataclass
class CheckAnnotation:
    level: str  # info | warning | critical
    message: str
    code: Optional[str] = None
    location: Optional[Sequence[Any]] = None

    def __post_init__(self) -> None:
        if self.level not in _LEVELS:
            raise ParamValidationError(f"annotation level must be one of {_LEVELS}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "level": self.level,
            "message": self.message,
            "code": self.code,
            "location": None if self.location is None else list(self.location),
        }


@dataclass
class CheckReport:
    """
    Outcome of one check.

    - Configuration
      - name: checker identifier, e.g. "cocycle" or "sheaf".
      - details: checker-specific payload (chart tables, barcodes, residuals).

    - Behavior
      - passed is True iff no failure was recorded.
      - merge() folds another report in, prefixing nothing.

    - Usage Notes
      - The CLI exit status is 0 iff every report it ran passed.
    """

    name: str
    failures: List[CheckFailure] = field(default_factory=list)
    annotations: List[CheckAnnotation] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    # ------------------------------------------------------------------ mutations

    def fail(
        self,
        code: str,
        message: str,
        *,
        location: Optional[Sequence[Any]] = None,
        witness: Any = None,
    ) -> CheckFailure:
        failure = CheckFailure(code=code, message=message, location=location, witness=witness)
        self.failures.append(failure)
        return failure

    def annotate(
        self,
        level: str,
        message: str,
        *,
        code: Optional[str] = None,
        location: Optional[Sequence[Any]] = None,
    ) -> None:
        self.annotations.append(CheckAnnotation(level=level, message=message, code=code, location=location))

    def merge(self, other: "CheckReport") -> "CheckReport":
        ensure_type(other, (CheckReport,), label="other")
        self.failures.extend(other.failures)
        self.annotations.extend(other.annotations)
        if other.details:
            self.details[other.name] = other.details
        return self

    # ------------------------------------------------------------------ queries

    @property
    def passed(self) -> bool:
        return not self.failures

    def failure_codes(self) -> List[str]:
        return [f.code for f in self.failures]

    def failing_locations(self, code: Optional[str] = None) -> List[tuple]:
        return [
            tuple(f.location)
            for f in self.failures
            if f.location is not None and (code is None or f.code == code)
        ]

    # ------------------------------------------------------------------ exports

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "failures": [f.to_dict() for f in self.failures],
            "annotations": [a.to_dict() for a in self.annotations],
            "details": self.details,
        }

    def to_json(self, *, indent: Optional[int] = None) -> str:
        return serialize_to_json(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for failure in self.failures:
            where = "" if failure.location is None else f" at {list(failure.location)}"
            lines.append(f"  - [{failure.code}]{where} {failure.message}")
        for note in self.annotations:
            lines.append(f"  ({note.level}) {note.message}")
        return "\n".join(lines)
