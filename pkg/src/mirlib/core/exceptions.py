"""
Error hierarchy for mirlib.

Responsibilities
  - Define the shared exception types raised by constructors and arithmetic.
  - Keep mathematical check failures out of the exception path: validators
    return reports, exceptions signal unusable input.

Usage Context
  - The CLI maps every MirrorError to exit status 2.
"""
# 说明：库级异常体系。
# 职责：
# - MirrorError：统一基类异常
# - ValidationError：输入数据格式错误或不一致（图卡不匹配、形状/次数不匹配、权重未归一化等）
# - ChartError：图卡间限制映射缺少包含关系
# - PrecisionError：零元求逆、当前精度下无法识别为单位元等精度相关错误

from __future__ import annotations

from typing import Optional, Sequence


class MirrorError(Exception):
    """
    Base error type for library failures.

    - Behavior
      - Serves as the common ancestor for mirlib-specific exceptions.
    """


class ValidationError(MirrorError):
    """
    Raised when input data is malformed or inconsistent.

    - Configuration
      - location: optional chain or label the problem concerns.
    """

    def __init__(self, message: str, *, location: Optional[Sequence] = None) -> None:
        super().__init__(message)
        self.location = tuple(location) if location is not None else None


class ChartError(ValidationError):
    """Raised when a restriction between charts lacks the required containment."""


class PrecisionError(MirrorError):
    """Raised when an operation cannot be carried out at the working precision."""
