"""
Reusable validation helpers and decorators.

Responsibilities
  - Provide a shared ParamValidationError type.
  - Offer lightweight assertion and type-check helpers.
  - Supply a decorator that coerces exact-rational arguments before a call.

Usage Context
  - Public entry points (Adams path, gluing, CLI parsing) validate their
    arguments here before any arithmetic happens.

Limitations
  - Type checks are shallow and do not validate nested structures.
"""
# 说明：参数验证相关的辅助函数与装饰器，用于在库内部统一进行轻量级参数检查与转换。
# 职责：
# - ParamValidationError：专门用于参数校验失败的异常类型
# - ensure / ensure_type：基于布尔条件或类型集合触发参数校验错误
# - as_rational / as_rational_vector / as_positive_int：精确有理数与正整数的转换器，供 validate_arguments 使用
# - validate_arguments：根据 schema 为函数参数应用验证/转换逻辑的装饰器

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Any, Callable, Dict, Mapping, Sequence, Tuple, Type, Union


class ParamValidationError(ValueError):
    """
    Raised when parameter validation fails.

    - Behavior
      - Signals invalid or missing parameters in validation helpers.

    - Usage Notes
      - The CLI maps it to exit status 2.
    """


def ensure(condition: bool, message: str, *, error: Type[Exception] = ParamValidationError) -> None:
    # 条件不满足时抛出指定的异常类型（默认使用 ParamValidationError）
    if not condition:
        raise error(message)


def ensure_type(value: Any, expected: Tuple[type, ...], *, label: str = "value") -> None:
    # 检查 value 是否为 expected 集合中的任意类型
    if not isinstance(value, expected):
        names = ", ".join(t.__name__ for t in expected)
        raise ParamValidationError(f"{label} must be instance of {names}")


def as_rational(value: Any) -> Fraction:
    # 将 int / Fraction / "2/3" 字符串转换为 Fraction；浮点数被拒绝以保持精确性
    if isinstance(value, bool):
        raise ParamValidationError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParamValidationError(f"'{value}' is not an exact rational") from exc
    raise ParamValidationError(f"expected an exact rational, got {type(value).__name__}")


def as_extended_rational(value: Any) -> Union[Fraction, float]:
    # 允许 "inf" 表示 +∞，其余同 as_rational
    if isinstance(value, float) and math.isinf(value) and value > 0:
        return math.inf
    if isinstance(value, str) and value.strip().lower() in {"inf", "+inf", "infinity", "∞"}:
        return math.inf
    return as_rational(value)


def as_rational_vector(values: Any) -> Tuple[Fraction, ...]:
    # 逗号分隔字符串或序列 -> 有理数元组
    if isinstance(values, str):
        values = [v for v in values.split(",") if v.strip()]
    if not isinstance(values, Sequence):
        raise ParamValidationError("expected a sequence of rationals")
    return tuple(as_rational(v) for v in values)


def as_positive_int(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParamValidationError("expected a positive integer")
    number = int(value)
    ensure(number >= 1, f"expected a positive integer, got {number}")
    return number


def validate_arguments(schema: Mapping[str, Callable[[Any], Any]]) -> Callable:
    """
    Decorator validating arguments according to callables.

    Each validator receives the argument and should return the (possibly
    transformed) value or raise ParamValidationError.
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            mutable = list(args)
            kw: Dict[str, Any] = dict(kwargs)
            for name, validator in schema.items():
                # 关键字形式传入的参数直接校验
                if name in kw:
                    kw[name] = validator(kw[name])
                    continue
                if name not in func.__code__.co_varnames:
                    continue
                index = func.__code__.co_varnames.index(name)
                # 未显式提供的位置参数使用默认值，不强制验证
                if index >= len(mutable):
                    continue
                mutable[index] = validator(mutable[index])
            return func(*tuple(mutable), **kw)

        return wrapper

    return decorator
