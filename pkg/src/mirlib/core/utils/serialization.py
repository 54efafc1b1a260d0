"""
Serialization helpers for exact-rational artifacts.

Provides JSON helpers that render rationals as exact strings.

Responsibilities
  - Normalize dataclass / to_dict objects, Fractions and infinities for JSON.

Usage Context
  - Every JSON artifact the CLI writes goes through serialize_to_json.

Limitations
  - Does not validate schema; parsing back to domain objects lives in the
    per-module io helpers.
"""
# 说明：序列化辅助工具，统一 JSON 编解码行为：有理数写成精确字符串，+∞ 写成 "inf"。
# 职责：
# - _prepare：支持 dataclass、to_dict 对象、Fraction、inf、tuple/set 的统一前处理
# - serialize_to_json：确定性的 JSON 序列化
# 约定：
# - 持久化结果中不出现任何浮点数；键按字典序输出，保证字节级可复现

from __future__ import annotations

import json
import math
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any, Optional


def format_number(value: Any) -> str:
    # 整数分母的 Fraction 输出为 "3"，其余为 "p/q"；+∞ 输出为 "inf"
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


def _prepare(obj: Any) -> Any:
    # 递归转换为可 JSON 序列化的基础结构
    if is_dataclass(obj) and not isinstance(obj, type):
        if hasattr(obj, "to_dict"):
            return _prepare(obj.to_dict())
        return _prepare(asdict(obj))
    if hasattr(obj, "to_dict"):
        return _prepare(obj.to_dict())
    if isinstance(obj, Fraction):
        return format_number(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return format_number(obj)
        raise TypeError("floating point values are not allowed in artifacts")
    if isinstance(obj, dict):
        return {str(k): _prepare(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_prepare(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((_prepare(v) for v in obj), key=repr)
    return obj


def serialize_to_json(obj: Any, *, indent: Optional[int] = None) -> str:
    # 将对象序列化为 JSON 字符串
    return json.dumps(_prepare(obj), ensure_ascii=False, sort_keys=True, indent=indent)
