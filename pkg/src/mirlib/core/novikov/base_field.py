"""
Coefficient fields for Novikov series.

Responsibilities
  - Represent the base field k: the rationals or a prime field F_p.
  - Normalize, add, multiply, negate and invert field elements.
  - Parse and render coefficients in the exact-string JSON form.

Usage Context
  - Every NovikovScalar, AffinoidElement and ledger count carries a BaseField.

Limitations
  - Elements are plain Python values (Fraction over Q, int in [0, p) over
    F_p); the field object does the modular reduction.
"""
# 说明：Novikov 级数的系数域：有理数域 Q 或素域 F_p。
# 职责：
# - BaseField：系数的规范化、四则运算、符号 (-1)^k 与字符串解析/输出
# - RATIONALS：默认的有理数域实例
# 约定：
# - 素域特征 p 通过 sympy.isprime 校验；p = 2 时 (-1)^k 恒为 1

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import sympy

from mirlib.core.exceptions import PrecisionError, ValidationError
from mirlib.core.utils.param_validation import ParamValidationError, as_rational

Coefficient = Union[Fraction, int]


@dataclass(frozen=True)
class BaseField:
    """
    Base field k of the Novikov field.

    - Configuration
      - kind: "rationals" or "prime".
      - characteristic: p for prime fields, 0 for the rationals.

    - Behavior
      - element() coerces ints, Fractions and "p/q" strings into canonical form.

    - Usage Notes
      - Compare fields with ==; mixing fields in arithmetic is rejected.
    """

    kind: str = "rationals"
    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValidationError("the rationals have characteristic 0")
        elif self.kind == "prime":
            if not sympy.isprime(self.characteristic):
                raise ValidationError(f"characteristic {self.characteristic} is not prime")
        else:
            raise ValidationError(f"unknown base field kind '{self.kind}'")

    @classmethod
    def parse(cls, spec: Any) -> "BaseField":
        # 接受 "rationals" / "QQ" / "GF(7)" / "7" / {"kind", "characteristic"}
        if isinstance(spec, BaseField):
            return spec
        if spec is None:
            return RATIONALS
        if isinstance(spec, dict):
            return cls(kind=spec.get("kind", "rationals"), characteristic=int(spec.get("characteristic", 0)))
        if isinstance(spec, int):
            return RATIONALS if spec == 0 else cls(kind="prime", characteristic=spec)
        text = str(spec).strip().lower()
        if text in {"rationals", "qq", "q", "0"}:
            return RATIONALS
        if text.startswith("gf(") and text.endswith(")"):
            text = text[3:-1]
        if text.startswith("prime:"):
            text = text[len("prime:"):]
        try:
            return cls(kind="prime", characteristic=int(text))
        except ValueError as exc:
            raise ValidationError(f"unrecognized base field '{spec}'") from exc

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    def label(self) -> str:
        return "rationals" if not self.is_prime else f"GF({self.characteristic})"

    # ------------------------------------------------------------------ Elements

    def element(self, value: Any) -> Coefficient:
        if isinstance(value, str):
            try:
                value = as_rational(value)
            except ParamValidationError as exc:
                raise ValidationError(str(exc)) from exc
        if not self.is_prime:
            return Fraction(value)
        p = self.characteristic
        q = Fraction(value)
        if q.denominator % p == 0:
            raise ValidationError(f"{value} has no image in GF({p})")
        return (q.numerator * pow(q.denominator, -1, p)) % p

    def zero(self) -> Coefficient:
        return self.element(0)

    def one(self) -> Coefficient:
        return self.element(1)

    def is_zero(self, a: Coefficient) -> bool:
        return a == 0

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        if self.is_prime:
            return (a + b) % self.characteristic
        return a + b

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        if self.is_prime:
            return (a * b) % self.characteristic
        return a * b

    def neg(self, a: Coefficient) -> Coefficient:
        if self.is_prime:
            return (-a) % self.characteristic
        return -a

    def inv(self, a: Coefficient) -> Coefficient:
        if a == 0:
            raise PrecisionError("inversion of zero coefficient")
        if self.is_prime:
            return pow(int(a), -1, self.characteristic)
        return 1 / Fraction(a)

    def sign(self, k: int) -> Coefficient:
        # (-1)^k 作为域元素
        return self.one() if k % 2 == 0 else self.neg(self.one())

    def render(self, a: Coefficient) -> str:
        if isinstance(a, Fraction) and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))


RATIONALS = BaseField()
