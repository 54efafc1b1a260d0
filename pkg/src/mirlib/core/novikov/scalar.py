"""
Truncated Novikov scalars.

Responsibilities
  - Represent finite series sum c_i T^{l_i} with rational exponents, cut at
    a working precision, over a BaseField.
  - Provide exact ring arithmetic with sound precision propagation.
  - Invert nonzero scalars by leading-term factorization and a geometric series.
  - Parse and render the text and JSON forms.

Usage Context
  - Coefficients of chart-ring monomials, ledger energies and Floer complexes.

Limitations
  - Exponents are exact rationals; the lattice (1/D)Z restriction is a
    load-time check, arithmetic itself is lattice-agnostic.
"""
# 说明：截断 Novikov 标量 Σ c_i T^{λ_i}，带精度（可为 +∞）与基域。
# 职责：
# - NovikovScalar：不可变值对象，规范形式为指数严格递增、系数非零、所有指数 < precision
# - 加法精度取 min；乘法精度取 min(P_a + min(0, val b), P_b + min(0, val a))
# - invert：a = c T^λ (1 + u)，结果精度 P − 2λ，乘回后在 P − λ 以内等于 1
# - parse / format / to_json / from_json：文本形式 "c1*T^{l1} + c2*T^{l2}" 与 JSON 形式
# 约定：
# - 精确输入（precision = ∞）且非单项式时，求逆以运行时配置的 precision 作为几何级数的相对截断窗口

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from mirlib.core.exceptions import PrecisionError, ValidationError
from mirlib.core.novikov.base_field import RATIONALS, BaseField, Coefficient
from mirlib.core.utils.config import get_config
from mirlib.core.utils.logging import get_logger
from mirlib.core.utils.param_validation import as_extended_rational, as_rational
from mirlib.core.utils.rational import on_lattice
from mirlib.core.utils.serialization import format_number

_logger = get_logger(__name__)

Precision = Union[Fraction, float]
INF: float = math.inf

# 文本形式中单项的匹配：可选符号、可选系数、可选 T^{exp}
_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*"
    r"(?P<t>T(?:\^\{(?P<exp>[+-]?\d+(?:/\d+)?)\}|\^(?P<bare>[+-]?\d+(?:/\d+)?))?)?\s*"
)


def _min_precision(*values: Precision) -> Precision:
    result = min(values)
    return INF if result == INF else Fraction(result)


def _shift(precision: Precision, offset: Fraction) -> Precision:
    return INF if precision == INF else precision + offset


@dataclass(frozen=True)
class NovikovScalar:
    """
    Element of the universal Novikov field truncated at ``precision``.

    - Configuration
      - terms: tuple of (exponent, coefficient), exponents strictly increasing.
      - precision: exponent window end, or INF for exact values.
      - field: the BaseField of coefficients.

    - Behavior
      - Operators +, -, * and ** return new normalized scalars.
      - Equality is structural: same terms, same precision, same field.

    - Usage Notes
      - Build through from_terms / monomial / constant, which normalize.
    """

    terms: Tuple[Tuple[Fraction, Coefficient], ...] = ()
    precision: Precision = INF
    field: BaseField = field(default=RATIONALS)

    # ------------------------------------------------------------------ Constructors

    @classmethod
    def from_terms(
        cls,
        terms: Union[Mapping[Any, Any], Iterable[Tuple[Any, Any]]],
        precision: Any = INF,
        base_field: BaseField = RATIONALS,
    ) -> "NovikovScalar":
        precision = as_extended_rational(precision)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Fraction, Coefficient] = {}
        for exponent, coefficient in items:
            exponent = as_rational(exponent)
            if exponent >= precision:
                continue
            c = base_field.element(coefficient)
            acc[exponent] = base_field.add(acc.get(exponent, base_field.zero()), c)
        normalized = tuple(sorted((e, c) for e, c in acc.items() if not base_field.is_zero(c)))
        return cls(terms=normalized, precision=precision, field=base_field)

    @classmethod
    def zero(cls, precision: Any = INF, base_field: BaseField = RATIONALS) -> "NovikovScalar":
        return cls(terms=(), precision=as_extended_rational(precision), field=base_field)

    @classmethod
    def constant(cls, value: Any, precision: Any = INF, base_field: BaseField = RATIONALS) -> "NovikovScalar":
        return cls.from_terms([(0, value)], precision, base_field)

    @classmethod
    def one(cls, precision: Any = INF, base_field: BaseField = RATIONALS) -> "NovikovScalar":
        return cls.constant(1, precision, base_field)

    @classmethod
    def monomial(
        cls, coefficient: Any, exponent: Any, precision: Any = INF, base_field: BaseField = RATIONALS
    ) -> "NovikovScalar":
        return cls.from_terms([(exponent, coefficient)], precision, base_field)

    # ------------------------------------------------------------------ Queries

    def val(self) -> Precision:
        # 最小指数；零元为 +∞
        return self.terms[0][0] if self.terms else INF

    def is_zero(self) -> bool:
        return not self.terms

    def is_exact(self) -> bool:
        return self.precision == INF

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_term(self) -> Tuple[Fraction, Coefficient]:
        if not self.terms:
            raise PrecisionError("zero scalar has no leading term")
        return self.terms[0]

    def coefficient(self, exponent: Any) -> Coefficient:
        exponent = Fraction(exponent)
        for e, c in self.terms:
            if e == exponent:
                return c
        return self.field.zero()

    def exponents(self) -> Tuple[Fraction, ...]:
        return tuple(e for e, _ in self.terms)

    def on_lattice(self, denominator: int) -> bool:
        return all(on_lattice(e, denominator) for e, _ in self.terms)

    # ------------------------------------------------------------------ Arithmetic

    def _check_field(self, other: "NovikovScalar") -> None:
        if self.field != other.field:
            raise ValidationError(f"base field mismatch: {self.field.label()} vs {other.field.label()}")

    def _coerce(self, other: Any) -> "NovikovScalar":
        if isinstance(other, NovikovScalar):
            self._check_field(other)
            return other
        return NovikovScalar.constant(other, INF, self.field)

    def __add__(self, other: Any) -> "NovikovScalar":
        other = self._coerce(other)
        precision = _min_precision(self.precision, other.precision)
        return NovikovScalar.from_terms(list(self.terms) + list(other.terms), precision, self.field)

    __radd__ = __add__

    def __neg__(self) -> "NovikovScalar":
        return NovikovScalar(
            terms=tuple((e, self.field.neg(c)) for e, c in self.terms),
            precision=self.precision,
            field=self.field,
        )

    def __sub__(self, other: Any) -> "NovikovScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "NovikovScalar":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "NovikovScalar":
        other = self._coerce(other)
        va, vb = self.val(), other.val()
        precision = _min_precision(
            _shift(self.precision, min(Fraction(0), vb) if vb != INF else Fraction(0)),
            _shift(other.precision, min(Fraction(0), va) if va != INF else Fraction(0)),
        )
        products: List[Tuple[Fraction, Coefficient]] = []
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                products.append((ea + eb, self.field.mul(ca, cb)))
        return NovikovScalar.from_terms(products, precision, self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "NovikovScalar":
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = NovikovScalar.one(INF, self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, coefficient: Any) -> "NovikovScalar":
        c = self.field.element(coefficient)
        return NovikovScalar.from_terms(
            [(e, self.field.mul(c, a)) for e, a in self.terms], self.precision, self.field
        )

    def shift(self, offset: Any) -> "NovikovScalar":
        # 乘以精确单项式 T^offset：指数与精度同步平移
        offset = Fraction(offset)
        return NovikovScalar.from_terms(
            [(e + offset, c) for e, c in self.terms], _shift(self.precision, offset), self.field
        )

    def truncate(self, precision: Any) -> "NovikovScalar":
        precision = _min_precision(self.precision, as_extended_rational(precision))
        return NovikovScalar.from_terms(self.terms, precision, self.field)

    def invert(self) -> "NovikovScalar":
        """
        Inverse via a = c T^l (1 + u) and the geometric series in -u.

        The result has precision P - 2l; multiplying back gives 1 up to P - l.
        """
        if self.is_zero():
            raise PrecisionError("inversion of zero")
        lead_exp, lead_coef = self.leading_term()
        inv_coef = self.field.inv(lead_coef)
        if self.is_monomial() and self.is_exact():
            return NovikovScalar.monomial(inv_coef, -lead_exp, INF, self.field)
        window = self.precision if not self.is_exact() else Fraction(get_config().precision) + lead_exp
        # u = a / (c T^l) - 1，相对精度为 window - l
        relative = window - lead_exp
        u = NovikovScalar.from_terms(
            [(e - lead_exp, self.field.mul(c, inv_coef)) for e, c in self.terms[1:]], relative, self.field
        )
        minus_u = -u
        series = NovikovScalar.one(relative, self.field)
        power = NovikovScalar.one(relative, self.field)
        while True:
            power = (power * minus_u).truncate(relative)
            if power.is_zero():
                break
            series = series + power
        return NovikovScalar.from_terms(
            [(e - lead_exp, self.field.mul(c, inv_coef)) for e, c in series.terms],
            window - 2 * lead_exp,
            self.field,
        )

    def equals_up_to(self, other: "NovikovScalar", precision: Any) -> bool:
        # 两者在 precision 以下的项完全一致
        return (self - other).truncate(precision).is_zero()

    # ------------------------------------------------------------------ Text / JSON

    def format(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for index, (exponent, coefficient) in enumerate(self.terms):
            negative = not self.field.is_prime and coefficient < 0
            c = self.field.render(-coefficient if negative else coefficient)
            body = c if exponent == 0 else f"{c}*T^{{{format_number(exponent)}}}"
            if index == 0:
                out = f"-{body}" if negative else body
            else:
                out += f" - {body}" if negative else f" + {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    @classmethod
    def parse(
        cls, text: str, precision: Any = INF, base_field: BaseField = RATIONALS
    ) -> "NovikovScalar":
        text = text.strip()
        if text in {"", "0"}:
            return cls.zero(precision, base_field)
        pos = 0
        terms: List[Tuple[Fraction, Fraction]] = []
        while pos < len(text):
            match = _TERM_RE.match(text, pos)
            if match is None or match.end() == pos or (match.group("coef") is None and match.group("t") is None):
                raise ValidationError(f"cannot parse scalar near '{text[pos:]}'")
            sign = -1 if match.group("sign") == "-" else 1
            coef = Fraction(match.group("coef")) if match.group("coef") else Fraction(1)
            if match.group("t"):
                raw = match.group("exp") or match.group("bare") or "1"
                exponent = Fraction(raw)
            else:
                exponent = Fraction(0)
            terms.append((exponent, sign * coef))
            pos = match.end()
        return cls.from_terms(terms, precision, base_field)

    def to_json(self) -> Dict[str, Any]:
        return {
            "terms": [{"t": format_number(e), "c": self.field.render(c)} for e, c in self.terms],
            "precision": format_number(self.precision),
        }

    @classmethod
    def from_json(
        cls,
        data: Mapping[str, Any],
        base_field: BaseField = RATIONALS,
        denominator: Optional[int] = None,
    ) -> "NovikovScalar":
        precision = data.get("precision", "inf")
        scalar = cls.from_terms(
            [(item["t"], item["c"]) for item in data.get("terms", [])], precision, base_field
        )
        if denominator is not None:
            check_lattice(scalar, denominator)
        return scalar


def check_lattice(scalar: NovikovScalar, denominator: int) -> None:
    """Flag exponents outside (1/D)Z; strict mode rejects them."""
    if scalar.on_lattice(denominator):
        return
    message = f"exponents {list(map(format_number, scalar.exponents()))} leave the lattice (1/{denominator})Z"
    if get_config().strict_validation:
        raise ValidationError(message)
    _logger.warning(message)
