"""
Chart rings of the rigid-analytic mirror.

Responsibilities
  - Represent truncated Laurent series sum c T^l z^A in the ring of a chain's
    chart domain, with exponents measured against basepoint q_{max I}.
  - Provide ring arithmetic truncated by the polytope valuation.
  - Restrict elements between charts and invert recognizable units.

Usage Context
  - Entries of sheaf structure maps and morphisms, the twisting cocycle and
    the coefficients produced from curve-count ledgers.

Limitations
  - Only finitely many terms are stored; elements are known modulo terms of
    polytope valuation >= precision.
"""
# 说明：镜像的图卡环元素 Σ c T^λ z^A（以 q_{max I} 为基点），按多面体赋值截断。
# 职责：
# - AffinoidElement：不可变值对象；w(λ, A) = λ + min_{x∈区域} ⟨x, A⟩，w >= precision 的项被丢弃
# - 加法精度取 min；乘法精度取 min(E_a + min(0, w(b)), E_b + min(0, w(a)))
# - restrict：到并链 I ∪ J 的限制，λ ↦ λ + ⟨q_{max J} − q_{max I}, A⟩，精度不变
# - unit_invert：选取主导项 m，u = m^{-1}(a − m) 的每一项 w > 0；级数截断于 E + w(m^{-1})，
#   结果精度 E + 2·w(m^{-1})
# 约定：
# - 图卡用链表示；单个顶点 i 即链 (i,)

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from mirlib.core.affine.atlas import Chain, ChartAtlas
from mirlib.core.exceptions import ChartError, PrecisionError, ValidationError
from mirlib.core.novikov.base_field import Coefficient
from mirlib.core.novikov.scalar import INF, NovikovScalar, Precision
from mirlib.core.utils.config import get_config
from mirlib.core.utils.param_validation import as_extended_rational, as_rational
from mirlib.core.utils.rational import IntVector, dot, neg
from mirlib.core.utils.serialization import format_number

TermKey = Tuple[Fraction, IntVector]


def _min_precision(*values: Precision) -> Precision:
    result = min(values)
    return INF if result == INF else Fraction(result)


def _as_chain(target: Union[int, Sequence[int]]) -> Chain:
    if isinstance(target, int):
        return (target,)
    return tuple(target)


@dataclass(frozen=True)
class AffinoidElement:
    """
    Truncated element of the chart ring O_I.

    - Configuration
      - atlas: the ChartAtlas providing domains and offsets.
      - chart: the chain I; exponents are relative to q_{max I}.
      - terms: tuple of (lambda, A, c), unique per (lambda, A).
      - precision: E, or INF for exact elements.

    - Behavior
      - Arithmetic requires equal charts; restrict() moves elements to
        larger chains first.

    - Usage Notes
      - Build with from_terms / monomial / constant, which normalize and
        truncate.
    """

    atlas: ChartAtlas = field(compare=False, hash=False, repr=False)
    chart: Chain
    terms: Tuple[Tuple[Fraction, IntVector, Coefficient], ...]
    precision: Precision = INF

    # ------------------------------------------------------------------ Constructors

    @classmethod
    def from_terms(
        cls,
        atlas: ChartAtlas,
        chart: Union[int, Sequence[int]],
        terms: Union[Mapping[TermKey, Any], Iterable[Tuple[Any, Sequence[int], Any]]],
        precision: Any = INF,
    ) -> "AffinoidElement":
        chart = _as_chain(chart)
        precision = as_extended_rational(precision)
        domain = atlas.domain(chart)
        base = atlas.base_field
        items = (
            ((lam, a, c) for (lam, a), c in terms.items()) if isinstance(terms, Mapping) else terms
        )
        acc: Dict[TermKey, Coefficient] = {}
        for lam, lattice_class, coefficient in items:
            key = (as_rational(lam), tuple(int(x) for x in lattice_class))
            if len(key[1]) != atlas.dimension:
                raise ValidationError(f"lattice class {list(key[1])} has the wrong dimension", location=chart)
            acc[key] = base.add(acc.get(key, base.zero()), base.element(coefficient))
        kept = []
        for (lam, lattice_class), c in acc.items():
            if base.is_zero(c):
                continue
            if precision != INF and lam + domain.min_pairing(lattice_class) >= precision:
                continue
            kept.append((lam, lattice_class, c))
        kept.sort(key=lambda t: (t[1], t[0]))
        return cls(atlas=atlas, chart=chart, terms=tuple(kept), precision=precision)

    @classmethod
    def zero(cls, atlas: ChartAtlas, chart: Union[int, Sequence[int]], precision: Any = INF) -> "AffinoidElement":
        return cls.from_terms(atlas, chart, [], precision)

    @classmethod
    def monomial(
        cls,
        atlas: ChartAtlas,
        chart: Union[int, Sequence[int]],
        lam: Any,
        lattice_class: Sequence[int],
        coefficient: Any = 1,
        precision: Any = INF,
    ) -> "AffinoidElement":
        return cls.from_terms(atlas, chart, [(lam, lattice_class, coefficient)], precision)

    @classmethod
    def constant(
        cls, atlas: ChartAtlas, chart: Union[int, Sequence[int]], value: Any = 1, precision: Any = INF
    ) -> "AffinoidElement":
        return cls.monomial(atlas, chart, 0, (0,) * atlas.dimension, value, precision)

    @classmethod
    def from_scalar(
        cls, atlas: ChartAtlas, chart: Union[int, Sequence[int]], scalar: NovikovScalar
    ) -> "AffinoidElement":
        zero_class = (0,) * atlas.dimension
        return cls.from_terms(atlas, chart, [(e, zero_class, c) for e, c in scalar.terms], scalar.precision)

    # ------------------------------------------------------------------ Queries

    def term_valuation(self, lam: Fraction, lattice_class: Sequence[int]) -> Fraction:
        return lam + self.atlas.domain(self.chart).min_pairing(lattice_class)

    def polytope_valuation(self) -> Precision:
        # 各项 w 的最小值；零元为 +∞
        if not self.terms:
            return INF
        return min(self.term_valuation(lam, a) for lam, a, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_exact(self) -> bool:
        return self.precision == INF

    def coefficient_of(self, lattice_class: Sequence[int]) -> NovikovScalar:
        # z^A 的系数，已知到 E − min⟨x, A⟩
        lattice_class = tuple(int(x) for x in lattice_class)
        shift = self.atlas.domain(self.chart).min_pairing(lattice_class)
        precision = INF if self.precision == INF else self.precision - shift
        return NovikovScalar.from_terms(
            [(lam, c) for lam, a, c in self.terms if a == lattice_class], precision, self.atlas.base_field
        )

    def lattice_classes(self) -> List[IntVector]:
        return sorted({a for _, a, _ in self.terms})

    def monomial_count(self) -> int:
        return len(self.terms)

    # ------------------------------------------------------------------ Arithmetic

    def _check_compatible(self, other: "AffinoidElement") -> None:
        if not isinstance(other, AffinoidElement):
            raise ValidationError(f"cannot combine chart element with {type(other).__name__}")
        if self.chart != other.chart:
            raise ValidationError(
                f"chart mismatch: {list(self.chart)} vs {list(other.chart)}", location=self.chart
            )
        if self.atlas is not other.atlas and self.atlas != other.atlas:
            raise ValidationError("elements live on different atlases")

    def __add__(self, other: "AffinoidElement") -> "AffinoidElement":
        self._check_compatible(other)
        return AffinoidElement.from_terms(
            self.atlas, self.chart, list(self.terms) + list(other.terms), _min_precision(self.precision, other.precision)
        )

    def __neg__(self) -> "AffinoidElement":
        base = self.atlas.base_field
        return AffinoidElement(
            atlas=self.atlas,
            chart=self.chart,
            terms=tuple((lam, a, base.neg(c)) for lam, a, c in self.terms),
            precision=self.precision,
        )

    def __sub__(self, other: "AffinoidElement") -> "AffinoidElement":
        return self + (-other)

    def __mul__(self, other: Any) -> "AffinoidElement":
        if isinstance(other, NovikovScalar):
            return self.scale(other)
        if not isinstance(other, AffinoidElement):
            return self.scale(NovikovScalar.constant(other, INF, self.atlas.base_field))
        self._check_compatible(other)
        wa, wb = self.polytope_valuation(), other.polytope_valuation()
        precision = _min_precision(
            self.precision + (min(Fraction(0), wb) if wb != INF else 0),
            other.precision + (min(Fraction(0), wa) if wa != INF else 0),
        )
        base = self.atlas.base_field
        products = []
        for la, aa, ca in self.terms:
            for lb, ab, cb in other.terms:
                products.append((la + lb, tuple(x + y for x, y in zip(aa, ab)), base.mul(ca, cb)))
        return AffinoidElement.from_terms(self.atlas, self.chart, products, precision)

    __rmul__ = __mul__

    def scale(self, scalar: NovikovScalar) -> "AffinoidElement":
        """Multiply by a Novikov scalar (a function constant in z)."""
        if scalar.field != self.atlas.base_field:
            raise ValidationError("base field mismatch")
        vs, wa = scalar.val(), self.polytope_valuation()
        precision = _min_precision(
            self.precision + (min(Fraction(0), vs) if vs != INF else 0),
            scalar.precision + (min(Fraction(0), wa) if wa != INF else 0),
        )
        base = self.atlas.base_field
        products = [
            (lam + e, a, base.mul(c, s)) for lam, a, c in self.terms for e, s in scalar.terms
        ]
        return AffinoidElement.from_terms(self.atlas, self.chart, products, precision)

    def truncate(self, precision: Any) -> "AffinoidElement":
        precision = _min_precision(self.precision, as_extended_rational(precision))
        return AffinoidElement.from_terms(self.atlas, self.chart, self.terms, precision)

    def restrict(self, target: Union[int, Sequence[int]]) -> "AffinoidElement":
        """Move to the chart of the union chain, rebasing T-exponents by <q_J - q_I, A>."""
        union = tuple(sorted(set(self.chart) | set(_as_chain(target))))
        if union == self.chart:
            return self
        if not self.atlas.is_chain(union):
            raise ChartError(
                f"missing containment: {list(self.chart)} and {list(_as_chain(target))} span no simplex",
                location=union,
            )
        shift = self.atlas.offset(self.chart[-1], union[-1])
        moved = [(lam + dot(shift, a), a, c) for lam, a, c in self.terms]
        return AffinoidElement.from_terms(self.atlas, union, moved, self.precision)

    def unit_invert(self) -> "AffinoidElement":
        """Inverse of a recognizable unit via its dominating monomial and a geometric series."""
        if self.is_zero():
            raise PrecisionError("inversion of zero")
        lead = self._dominating_term()
        if lead is None:
            raise PrecisionError("not recognizably a unit at this precision")
        lam_m, a_m, c_m = lead
        base = self.atlas.base_field
        inv_c = base.inv(c_m)
        minus_a = tuple(neg(a_m))
        w_inverse = self.term_valuation(-lam_m, minus_a)
        if self.is_exact() and len(self.terms) == 1:
            return AffinoidElement.monomial(self.atlas, self.chart, -lam_m, minus_a, inv_c, INF)
        window = (
            Fraction(get_config().precision) if self.is_exact() else self.precision + w_inverse
        )
        # u = m^{-1}(a − m)
        u_terms = [
            (lam - lam_m, tuple(x - y for x, y in zip(a, a_m)), base.mul(c, inv_c))
            for lam, a, c in self.terms
            if (lam, a) != (lam_m, a_m)
        ]
        minus_u = -AffinoidElement.from_terms(self.atlas, self.chart, u_terms, window)
        series = AffinoidElement.constant(self.atlas, self.chart, 1, window)
        power = series
        while True:
            power = power * minus_u
            if power.is_zero():
                break
            series = series + power
        m_inverse = AffinoidElement.monomial(self.atlas, self.chart, -lam_m, minus_a, inv_c, INF)
        result = m_inverse * series
        return result.truncate(window + w_inverse)

    def _dominating_term(self) -> Optional[Tuple[Fraction, IntVector, Coefficient]]:
        domain = self.atlas.domain(self.chart)
        for lam_m, a_m, c_m in self.terms:
            dominated = True
            for lam, a, _ in self.terms:
                if (lam, a) == (lam_m, a_m):
                    continue
                diff = tuple(x - y for x, y in zip(a, a_m))
                if (lam - lam_m) + domain.min_pairing(diff) <= 0:
                    dominated = False
                    break
            if dominated:
                return (lam_m, a_m, c_m)
        return None

    def equals_up_to(self, other: "AffinoidElement", precision: Any = None) -> bool:
        difference = self - other
        if precision is not None:
            difference = difference.truncate(precision)
        return difference.is_zero()

    # ------------------------------------------------------------------ Text / JSON

    def format(self) -> str:
        if not self.terms:
            return "0"
        base = self.atlas.base_field
        parts = []
        for lam, a, c in self.terms:
            pieces = [base.render(c)]
            if lam != 0:
                pieces.append(f"T^{{{format_number(lam)}}}")
            if any(a):
                pieces.append("z^{" + ",".join(str(x) for x in a) + "}")
            parts.append("*".join(pieces))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def to_json(self) -> Dict[str, Any]:
        base = self.atlas.base_field
        return {
            "chart": list(self.chart),
            "precision": format_number(self.precision),
            "terms": [{"t": format_number(lam), "z": list(a), "c": base.render(c)} for lam, a, c in self.terms],
        }

    def terms_json(self) -> List[Dict[str, Any]]:
        return self.to_json()["terms"]

    @classmethod
    def from_json(cls, atlas: ChartAtlas, data: Mapping[str, Any]) -> "AffinoidElement":
        return cls.from_terms(
            atlas,
            tuple(data["chart"]),
            [(t["t"], t["z"], t["c"]) for t in data.get("terms", [])],
            data.get("precision", "inf"),
        )
