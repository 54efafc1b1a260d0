"""
The Floer complex of a pair of branes as a formal A-infinity algebra.

Responsibilities
  - FloerChain: Novikov linear combinations of Floer generators.
  - FloerComplex: the generators of CF(L, L') with the operations mu^d
    assembled from disc(d) counts, each a sum of count * T^energy.
  - floer_complex(): build the complex from a ledger.

Usage Context
  - The chain-map checks of C and P, composition_check and the A-infinity
    relation and functor checks.

Limitations
  - Only operations with at least one input are modelled; mu^0 does not
    occur for the branes considered here.
"""
# 说明：Floer 复形 CF(L, L′) 与由 disc(d) 计数给出的 μ^d。
# 职责：
# - FloerChain：生成元标签 → NovikovScalar 的线性组合
# - FloerComplex.mu：按条目 (x_0; a_d, ..., a_1) 的计数 · T^λ 多重线性求值
# 约定：
# - 输入按书写顺序 [a_d, ..., a_1] 给出，与 Seidel 符号 ✠ 的约定一致

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from mirlib.core.affine.atlas import ChartAtlas
from mirlib.core.exceptions import ValidationError
from mirlib.core.novikov.base_field import RATIONALS, BaseField
from mirlib.core.novikov.scalar import INF, NovikovScalar
from mirlib.core.utils.logging import get_logger
from mirlib.functor.intersections import IntersectionData, PairGenerator
from mirlib.functor.ledger import FormalCountLedger, LedgerEntry, LedgerFamily, admissible_entries

_logger = get_logger(__name__)


@dataclass(frozen=True)
class FloerChain:
    """
    Element of CF(L, L') with Novikov coefficients.

    - Configuration
      - coefficients: generator label -> NovikovScalar; zeros are dropped.
      - base_field: coefficient field of the scalars.
    """

    coefficients: Mapping[str, NovikovScalar] = field(default_factory=dict)
    base_field: BaseField = RATIONALS

    def __post_init__(self) -> None:
        kept = {label: value for label, value in self.coefficients.items() if not value.is_zero()}
        object.__setattr__(self, "coefficients", kept)

    @classmethod
    def generator(cls, label: str, base_field: BaseField = RATIONALS) -> "FloerChain":
        return cls({label: NovikovScalar.one(INF, base_field)}, base_field)

    @classmethod
    def zero(cls, base_field: BaseField = RATIONALS) -> "FloerChain":
        return cls({}, base_field)

    def coefficient(self, label: str) -> NovikovScalar:
        return self.coefficients.get(label, NovikovScalar.zero(INF, self.base_field))

    def support(self) -> List[str]:
        return sorted(self.coefficients)

    def __add__(self, other: "FloerChain") -> "FloerChain":
        out = dict(self.coefficients)
        for label, value in other.coefficients.items():
            out[label] = out[label] + value if label in out else value
        return FloerChain(out, self.base_field)

    def __neg__(self) -> "FloerChain":
        return FloerChain({label: -value for label, value in self.coefficients.items()}, self.base_field)

    def __sub__(self, other: "FloerChain") -> "FloerChain":
        return self + (-other)

    def signed(self, sign: int) -> "FloerChain":
        return self if sign % 2 == 0 else -self

    def scaled(self, scalar: Any) -> "FloerChain":
        if not isinstance(scalar, NovikovScalar):
            scalar = NovikovScalar.constant(scalar, INF, self.base_field)
        return FloerChain({label: value * scalar for label, value in self.coefficients.items()}, self.base_field)

    def truncate(self, precision: Any) -> "FloerChain":
        return FloerChain(
            {label: value.truncate(precision) for label, value in self.coefficients.items()}, self.base_field
        )

    def is_zero(self, precision: Optional[Any] = None) -> bool:
        chain = self if precision is None else self.truncate(precision)
        return not chain.coefficients

    def equals_up_to(self, other: "FloerChain", precision: Optional[Any] = None) -> bool:
        return (self - other).is_zero(precision)

    def format(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(f"({self.coefficients[label].format()})*{label}" for label in self.support())

    def to_dict(self) -> Dict[str, str]:
        return {label: self.coefficients[label].format() for label in self.support()}


@dataclass
class FloerComplex:
    """
    Generators of CF(L, L') and the operations mu^d.

    - Configuration
      - generators: PairGenerator records in enumeration order.
      - operations: arity d -> disc(d) entries that passed their filters.
      - base_field: coefficient field.

    - Behavior
      - mu(inputs) is multilinear in the written-order inputs [a_d, ..., a_1].
    """

    generators: Tuple[PairGenerator, ...]
    operations: Dict[int, List[LedgerEntry]] = field(default_factory=dict)
    base_field: BaseField = RATIONALS

    def __post_init__(self) -> None:
        self._degrees = {g.label: g.degree for g in self.generators}

    def labels(self) -> List[str]:
        return [g.label for g in self.generators]

    def degree(self, label: str) -> int:
        try:
            return self._degrees[label]
        except KeyError as exc:
            raise ValidationError(f"no Floer generator '{label}'") from exc

    def basis(self, label: str) -> FloerChain:
        self.degree(label)
        return FloerChain.generator(label, self.base_field)

    def arities(self) -> List[int]:
        return sorted(d for d, entries in self.operations.items() if entries)

    def mu(self, inputs: Sequence[FloerChain]) -> FloerChain:
        """mu^d on written-order inputs; d = len(inputs)."""
        out: Dict[str, NovikovScalar] = {}
        for entry in self.operations.get(len(inputs), []):
            value = NovikovScalar.monomial(entry.count, entry.energy, INF, self.base_field)
            for label, chain in zip(entry.inputs, inputs):
                factor = chain.coefficient(label)
                if factor.is_zero():
                    value = None
                    break
                value = value * factor
            if value is None:
                continue
            target = entry.label("output")
            out[target] = out[target] + value if target in out else value
        return FloerChain(out, self.base_field)

    def mu1(self, chain: FloerChain) -> FloerChain:
        return self.mu([chain])

    def mu2(self, left: FloerChain, right: FloerChain) -> FloerChain:
        return self.mu([left, right])


def floer_complex(
    ledger: FormalCountLedger,
    intersections: IntersectionData,
    atlas: ChartAtlas,
) -> FloerComplex:
    """CF(L, L') with mu^d from the admissible disc entries of the ledger."""
    operations: Dict[int, List[LedgerEntry]] = {}
    for entry in admissible_entries(ledger, LedgerFamily.DISC, intersections, atlas):
        operations.setdefault(entry.arity, []).append(entry)
    complex_ = FloerComplex(generators=tuple(intersections.pair), operations=operations, base_field=ledger.base_field)
    _logger.debug(
        "Floer complex with %d generators and operations of arity %s", len(complex_.generators), complex_.arities()
    )
    return complex_
