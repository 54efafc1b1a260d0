"""
Boundary facets of the Adams moduli spaces.

Responsibilities
  - Label every codimension-one facet of a plain, input or output cube by
    its skip / stop family, with factor decomposition and the pieces of the
    universal curve over it.
  - Enumerate the boundary families of the moduli space with d marked
    points (interior skip, interior break, end break, disc bubble).

Usage Context
  - `mirror adams strata --boundary` and the functor ledger build their facet
    tables here.

Limitations
  - Facets are combinatorial labels; no collar or gluing data is produced.
"""
# 说明：Adams 模空间的余维一边界标注。
# 职责：
# - marked_moduli_boundary：普通 / 输入 / 输出立方体的 skip、stop 两族边界
# - 带 d 个标记点时的四族边界：内部 skip、内部断裂、端点断裂、圆盘冒泡
# - BoundaryFacet：族名、成员、层（若有）、因子空间、万有曲线分支描述

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from mirlib.adams.cubes import INPUT, OUTPUT, AdamsCube, Label, Stratum, format_label, format_labels
from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.logging import format_chain, get_logger

_logger = get_logger(__name__)


@dataclass(frozen=True)
class ModuliFactor:
    # 因子空间：kind 为 plain / prism / input / output / disc；marked 为标记点个数
    kind: str
    labels: Tuple[Label, ...]
    marked: int = 0

    def name(self) -> str:
        if self.kind == "disc":
            return f"R^{{{self.marked + 1}}}"
        suffix = {INPUT: ";in", OUTPUT: ";ou"}.get(self.kind, "")
        upper = f"^{self.marked}" if self.marked else ""
        return f"A{upper}_{{{format_labels(self.labels)}{suffix}}}"

    @classmethod
    def of(cls, cube: AdamsCube, marked: int = 0) -> "ModuliFactor":
        return cls(kind=cube.kind, labels=cube.labels, marked=marked)


@dataclass(frozen=True)
class BoundaryFacet:
    """
    One boundary facet.

    - Configuration
      - family: skip | stop | break | end_break | disc.
      - member: the label the facet is attached to (None for disc bubbles).
      - stratum: the cube stratum of the facet, when the space is a cube.
      - factors: the product decomposition, top factor first.
      - curve: the pieces of the universal curve restricted to the facet.
    """

    family: str
    member: Optional[Label]
    factors: Tuple[ModuliFactor, ...]
    curve: Tuple[str, ...] = ()
    stratum: Optional[Stratum] = None
    extra: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def label(self) -> str:
        return " × ".join(f.name() for f in self.factors)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "member": None if self.member is None else format_label(self.member),
            "factors": [f.name() for f in self.factors],
            "curve": list(self.curve),
            "stratum": None if self.stratum is None else self.stratum.label(),
            **self.extra,
        }


# ----------------------------------------------------------------- Cube facets


def _extremes(members: Tuple[Tuple[int, ...], ...]) -> Tuple[str, str]:
    highs = sorted({max(c) for c in members})
    lows = sorted({min(c) for c in members})
    return format_chain(highs), format_chain(lows)


def _plain_facets(cube: AdamsCube) -> List[BoundaryFacet]:
    facets = []
    low, high = cube.labels[0], cube.labels[-1]
    for label in cube.coordinates:
        skip = Stratum(inner=(low, high), outer=tuple(x for x in cube.labels if x != label))
        facets.append(
            BoundaryFacet(
                family="skip",
                member=label,
                factors=tuple(ModuliFactor.of(f) for f in cube.product_factors(skip)),
                curve=(f"T_{{{format_labels(skip.outer)}}}",),
                stratum=skip,
            )
        )
    for label in cube.coordinates:
        stop = Stratum(inner=(low, label, high), outer=cube.labels)
        upper, lower = cube.product_factors(stop)
        facets.append(
            BoundaryFacet(
                family="stop",
                member=label,
                factors=(ModuliFactor.of(upper), ModuliFactor.of(lower)),
                curve=(
                    f"T_{{{format_labels(upper.labels)}}} × {lower.name()}",
                    f"{upper.name()} × T_{{{format_labels(lower.labels)}}}",
                ),
                stratum=stop,
            )
        )
    return facets


def _marked_cube_facets(cube: AdamsCube) -> List[BoundaryFacet]:
    facets = []
    fixed = cube.fixed[0]
    suffix = ";in" if cube.kind == INPUT else ";ou"
    for member in cube.coordinates:
        rest = tuple(x for x in cube.labels if x != member)
        skip = Stratum(inner=(fixed,), outer=rest)
        facets.append(
            BoundaryFacet(
                family="skip",
                member=member,
                factors=tuple(ModuliFactor.of(f) for f in cube.product_factors(skip)),
                curve=(f"U_{{{format_labels(rest)}{suffix}}}",),
                stratum=skip,
            )
        )
    for member in cube.coordinates:
        stop = Stratum(inner=cube.order((fixed, member)), outer=cube.labels)
        factors = cube.product_factors(stop)
        if cube.kind == INPUT:
            plain, marked = factors
        else:
            marked, plain = factors
        highs, lows = _extremes(plain.labels)
        curve = (
            f"max*T_{{{highs}}} × {marked.name()}",
            f"min*T_{{{lows}}} × {marked.name()}",
            f"{plain.name()} × U_{{{format_labels(marked.labels)}{suffix}}}",
        )
        facets.append(
            BoundaryFacet(
                family="stop",
                member=member,
                factors=tuple(ModuliFactor.of(f) for f in factors),
                curve=curve,
                stratum=stop,
            )
        )
    return facets


# ----------------------------------------------------------------- Marked points


def _marked_facets(labels: Tuple[Label, ...], marked: int) -> List[BoundaryFacet]:
    facets = []
    interior = labels[1:-1]
    for label in interior:
        facets.append(
            BoundaryFacet(
                family="skip",
                member=label,
                factors=(ModuliFactor("plain", tuple(x for x in labels if x != label), marked),),
            )
        )
    for label in interior:
        upper = tuple(x for x in labels if x >= label)
        lower = tuple(x for x in labels if x <= label)
        for first in range(marked + 1):
            facets.append(
                BoundaryFacet(
                    family="break",
                    member=label,
                    factors=(ModuliFactor("plain", upper, marked - first), ModuliFactor("plain", lower, first)),
                    extra={"lower_marked": first},
                )
            )
    # 端点断裂：单点标签一侧的条带至少携带一个标记点
    if len(labels) == 1:
        for first in range(1, marked):
            facets.append(
                BoundaryFacet(
                    family="end_break",
                    member=labels[0],
                    factors=(ModuliFactor("plain", labels, marked - first), ModuliFactor("plain", labels, first)),
                    extra={"side": "=", "lower_marked": first},
                )
            )
    else:
        top, bottom = labels[-1], labels[0]
        for on_end in range(1, marked + 1):
            facets.append(
                BoundaryFacet(
                    family="end_break",
                    member=top,
                    factors=(ModuliFactor("plain", (top,), on_end), ModuliFactor("plain", labels, marked - on_end)),
                    extra={"side": "-", "lower_marked": marked - on_end},
                )
            )
            facets.append(
                BoundaryFacet(
                    family="end_break",
                    member=bottom,
                    factors=(ModuliFactor("plain", labels, marked - on_end), ModuliFactor("plain", (bottom,), on_end)),
                    extra={"side": "+", "lower_marked": on_end},
                )
            )
    for bubbled in range(2, marked + 1):
        remaining = marked + 1 - bubbled
        for position in range(remaining):
            facets.append(
                BoundaryFacet(
                    family="disc",
                    member=None,
                    factors=(ModuliFactor("plain", labels, remaining), ModuliFactor("disc", (), bubbled)),
                    extra={"position": position, "bubbled": bubbled},
                )
            )
    return facets


def marked_moduli_boundary(cube: AdamsCube, marked: Optional[int] = None) -> List[BoundaryFacet]:
    """
    Boundary facets of the moduli space over a cube.

    With ``marked`` given (plain cubes only) the space carries that many
    marked boundary inputs and the four marked families are returned;
    otherwise the skip and stop facets of the cube itself.
    """
    if marked is not None:
        if cube.kind in (INPUT, OUTPUT):
            raise ValidationError("marked points are only supported on plain cubes")
        if marked < 0:
            raise ValidationError("marked point count must be nonnegative")
        facets = _marked_facets(cube.labels, marked)
    elif cube.kind in (INPUT, OUTPUT):
        facets = _marked_cube_facets(cube)
    else:
        facets = _plain_facets(cube)
    _logger.debug("%s: %d boundary facets", cube.name(), len(facets))
    return facets
