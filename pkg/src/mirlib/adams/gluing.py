"""
Gluing parameters on Adams cubes and annulus gluing functions on cells.

Responsibilities
  - Keep a registry of order-preserving identifications [0, 1] -> [0, inf]
    (``odds``: r / (1 - r), ``quadratic_odds``: r^2 / (1 - r)).
  - Turn cube coordinates into gluing parameters g_I.
  - Build annulus gluing functions by proportional splitting of a total
    length S, and the nested-cell extension near a face.

Usage Context
  - The annulus family of the functor and `mirror annuli cells --gluing`.

Limitations
  - Only the proportional-split construction g_k = w_k S is provided.
"""
# 说明：Adams 立方体的粘合参数与配对胞腔上的环面粘合函数。
# 职责：
# - GLUING_MAPS / get_gluing_map：[0,1] -> [0,∞] 的保序等同注册表（默认取运行时配置 gluing_map）
# - cube_gluing_parameters：g_I = φ(r_i)，i ∈ I \ {min, max}
# - annulus_gluing：(0,∞]^{min vI} × (0,∞]^{max vI}，每个因子内坐标和为 S
# - nested_gluing：靠近面 σ_{vI'⊂vJ'} 时，新槽位取 φ(引入成员的坐标)，旧槽位取 w·S

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Sequence, Tuple, Union

from mirlib.adams.cubes import AdamsCube, Label
from mirlib.adams.pairs import cell_point
from mirlib.core.affine.chains import PairsBarycentricCell
from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.config import get_config
from mirlib.core.utils.param_validation import as_extended_rational, as_rational
from mirlib.core.utils.serialization import format_number

Extended = Union[Fraction, float]
GluingMap = Callable[[Fraction], Extended]


def _odds(r: Fraction) -> Extended:
    return math.inf if r == 1 else r / (1 - r)


def _quadratic_odds(r: Fraction) -> Extended:
    return math.inf if r == 1 else r * r / (1 - r)


GLUING_MAPS: Dict[str, GluingMap] = {
    "odds": _odds,
    "quadratic_odds": _quadratic_odds,
}


def get_gluing_map(name: Optional[str] = None) -> GluingMap:
    key = name or get_config().gluing_map
    try:
        return GLUING_MAPS[key]
    except KeyError as exc:
        raise ValidationError(f"unknown gluing map '{key}', expected one of {sorted(GLUING_MAPS)}") from exc


def cube_gluing_parameters(
    cube: AdamsCube,
    point: Sequence[Any],
    subset: Sequence[Label],
    gluing_map: Optional[str] = None,
) -> Dict[Label, Extended]:
    """g_I for I containing min K and max K: phi of the coordinates labelled by I minus the ends."""
    phi = get_gluing_map(gluing_map)
    coords = cube.as_mapping(point)
    unknown = [x for x in subset if x not in coords and x not in cube.fixed]
    if unknown:
        raise ValidationError(f"labels {unknown} are not labels of {cube.name()}")
    return {x: phi(coords[x]) for x in cube.order(subset) if x in coords}


@dataclass
class GluingParameters:
    # 两个因子：以 min vI 与 max vI 的元素为槽位
    minima: Dict[int, Extended] = field(default_factory=dict)
    maxima: Dict[int, Extended] = field(default_factory=dict)

    def factor_sums(self) -> Tuple[Extended, Extended]:
        return sum(self.minima.values(), Fraction(0)), sum(self.maxima.values(), Fraction(0))

    def is_infinite(self) -> bool:
        return all(math.isinf(v) for v in (*self.minima.values(), *self.maxima.values()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "min": {str(k): format_number(v) for k, v in self.minima.items()},
            "max": {str(k): format_number(v) for k, v in self.maxima.items()},
        }


def _slots(cell: PairsBarycentricCell) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    return tuple(sorted({min(c) for c in cell.inner})), tuple(sorted({max(c) for c in cell.inner}))


def _split_weights(
    weights: Optional[Sequence[Any]], lows: Sequence[int], highs: Sequence[int]
) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    if weights is None:
        return (
            tuple(Fraction(1, len(lows)) for _ in lows),
            tuple(Fraction(1, len(highs)) for _ in highs),
        )
    values = [as_rational(w) for w in weights]
    if len(values) != len(lows) + len(highs):
        raise ValidationError(f"expected {len(lows) + len(highs)} weights, got {len(values)}")
    if any(w <= 0 for w in values):
        raise ValidationError("gluing weights must be positive")
    low_w, high_w = tuple(values[: len(lows)]), tuple(values[len(lows) :])
    if sum(low_w) != 1 or sum(high_w) != 1:
        raise ValidationError("gluing weights of each factor must sum to 1")
    return low_w, high_w


def _total(total: Any) -> Extended:
    value = as_extended_rational(total)
    if not math.isinf(value) and value <= 0:
        raise ValidationError("the total gluing length must be positive")
    return value


def annulus_gluing(
    cell: PairsBarycentricCell,
    total: Any,
    weights: Optional[Sequence[Any]] = None,
) -> GluingParameters:
    """
    Proportional annulus gluing function g_k = w_k S on min vI and max vI.

    weights are indexed by min vI followed by max vI (each in increasing
    order); None splits each factor evenly.
    """
    lows, highs = _slots(cell)
    low_w, high_w = _split_weights(weights, lows, highs)
    value = _total(total)
    if math.isinf(value):
        return GluingParameters(minima={k: math.inf for k in lows}, maxima={k: math.inf for k in highs})
    return GluingParameters(
        minima={k: w * value for k, w in zip(lows, low_w)},
        maxima={k: w * value for k, w in zip(highs, high_w)},
    )


def nested_gluing(
    face: PairsBarycentricCell,
    cell: PairsBarycentricCell,
    point: Optional[Sequence[Any]],
    total: Any,
    weights: Optional[Sequence[Any]] = None,
    gluing_map: Optional[str] = None,
) -> GluingParameters:
    """
    Gluing parameters indexed by the face's slots at a point of the cell.

    Slots already present for the cell keep g = w S; slots introduced by the
    members of vI' minus vI take phi of that member's coordinate.
    """
    if not face.is_face_of(cell):
        raise ValidationError(f"{face.label()} is not a face of {cell.label()}")
    phi = get_gluing_map(gluing_map)
    values = cell_point(cell, point)
    base = annulus_gluing(cell, total, weights)
    new_members = [c for c in face.inner if c not in cell.inner]
    out = GluingParameters(minima=dict(base.minima), maxima=dict(base.maxima))
    for member in new_members:
        # 按包含顺序，第一个引入该槽位的成员决定其值
        out.minima.setdefault(min(member), phi(values[member]))
        out.maxima.setdefault(max(member), phi(values[member]))
    out.minima = dict(sorted(out.minima.items()))
    out.maxima = dict(sorted(out.maxima.items()))
    return out
