"""
Intersection data: the generators the formal counts refer to.

Responsibilities
  - Per vertex and brane, the intersection points x with their Maslov degree
    and the affine function g_x (gradient, value at the basepoint).
  - The generators of the Floer complex of the pair, with their degrees.
  - intersections.json reading and writing.

Usage Context
  - ledger_validate resolves labels here; sheaf_from_counts turns the points
    of a brane into the graded modules F(i).

Limitations
  - When no target brane is given the target is the source brane.
"""
# 说明：形式计数所引用的交点与生成元。
# 职责：
# - IntersectionPoint：标签、Maslov 次数、仿射函数 g_x（梯度、在基点处的值）
# - IntersectionData：source / target 两个膜在各顶点上的交点，以及 Floer 复形的生成元 pair
# - intersections_from_dict / load_intersections：intersections.json 解析
# 约定：
# - JSON：{"source": [{"vertex", "points": [{"label","degree","gradient","value"}]}],
#          "target": [...]（可省略）, "pair": [{"label","degree"}]}

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.param_validation import ParamValidationError, as_rational, as_rational_vector
from mirlib.core.utils.rational import Vector
from mirlib.core.utils.serialization import format_number

SOURCE = "source"
TARGET = "target"
BRANES = (SOURCE, TARGET)


@dataclass(frozen=True)
class IntersectionPoint:
    label: str
    degree: int
    gradient: Vector = ()
    value: Fraction = Fraction(0)


@dataclass(frozen=True)
class PairGenerator:
    label: str
    degree: int


@dataclass
class IntersectionData:
    """
    Intersection points per brane and vertex, and the Floer generators.

    - Configuration
      - source: vertex -> tuple of IntersectionPoint for the brane L.
      - target: same for L'; None means L' = L.
      - pair: generators of the Floer complex CF(L, L').

    - Behavior
      - point() and generator() raise ValidationError on unknown labels.
    """

    source: Dict[int, Tuple[IntersectionPoint, ...]] = field(default_factory=dict)
    target: Optional[Dict[int, Tuple[IntersectionPoint, ...]]] = None
    pair: Tuple[PairGenerator, ...] = ()

    def __post_init__(self) -> None:
        for name in BRANES:
            for vertex, points in self.brane(name).items():
                labels = [p.label for p in points]
                if len(set(labels)) != len(labels):
                    raise ValidationError(f"duplicate point labels at vertex {vertex} of the {name} brane")
        labels = [g.label for g in self.pair]
        if len(set(labels)) != len(labels):
            raise ValidationError("duplicate Floer generator labels")

    @property
    def self_pair(self) -> bool:
        return self.target is None

    def brane(self, name: str) -> Dict[int, Tuple[IntersectionPoint, ...]]:
        if name == SOURCE or (name == TARGET and self.target is None):
            return self.source
        if name == TARGET:
            return self.target
        raise ValidationError(f"unknown brane '{name}', expected one of {BRANES}")

    def points(self, brane: str, vertex: int) -> Tuple[IntersectionPoint, ...]:
        return self.brane(brane).get(vertex, ())

    def index(self, brane: str, vertex: int, label: str) -> int:
        for k, point in enumerate(self.points(brane, vertex)):
            if point.label == label:
                return k
        raise ValidationError(f"no point '{label}' at vertex {vertex} of the {brane} brane", location=(vertex,))

    def point(self, brane: str, vertex: int, label: str) -> IntersectionPoint:
        return self.points(brane, vertex)[self.index(brane, vertex, label)]

    def generator(self, label: str) -> PairGenerator:
        for g in self.pair:
            if g.label == label:
                return g
        raise ValidationError(f"no Floer generator '{label}'")

    def generator_labels(self) -> List[str]:
        return [g.label for g in self.pair]

    def to_dict(self) -> Dict[str, Any]:
        def brane(points: Mapping[int, Tuple[IntersectionPoint, ...]]) -> List[Dict[str, Any]]:
            return [
                {
                    "vertex": v,
                    "points": [
                        {
                            "label": p.label,
                            "degree": p.degree,
                            "gradient": [format_number(x) for x in p.gradient],
                            "value": format_number(p.value),
                        }
                        for p in points[v]
                    ],
                }
                for v in sorted(points)
            ]

        out: Dict[str, Any] = {"source": brane(self.source), "pair": [{"label": g.label, "degree": g.degree} for g in self.pair]}
        if self.target is not None:
            out["target"] = brane(self.target)
        return out


def _brane_from_list(items: List[Mapping[str, Any]], dimension: Optional[int]) -> Dict[int, Tuple[IntersectionPoint, ...]]:
    out: Dict[int, Tuple[IntersectionPoint, ...]] = {}
    for item in items:
        points = []
        for p in item.get("points", []):
            gradient = as_rational_vector(p.get("gradient", [0] * (dimension or 0)))
            if dimension is not None and len(gradient) != dimension:
                raise ValidationError(f"point '{p['label']}' has a gradient of the wrong dimension")
            points.append(IntersectionPoint(str(p["label"]), int(p["degree"]), gradient, as_rational(p.get("value", 0))))
        out[int(item["vertex"])] = tuple(points)
    return out


def intersections_from_dict(data: Mapping[str, Any], dimension: Optional[int] = None) -> IntersectionData:
    try:
        source = _brane_from_list(data.get("source", []), dimension)
        target = _brane_from_list(data["target"], dimension) if "target" in data else None
        pair = tuple(PairGenerator(str(g["label"]), int(g["degree"])) for g in data.get("pair", []))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed intersection data: {exc}") from exc
    except ParamValidationError as exc:
        raise ValidationError(f"malformed intersection data: {exc}") from exc
    return IntersectionData(source=source, target=target, pair=pair)


def load_intersections(source: Union[str, Path, Mapping[str, Any]], dimension: Optional[int] = None) -> IntersectionData:
    if isinstance(source, Mapping):
        return intersections_from_dict(source, dimension)
    try:
        data = json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{source}: invalid JSON ({exc.msg})") from exc
    return intersections_from_dict(data, dimension)
