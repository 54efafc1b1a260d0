"""
Fibres of the universal families of broken strips and degenerate annuli.

Responsibilities
  - Describe the fibre of the universal curve over a point of a plain cube
    (a chain of strips, one more than the coordinates equal to 1).
  - Describe the fibre of the degenerate-annulus family over a point of a
    pairs barycentric cell: an input strip, an output strip, and one max-step
    and one min-step strip for each step of the breaking chain, arranged
    cyclically.
  - Check that restricting a fibre to a face agrees with the face's own fibre.

Usage Context
  - `mirror annuli cells` reports component counts per cell; the functor's
    annulus family enumerates these components.

Limitations
  - Components are labelled strips; no conformal structure is kept.
  - Steps whose end label does not move are kept as constant strips, so the
    component count is 2|vI| on every cell.
"""
# 说明：断裂条带与退化环面万有族的纤维描述。
# 职责：
# - plain_fibre：普通立方体上点的纤维，分支数 = 1 + (坐标等于 1 的个数)
# - degenerate_annulus_fibre：胞腔 σ_{vI⊂vJ} 上点的纤维（输入条带、输出条带、各步的 max / min 条带）
# - face_restriction_compatible：面限制与面自身纤维一致性检查
# 约定：
# - 断裂链 B = vI ∪ {坐标为 1 的成员}；循环顺序为 [out, max_m…max_1, in, min_1…min_m]

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from mirlib.adams.cubes import AdamsCube, Label, format_label
from mirlib.adams.pairs import CellPoint, cell_point, embed_face_point
from mirlib.core.affine.chains import Chain, PairsBarycentricCell
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.core.utils.serialization import format_number

_logger = get_logger(__name__)


@dataclass(frozen=True)
class FibreComponent:
    """
    One strip of a fibre.

    - Configuration
      - role: strip | in | out | max | min.
      - ends: the labels of its two ends, incoming end first.
      - active: (member, coordinate) pairs of the parameters living on it.
      - marked: "z_in" / "z_ou" on the input / output strips.
      - constant: True when both ends carry the same label.
    """

    role: str
    ends: Tuple[Label, Label]
    active: Tuple[Tuple[Any, Fraction], ...] = ()
    step: Optional[int] = None
    marked: Optional[str] = None
    constant: bool = False

    def signature(self) -> Tuple:
        return (self.role, self.ends, self.step, self.marked, self.constant, self.active)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "role": self.role,
            "ends": [_render(e) for e in self.ends],
            "step": self.step,
            "marked": self.marked,
            "constant": self.constant,
            "active": [{"member": _render(m), "coordinate": format_number(r)} for m, r in self.active],
        }


def _render(label: Any) -> str:
    if isinstance(label, tuple) and label and isinstance(label[0], int):
        return format_chain(label)
    return format_label(label)


@dataclass
class FibreDescription:
    # 纤维：按循环顺序排列的分支
    source: str
    components: List[FibreComponent] = field(default_factory=list)
    breaking: Tuple[Any, ...] = ()

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def nonconstant_count(self) -> int:
        return sum(1 for c in self.components if not c.constant)

    def boundary_segments(self) -> List[Tuple[Label, Label]]:
        return [c.ends for c in self.components]

    def signature(self) -> Tuple:
        return tuple(c.signature() for c in self.components)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "breaking": [_render(b) for b in self.breaking],
            "component_count": self.component_count,
            "nonconstant_count": self.nonconstant_count,
            "components": [c.to_dict() for c in self.components],
        }


# ----------------------------------------------------------------- Plain cubes


def plain_fibre(cube: AdamsCube, point: Optional[Sequence[Any]] = None) -> FibreDescription:
    """Broken strip over a point of a plain cube; empty for a single label."""
    values = cube.check_point(point) if point is not None else cube.center()
    description = FibreDescription(source=cube.name())
    if len(cube.labels) == 1:
        return description
    coords = dict(zip(cube.coordinates, values))
    breaks = [cube.labels[0]] + [c for c in cube.coordinates if coords[c] == 1] + [cube.labels[-1]]
    description.breaking = tuple(breaks)
    for low, high in zip(breaks, breaks[1:]):
        active = tuple((c, coords[c]) for c in cube.coordinates if low < c < high and 0 < coords[c] < 1)
        description.components.append(FibreComponent(role="strip", ends=(low, high), active=active))
    return description


# ----------------------------------------------------------------- Degenerate annuli


def _active(point: CellPoint, members: Sequence[Chain]) -> Tuple[Tuple[Chain, Fraction], ...]:
    return tuple((m, point[m]) for m in members if m in point and 0 < point[m] < 1)


def degenerate_annulus_fibre(
    cell: PairsBarycentricCell,
    point: Optional[Sequence[Any]] = None,
) -> FibreDescription:
    """
    Fibre of the degenerate-annulus family over a point of sigma_{vI within vJ}.

    The point defaults to the cell barycentre (all coordinates 1/2). Points on
    the boundary of the cell are accepted; members at coordinate 1 then join
    the breaking chain and members at 0 drop out.
    """
    values = cell_point(cell, point)
    breaking = tuple(c for c in cell.outer if c in cell.inner or values.get(c) == 1)
    free = [c for c in cell.outer if c not in cell.inner]

    def strictly_between(low: Optional[Chain], high: Optional[Chain]) -> List[Chain]:
        out = []
        for c in free:
            if low is not None and not set(low) < set(c):
                continue
            if high is not None and not set(c) < set(high):
                continue
            out.append(c)
        return out

    first, last = breaking[0], breaking[-1]
    inbound = FibreComponent(
        role="in",
        ends=(min(first), max(first)),
        active=_active(values, strictly_between(None, first)),
        marked="z_in",
    )
    outbound = FibreComponent(
        role="out",
        ends=(min(last), max(last)),
        active=_active(values, strictly_between(last, None)),
        marked="z_ou",
    )
    maxima, minima = [], []
    for step, (low, high) in enumerate(zip(breaking, breaking[1:]), start=1):
        active = _active(values, strictly_between(low, high))
        maxima.append(
            FibreComponent(
                role="max",
                ends=(max(low), max(high)),
                active=active,
                step=step,
                constant=max(low) == max(high),
            )
        )
        minima.append(
            FibreComponent(
                role="min",
                ends=(min(high), min(low)),
                active=active,
                step=step,
                constant=min(low) == min(high),
            )
        )
    components = [outbound] + list(reversed(maxima)) + [inbound] + minima
    _logger.debug("fibre over %s: %d components", cell.label(), len(components))
    return FibreDescription(source=cell.label(), components=components, breaking=breaking)


def face_restriction_compatible(
    face: PairsBarycentricCell,
    cell: PairsBarycentricCell,
    point: Optional[Sequence[Any]] = None,
) -> bool:
    """Compare the fibre of the face with the fibre of the cell at the embedded point."""
    face_values = cell_point(face, point)
    embedded = embed_face_point(face, cell, face_values)
    own = degenerate_annulus_fibre(face, [face_values[c] for c in face.coordinates])
    pulled = degenerate_annulus_fibre(cell, [embedded[c] for c in cell.coordinates])
    return own.signature() == pulled.signature()


def face_restriction_failures(cells: Sequence[PairsBarycentricCell]) -> List[Tuple[str, str]]:
    # 对所有 (面, 胞腔) 对检查限制一致性，返回失败的标签对
    failures = []
    for cell in cells:
        for face in cells:
            if face != cell and face.is_face_of(cell) and not face_restriction_compatible(face, cell):
                failures.append((face.label(), cell.label()))
    return failures
