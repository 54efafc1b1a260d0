"""
Maps from cells of the pairs barycentric subdivision to Adams cubes.

Responsibilities
  - For a cell sigma_{vI in vJ}, build the four maps into the output prism
    J^ou_I, the plain cubes on I >= max I_0 and I <= min I_0, and the input
    prism I_0^in_{J_0}.
  - Evaluate them on points and on faces (as poset maps).
  - For singleton vI, check that the cell is the product of the output cube
    on vJ[>=]_I and the input cube on vJ[<=]_I.

Usage Context
  - The degenerate annulus fibres and the annulus gluing functions are
    pulled back along these maps.

Limitations
  - A target coordinate copies the coordinate of the first member that
    introduces its label; labels never introduced sit at 0.
"""
# 说明：配对重心剖分胞腔到 Adams 立方体的四个映射 (μ_ou, max, min, μ_in)。
# 职责：
# - CellMap：目标立方体、定义域成员、成员 -> 目标标签的引入规则
# - point_image / stratum_image：点映射与面映射（偏序映射）
# - pairs_cell_to_adams：组装四个映射；单元素 vI 时附带双射检查
# 约定：
# - 胞腔点的扩展坐标：vI 成员取 1，vJ \ vI 成员取点坐标

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from mirlib.adams.cubes import AdamsCube, Label, Stratum, input_cube, output_cube, plain_cube, prism_in, prism_out
from mirlib.core.affine.chains import Chain, PairsBarycentricCell, format_barycentric
from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.logging import get_logger
from mirlib.core.utils.param_validation import as_rational

_logger = get_logger(__name__)

CellPoint = Dict[Chain, Fraction]

MAP_NAMES = ("mu_ou", "max", "min", "mu_in")


def cell_point(cell: PairsBarycentricCell, point: Optional[Sequence[Any]] = None) -> CellPoint:
    """Coordinates of a point of the closed cell keyed by the members of vJ minus vI (default: all 1/2)."""
    if point is None:
        return {c: Fraction(1, 2) for c in cell.coordinates}
    if isinstance(point, Mapping):
        values = {tuple(k): as_rational(v) for k, v in point.items()}
        if set(values) != set(cell.coordinates):
            raise ValidationError(f"point keys must be the members of {format_barycentric(cell.coordinates)}")
    else:
        point = list(point)
        if len(point) != cell.dimension:
            raise ValidationError(f"cell {cell.label()} has {cell.dimension} coordinates, got {len(point)}")
        values = {c: as_rational(v) for c, v in zip(cell.coordinates, point)}
    if any(v < 0 or v > 1 for v in values.values()):
        raise ValidationError("cell coordinates must lie in [0, 1]")
    return values


def extended_coordinate(cell: PairsBarycentricCell, point: CellPoint, member: Chain) -> Fraction:
    if member in cell.inner:
        return Fraction(1)
    return point.get(member, Fraction(0))


def embed_face_point(face: PairsBarycentricCell, cell: PairsBarycentricCell, point: CellPoint) -> CellPoint:
    # 面上的点嵌入大胞腔：vI_face \ vI -> 1，vJ \ vJ_face -> 0
    if not face.is_face_of(cell):
        raise ValidationError(f"{face.label()} is not a face of {cell.label()}")
    out = {}
    for member in cell.coordinates:
        if member in face.inner:
            out[member] = Fraction(1)
        elif member not in face.outer:
            out[member] = Fraction(0)
        else:
            out[member] = point[member]
    return out


@dataclass(frozen=True)
class CellMap:
    """
    One of the four maps of a cell into an Adams cube.

    - Configuration
      - name: mu_ou | max | min | mu_in.
      - target: the Adams cube receiving the cell.
      - members: the members of vJ the map reads, in inclusion order.
      - introduces: member -> target labels it introduces.
    """

    name: str
    target: AdamsCube
    members: Tuple[Chain, ...]
    introduces: Callable[[Chain], Tuple[Label, ...]] = field(compare=False, repr=False)

    def point_image(self, cell: PairsBarycentricCell, point: CellPoint) -> Tuple[Fraction, ...]:
        values: Dict[Label, Fraction] = {}
        for member in self.members:
            for label in self.introduces(member):
                values.setdefault(label, extended_coordinate(cell, point, member))
        return tuple(values.get(label, Fraction(0)) for label in self.target.coordinates)

    def stratum_image(self, face: PairsBarycentricCell, cell: PairsBarycentricCell) -> Stratum:
        """Stratum of the target hit by the interior of a face of the cell."""
        interior = cell_point(face)
        return self.target.stratum_of(self.point_image(cell, embed_face_point(face, cell, interior)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "target": self.target.to_dict(),
            "members": [list(m) for m in self.members],
        }


@dataclass
class PairsCellMaps:
    """The four maps of one cell, plus the singleton bijection check."""

    cell: PairsBarycentricCell
    maps: Dict[str, CellMap]
    bijection: Optional[Dict[str, Any]] = None

    def __getitem__(self, name: str) -> CellMap:
        return self.maps[name]

    def image(self, point: Optional[Sequence[Any]] = None) -> Dict[str, Tuple[Fraction, ...]]:
        values = cell_point(self.cell, point)
        return {name: m.point_image(self.cell, values) for name, m in self.maps.items()}

    def face_images(self) -> Dict[str, Dict[PairsBarycentricCell, Stratum]]:
        faces = _faces(self.cell)
        return {name: {f: m.stratum_image(f, self.cell) for f in faces} for name, m in self.maps.items()}

    def is_poset_map(self) -> bool:
        # 面关系在四个映射下保持
        faces = _faces(self.cell)
        for m in self.maps.values():
            images = {f: m.stratum_image(f, self.cell) for f in faces}
            for small, big in itertools.permutations(faces, 2):
                if small.is_face_of(big) and not images[small].is_face_of(images[big]):
                    return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cell": self.cell.label(),
            "maps": {name: m.to_dict() for name, m in self.maps.items()},
            "bijection": self.bijection,
        }


def _faces(cell: PairsBarycentricCell) -> List[PairsBarycentricCell]:
    faces = []
    free = cell.coordinates
    for states in itertools.product((0, None, 1), repeat=len(free)):
        inner = set(cell.inner) | {c for c, s in zip(free, states) if s == 1}
        outer = set(cell.inner) | {c for c, s in zip(free, states) if s != 0}
        order = [c for c in cell.outer]
        faces.append(
            PairsBarycentricCell(
                inner=tuple(c for c in order if c in inner),
                outer=tuple(c for c in order if c in outer),
            )
        )
    return faces


def pairs_cell_to_adams(cell: PairsBarycentricCell) -> PairsCellMaps:
    """Build (mu_ou, max, min, mu_in) for sigma_{vI within vJ}."""
    inner, outer = cell.inner, cell.outer
    low, high = inner[0], inner[-1]
    bottom, top = outer[0], outer[-1]
    above = tuple(c for c in outer if set(high) <= set(c))
    between = tuple(c for c in outer if set(low) <= set(c) <= set(high))
    below = tuple(c for c in outer if set(c) <= set(low))
    maps = {
        "mu_ou": CellMap(
            "mu_ou",
            prism_out(top, high),
            above,
            lambda c: (("-", min(c)), ("+", max(c))),
        ),
        "max": CellMap(
            "max",
            plain_cube([v for v in high if v >= max(low)]),
            between,
            lambda c: (max(c),),
        ),
        "min": CellMap(
            "min",
            plain_cube([v for v in high if v <= min(low)]),
            between,
            lambda c: (min(c),),
        ),
        "mu_in": CellMap(
            "mu_in",
            prism_in(low, bottom),
            below,
            lambda c: (("-", max(c)), ("+", min(c))),
        ),
    }
    result = PairsCellMaps(cell=cell, maps=maps)
    if len(inner) == 1:
        result.bijection = singleton_bijection(cell)
    _logger.debug("cell %s: maps into %s", cell.label(), [m.target.name() for m in maps.values()])
    return result


def _flag_stratum(face: PairsBarycentricCell, flag: Tuple[Chain, ...]) -> Stratum:
    # 面 vI' ⊂ vJ' 与嵌套序列的交
    return Stratum(
        inner=tuple(c for c in flag if c in face.inner),
        outer=tuple(c for c in flag if c in face.outer),
    )


def _face_containing(cell: PairsBarycentricCell, point: CellPoint) -> PairsBarycentricCell:
    inner = set(cell.inner) | {c for c, r in point.items() if r == 1}
    outer = set(cell.inner) | {c for c, r in point.items() if r != 0}
    return PairsBarycentricCell(
        inner=tuple(c for c in cell.outer if c in inner),
        outer=tuple(c for c in cell.outer if c in outer),
    )


def singleton_bijection(cell: PairsBarycentricCell) -> Dict[str, Any]:
    """
    For vI = {I}, check that intersecting faces with vJ[>=]_I and vJ[<=]_I is a
    bijection of face posets onto output cube x input cube, and that it agrees
    with the strata the two cubes assign to points of a {0, 1/2, 1} grid.
    """
    if len(cell.inner) != 1:
        raise ValidationError("the bijection check needs a singleton inner flag")
    (pivot,) = cell.inner
    above = tuple(c for c in cell.outer if set(pivot) <= set(c))
    below = tuple(c for c in cell.outer if set(c) <= set(pivot))
    output, inp = output_cube(above), input_cube(below)
    dimensions_add_up = cell.dimension == output.dimension + inp.dimension

    faces = _faces(cell)
    images = {f: (_flag_stratum(f, above), _flag_stratum(f, below)) for f in faces}
    targets = set(itertools.product(output.strata(), inp.strata()))
    onto = set(images.values()) == targets and len(targets) == len(faces)
    order_kept = all(
        small.is_face_of(big) == (images[small][0].is_face_of(images[big][0]) and images[small][1].is_face_of(images[big][1]))
        for small, big in itertools.permutations(faces, 2)
    )

    grid = (Fraction(0), Fraction(1, 2), Fraction(1))
    seen = set()
    points_agree = True
    for values in itertools.product(grid, repeat=cell.dimension):
        point = dict(zip(cell.coordinates, values))
        out_point = tuple(extended_coordinate(cell, point, c) for c in output.coordinates)
        in_point = tuple(extended_coordinate(cell, point, c) for c in inp.coordinates)
        seen.add((out_point, in_point))
        face = _face_containing(cell, point)
        if (output.stratum_of(out_point), inp.stratum_of(in_point)) != images[face]:
            points_agree = False
    injective = len(seen) == len(grid) ** cell.dimension

    bijective = dimensions_add_up and onto and order_kept and points_agree and injective
    if not bijective:
        _logger.warning("cell %s is not a product of %s and %s", cell.label(), output.name(), inp.name())
    return {
        "domain_dimension": cell.dimension,
        "output_dimension": output.dimension,
        "input_dimension": inp.dimension,
        "targets": [output.name(), inp.name()],
        "bijective": bijective,
    }
