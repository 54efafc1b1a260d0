"""
Exact polytope geometry for chart domains.

Responsibilities
  - Represent convex polytopes by rational vertex lists.
  - Decide point and polytope containment.
  - Intersect polytopes and minimize linear functionals over intersections.

Usage Context
  - ChartAtlas validation (simplex-in-chart, nesting) and the polytope
    valuation of chart-ring monomials.

Limitations
  - Exact in dimensions 1 and 2 (interval arithmetic, monotone-chain hull
    and Sutherland-Hodgman clipping over Fractions).
  - Dimension >= 3 goes through scipy.optimize.linprog; results are floats
    snapped back to rationals with a bounded denominator.
"""
# 说明：图卡区域的精确多面体几何。
# 职责：
# - Polytope：以有理顶点列表表示的凸多面体，支持平移、点/多面体包含判定
# - intersect_all：多个多面体之交（一维区间、二维多边形裁剪精确；高维仅保留顶点集合用于线性规划）
# - min_pairing：线性泛函 ⟨x, A⟩ 在多面体之交上的最小值
# 约定：
# - 维数 >= 3 时使用 scipy.optimize.linprog，结果以 limit_denominator 恢复为有理数，并记录一次 WARNING

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.logging import get_logger
from mirlib.core.utils.rational import Vector, add, dot, sub, vec

_logger = get_logger(__name__)

# 高维线性规划结果恢复为有理数时允许的最大分母
_LP_DENOMINATOR = 10**6
_warned_lp = False


def _note_lp() -> None:
    global _warned_lp
    if not _warned_lp:
        _logger.warning("dimension >= 3: polytope operations use floating-point linear programming")
        _warned_lp = True


# ----------------------------------------------------------------- Planar helpers


def _cross(o: Vector, a: Vector, b: Vector) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points: Sequence[Vector]) -> List[Vector]:
    """Counter-clockwise hull without collinear points (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: List[Vector] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Vector] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _on_segment(p: Vector, a: Vector, b: Vector) -> bool:
    if _cross(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _in_polygon(p: Vector, hull: Sequence[Vector]) -> bool:
    if not hull:
        return False
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return _on_segment(p, hull[0], hull[1])
    return all(_cross(hull[i], hull[(i + 1) % len(hull)], p) >= 0 for i in range(len(hull)))


def _line_intersection(p: Vector, q: Vector, a: Vector, b: Vector) -> Vector:
    # 线段 pq 与直线 ab 的交点（调用方保证 p、q 在直线两侧）
    cp = _cross(a, b, p)
    cq = _cross(a, b, q)
    t = cp / (cp - cq)
    return add(p, tuple(t * c for c in sub(q, p)))


def clip_polygon(subject: Sequence[Vector], clip: Sequence[Vector]) -> List[Vector]:
    """Sutherland-Hodgman clipping of a convex polygon by a convex CCW polygon."""
    if len(clip) < 3:
        # 退化裁剪区域：保留落在其中的点
        kept = [p for p in subject if _in_polygon(p, clip)] + [p for p in clip if _in_polygon(p, subject)]
        return convex_hull_2d(kept)
    output = list(subject)
    for i in range(len(clip)):
        a, b = clip[i], clip[(i + 1) % len(clip)]
        current, output = output, []
        if not current:
            break
        for j in range(len(current)):
            p, q = current[j], current[(j + 1) % len(current)]
            p_in = _cross(a, b, p) >= 0
            q_in = _cross(a, b, q) >= 0
            if p_in:
                output.append(p)
                if not q_in:
                    output.append(_line_intersection(p, q, a, b))
            elif q_in:
                output.append(_line_intersection(p, q, a, b))
    return convex_hull_2d(output)


# ----------------------------------------------------------------- Polytope


@dataclass(frozen=True)
class Polytope:
    """
    Convex hull of finitely many rational points.

    - Configuration
      - vertices: rational vectors, all of the same dimension.

    - Behavior
      - Dimension-1 polytopes are normalized to their two endpoints, dimension-2
        ones to their CCW hull.

    - Usage Notes
      - Empty polytopes are allowed and arise from disjoint intersections.
    """

    vertices: Tuple[Vector, ...]
    dimension: int

    @classmethod
    def from_points(cls, points: Sequence[Sequence], dimension: Optional[int] = None) -> "Polytope":
        pts = [vec(p) for p in points]
        if dimension is None:
            if not pts:
                raise ValidationError("cannot infer the dimension of an empty polytope")
            dimension = len(pts[0])
        if any(len(p) != dimension for p in pts):
            raise ValidationError("polytope vertices have inconsistent dimensions")
        if dimension == 1 and pts:
            lo, hi = min(pts), max(pts)
            pts = [lo] if lo == hi else [lo, hi]
        elif dimension == 2:
            pts = convex_hull_2d(pts)
        else:
            pts = sorted(set(pts))
        return cls(vertices=tuple(pts), dimension=dimension)

    @classmethod
    def box(cls, center: Sequence, radius) -> "Polytope":
        # 以 center 为中心、半宽 radius 的坐标方体
        center = vec(center)
        radius = Fraction(radius)
        corners = [[]]
        for c in center:
            corners = [p + [c - radius] for p in corners] + [p + [c + radius] for p in corners]
        return cls.from_points(corners, len(center))

    def is_empty(self) -> bool:
        return not self.vertices

    def translate(self, offset: Sequence) -> "Polytope":
        return Polytope.from_points([add(v, offset) for v in self.vertices], self.dimension)

    def contains_point(self, point: Sequence) -> bool:
        point = vec(point)
        if self.is_empty():
            return False
        if self.dimension == 0:
            return True
        if self.dimension == 1:
            return self.vertices[0][0] <= point[0] <= self.vertices[-1][0]
        if self.dimension == 2:
            return _in_polygon(point, self.vertices)
        return _lp_contains(self.vertices, point)

    def contains(self, other: "Polytope") -> bool:
        return all(self.contains_point(v) for v in other.vertices)

    def min_pairing(self, direction: Sequence) -> Fraction:
        if self.is_empty():
            raise ValidationError("linear functional over an empty polytope")
        return min(dot(v, direction) for v in self.vertices)

    def to_dict(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}


def intersect_all(polytopes: Sequence[Polytope]) -> "Region":
    """Intersection of polytopes as a Region (exact vertices for n <= 2)."""
    if not polytopes:
        raise ValidationError("intersection of no polytopes")
    n = polytopes[0].dimension
    if n == 0:
        return Region(dimension=0, vertices=((),), pieces=tuple(polytopes))
    if n == 1:
        if any(p.is_empty() for p in polytopes):
            return Region(dimension=1, vertices=(), pieces=tuple(polytopes))
        lo = max(p.vertices[0][0] for p in polytopes)
        hi = min(p.vertices[-1][0] for p in polytopes)
        if lo > hi:
            return Region(dimension=1, vertices=(), pieces=tuple(polytopes))
        verts = ((lo,),) if lo == hi else ((lo,), (hi,))
        return Region(dimension=1, vertices=verts, pieces=tuple(polytopes))
    if n == 2:
        current: List[Vector] = list(polytopes[0].vertices)
        for other in polytopes[1:]:
            current = clip_polygon(current, list(other.vertices))
            if not current:
                break
        return Region(dimension=2, vertices=tuple(current), pieces=tuple(polytopes))
    return Region(dimension=n, vertices=None, pieces=tuple(polytopes))


@dataclass(frozen=True)
class Region:
    """
    Intersection of finitely many polytopes.

    - Behavior
      - For n <= 2 the intersection's vertices are known exactly.
      - For n >= 3 queries solve linear programs over the pieces.
    """

    dimension: int
    vertices: Optional[Tuple[Vector, ...]]
    pieces: Tuple[Polytope, ...]

    def is_empty(self) -> bool:
        if self.vertices is not None:
            return not self.vertices
        return _lp_min(self.pieces, tuple(Fraction(0) for _ in range(self.dimension))) is None

    def min_pairing(self, direction: Sequence) -> Fraction:
        if self.dimension == 0:
            return Fraction(0)
        if self.vertices is not None:
            if not self.vertices:
                raise ValidationError("linear functional over an empty region")
            return min(dot(v, direction) for v in self.vertices)
        value = _lp_min(self.pieces, vec(direction))
        if value is None:
            raise ValidationError("linear functional over an empty region")
        return value

    def contains_point(self, point: Sequence) -> bool:
        return all(p.contains_point(point) for p in self.pieces)


# ----------------------------------------------------------------- Linear programming


def _lp_contains(vertices: Sequence[Vector], point: Vector) -> bool:
    _note_lp()
    matrix = np.array([[float(c) for c in v] for v in vertices]).T
    k = matrix.shape[1]
    a_eq = np.vstack([matrix, np.ones((1, k))])
    b_eq = np.array([float(c) for c in point] + [1.0])
    result = linprog(np.zeros(k), A_eq=a_eq, b_eq=b_eq, bounds=[(0, None)] * k, method="highs")
    return bool(result.status == 0)


def _lp_min(pieces: Sequence[Polytope], direction: Vector) -> Optional[Fraction]:
    # 变量为各多面体的凸组合系数；约束各凸组合点相等，目标为第一个点与 direction 的内积
    _note_lp()
    mats = [np.array([[float(c) for c in v] for v in p.vertices]).T for p in pieces]
    sizes = [m.shape[1] for m in mats]
    total = sum(sizes)
    n = len(direction)
    offsets = np.cumsum([0] + sizes)
    rows = []
    rhs = []
    for idx, size in enumerate(sizes):
        row = np.zeros(total)
        row[offsets[idx]:offsets[idx] + size] = 1.0
        rows.append(row)
        rhs.append(1.0)
    for idx in range(1, len(mats)):
        for coord in range(n):
            row = np.zeros(total)
            row[offsets[0]:offsets[0] + sizes[0]] = mats[0][coord]
            row[offsets[idx]:offsets[idx] + sizes[idx]] = -mats[idx][coord]
            rows.append(row)
            rhs.append(0.0)
    cost = np.zeros(total)
    cost[offsets[0]:offsets[0] + sizes[0]] = np.array([float(c) for c in direction]) @ mats[0]
    result = linprog(cost, A_eq=np.array(rows), b_eq=np.array(rhs), bounds=[(0, None)] * total, method="highs")
    if result.status != 0:
        return None
    return Fraction(float(result.fun)).limit_denominator(_LP_DENOMINATOR)
