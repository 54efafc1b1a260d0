"""Exact evaluation of the Adams path in the standard simplex."""
# 说明：Adams 路径的分段线性公式（精确有理数）。
# 约定：
# - r = (r_1, …, r_{d-1}) ∈ [0,1]^{d-1}，补 r_d = 1；s ∈ [0, Σ r_i + 1]
# - p_0 = e_0，p_j = (1 − r_j) p_{j-1} + r_j e_j；第 j 段上 s_j = s − S_{j-1} ∈ [0, r_j]

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.param_validation import as_rational, validate_arguments

Point = Tuple[Fraction, ...]


def _check_parameters(r: Sequence[Any]) -> List[Fraction]:
    values = [as_rational(x) for x in r]
    for x in values:
        if x < 0 or x > 1:
            raise ValidationError(f"Adams parameter {x} outside [0, 1]")
    return values + [Fraction(1)]


def vertex_times(r: Sequence[Any]) -> List[Fraction]:
    """Partial sums S_0 = 0, S_j = r_1 + ... + r_j (with r_d = 1); the path sits at p_j when s = S_j."""
    times = [Fraction(0)]
    for x in _check_parameters(r):
        times.append(times[-1] + x)
    return times


def _basis(size: int, index: int) -> List[Fraction]:
    point = [Fraction(0)] * size
    point[index] = Fraction(1)
    return point


def _blend(a: Sequence[Fraction], b: Sequence[Fraction], t: Fraction) -> List[Fraction]:
    return [(1 - t) * x + t * y for x, y in zip(a, b)]


@validate_arguments({"s": as_rational})
def adams_path_eval(r: Sequence[Any], s: Any) -> Point:
    """
    Point of the d-simplex reached at time s by the path with parameters r.

    The simplex dimension is d = len(r) + 1; the result has d + 1 coordinates,
    all nonnegative and summing to 1.
    """
    params = _check_parameters(r)
    times = vertex_times(r)
    if s < 0 or s > times[-1]:
        raise ValidationError(f"path time {s} outside [0, {times[-1]}]")
    size = len(params) + 1
    anchor = _basis(size, 0)
    for j, r_j in enumerate(params, start=1):
        if s <= times[j]:
            local = s - times[j - 1]
            return tuple(_blend(anchor, _basis(size, j), local))
        anchor = _blend(anchor, _basis(size, j), r_j)
    return tuple(anchor)  # pragma: no cover


def face_inclusion(point: Sequence[Fraction], skipped: int) -> Point:
    # Δ_{d-1} → Δ_d：在位置 skipped 插入坐标 0
    values = list(point)
    values.insert(skipped, Fraction(0))
    return tuple(values)
