"""Matrices over a chart ring, stored as numpy object arrays of AffinoidElement."""
# 说明：图卡环上的矩阵（numpy object 数组，元素为 AffinoidElement）。
# 职责：
# - ChartMatrix：零矩阵、加减、数乘、矩阵乘法、限制到更大的链、按源次数的对角符号 ε
# - from_json / to_json：矩阵项为 {"t","z","c"} 单项式列表
# 约定：
# - 形状 (目标秩, 源秩)；所有项位于同一图卡

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Any, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from mirlib.core.affine.atlas import Chain, ChartAtlas
from mirlib.core.affinoid.element import AffinoidElement
from mirlib.core.exceptions import ValidationError
from mirlib.core.novikov.scalar import INF, Precision


@dataclass(frozen=True, eq=False)
class ChartMatrix:
    """
    Matrix with entries in the ring of one chart.

    - Configuration
      - atlas / chart: where the entries live.
      - entries: numpy object array of AffinoidElement, shape (rows, cols).

    - Behavior
      - Products and sums require equal charts; use restrict() first.
    """

    atlas: ChartAtlas
    chart: Chain
    entries: np.ndarray

    # ------------------------------------------------------------------ constructors

    @classmethod
    def zeros(cls, atlas: ChartAtlas, chart: Sequence[int], rows: int, cols: int, precision: Any = INF) -> "ChartMatrix":
        chart = tuple(chart)
        entries = np.empty((rows, cols), dtype=object)
        for r in range(rows):
            for c in range(cols):
                entries[r, c] = AffinoidElement.zero(atlas, chart, precision)
        return cls(atlas=atlas, chart=chart, entries=entries)

    @classmethod
    def from_rows(cls, atlas: ChartAtlas, chart: Sequence[int], rows: Sequence[Sequence[AffinoidElement]], cols: int) -> "ChartMatrix":
        chart = tuple(chart)
        entries = np.empty((len(rows), cols), dtype=object)
        for r, row in enumerate(rows):
            if len(row) != cols:
                raise ValidationError(f"row {r} has {len(row)} entries, expected {cols}", location=chart)
            for c, value in enumerate(row):
                if not isinstance(value, AffinoidElement):
                    value = AffinoidElement.constant(atlas, chart, value)
                entries[r, c] = value if value.chart == chart else value.restrict(chart)
        return cls(atlas=atlas, chart=chart, entries=entries)

    @classmethod
    def identity(cls, atlas: ChartAtlas, chart: Sequence[int], size: int) -> "ChartMatrix":
        out = cls.zeros(atlas, chart, size, size)
        for k in range(size):
            out.entries[k, k] = AffinoidElement.constant(atlas, tuple(chart), 1)
        return out

    # ------------------------------------------------------------------ shape

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries.flat)

    def nonzero(self) -> Iterable[Tuple[int, int, AffinoidElement]]:
        rows, cols = self.shape
        for r in range(rows):
            for c in range(cols):
                if not self.entries[r, c].is_zero():
                    yield r, c, self.entries[r, c]

    def valuation(self) -> Precision:
        values = [e.polytope_valuation() for e in self.entries.flat]
        return min(values) if values else INF

    # ------------------------------------------------------------------ arithmetic

    def _map(self, fn) -> "ChartMatrix":
        entries = np.empty(self.shape, dtype=object)
        for index, value in np.ndenumerate(self.entries):
            entries[index] = fn(value)
        return ChartMatrix(atlas=self.atlas, chart=self.chart, entries=entries)

    def _check(self, other: "ChartMatrix") -> None:
        if self.chart != other.chart:
            raise ValidationError(f"chart mismatch: {list(self.chart)} vs {list(other.chart)}", location=self.chart)

    def __add__(self, other: "ChartMatrix") -> "ChartMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValidationError(f"shape mismatch: {self.shape} vs {other.shape}", location=self.chart)
        entries = np.empty(self.shape, dtype=object)
        for index, value in np.ndenumerate(self.entries):
            entries[index] = value + other.entries[index]
        return ChartMatrix(atlas=self.atlas, chart=self.chart, entries=entries)

    def __neg__(self) -> "ChartMatrix":
        return self._map(lambda e: -e)

    def __sub__(self, other: "ChartMatrix") -> "ChartMatrix":
        return self + (-other)

    def __matmul__(self, other: "ChartMatrix") -> "ChartMatrix":
        self._check(other)
        rows, inner = self.shape
        inner_b, cols = other.shape
        if inner != inner_b:
            raise ValidationError(f"cannot compose {self.shape} with {other.shape}", location=self.chart)
        out = ChartMatrix.zeros(self.atlas, self.chart, rows, cols)
        for r in range(rows):
            for c in range(cols):
                products = [self.entries[r, k] * other.entries[k, c] for k in range(inner)]
                if products:
                    out.entries[r, c] = reduce(lambda a, b: a + b, products)
        return out

    def times(self, element: AffinoidElement) -> "ChartMatrix":
        # 左乘图卡环元素（例如 α^v）
        return self._map(lambda e: element * e)

    def signed(self, sign: int) -> "ChartMatrix":
        return self if sign % 2 == 0 else -self

    def source_signs(self, degrees: Sequence[int]) -> "ChartMatrix":
        """Right multiplication by the diagonal (-1)^{deg} of the source module."""
        entries = self.entries.copy()
        for c, degree in enumerate(degrees):
            if degree % 2:
                for r in range(self.shape[0]):
                    entries[r, c] = -entries[r, c]
        return ChartMatrix(atlas=self.atlas, chart=self.chart, entries=entries)

    def restrict(self, chart: Sequence[int]) -> "ChartMatrix":
        union = tuple(sorted(set(self.chart) | set(chart)))
        if union == self.chart:
            return self
        moved = self._map(lambda e: e.restrict(union))
        return ChartMatrix(atlas=self.atlas, chart=union, entries=moved.entries)

    def truncate(self, precision: Any) -> "ChartMatrix":
        return self._map(lambda e: e.truncate(precision))

    def equals_up_to(self, other: "ChartMatrix", precision: Optional[Any] = None) -> bool:
        difference = self - other
        if precision is not None:
            difference = difference.truncate(precision)
        return difference.is_zero()

    # ------------------------------------------------------------------ JSON

    def to_json(self) -> List[List[List[Mapping[str, Any]]]]:
        return [[self.entries[r, c].terms_json() for c in range(self.shape[1])] for r in range(self.shape[0])]

    @classmethod
    def from_json(
        cls,
        atlas: ChartAtlas,
        chart: Sequence[int],
        data: Sequence[Sequence[Sequence[Mapping[str, Any]]]],
        cols: int,
        precision: Any = INF,
    ) -> "ChartMatrix":
        chart = tuple(chart)
        rows = [
            [AffinoidElement.from_terms(atlas, chart, [(t["t"], t["z"], t.get("c", 1)) for t in entry], precision) for entry in row]
            for row in data
        ]
        return cls.from_rows(atlas, chart, rows, cols)

    def describe(self) -> List[List[str]]:
        return [[self.entries[r, c].format() for c in range(self.shape[1])] for r in range(self.shape[0])]

