"""
Valuation barcodes of truncated morphism complexes.

Responsibilities
  - Eliminate each mu1 matrix over k[T^{1/D}]/(T^E) with global
    minimum-valuation pivots and record the pivot valuations.
  - Turn pivots into bars: a pivot of valuation e > 0 in d_t gives a finite
    bar [0, e) in degree t + 1; unmatched basis directions give full bars
    [0, E).
  - Flag pivots whose valuation exceeds E/2 or is negative, and lattice
    leakage out of the box.

Usage Context
  - `mirror sheaf cohomology` and the Tate curve checks.

Limitations
  - Full bars approximate Betti numbers over the Novikov field; they are
    only as good as the precision window and lattice box allow.
"""
# 说明：截断态射复形的赋值条形码（barcode）。
# 职责：
# - eliminate：全局最小赋值主元消去，清列后删去主元行列，返回主元赋值序列
# - cohomology_barcode：对每个次数的 μ¹ 矩阵消去；e > 0 的主元给出 t+1 次的有限条 [0, e)，
#   其余基方向给出 [0, E) 全窗口条
# - Barcode：按次数的条形码、警告列表、JSON 导出 {degree: [["birth","death"], ...]}
# 约定：
# - 所有运算在 k[T^{1/D}]/(T^E) 中进行：每次更新后把精度重置为 E

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from mirlib.category.hom_complex import hom_complex
from mirlib.category.sheaf import TwistedSheaf
from mirlib.core.affinoid.cocycle import TwistingCocycle
from mirlib.core.novikov.scalar import INF, NovikovScalar
from mirlib.core.utils.logging import get_logger
from mirlib.core.utils.serialization import format_number
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)

Bar = Tuple[Fraction, Fraction]


@dataclass
class Barcode:
    """
    Bars per cohomological degree inside the window [0, E).

    - Configuration
      - window: E; bars: degree -> sorted list of (birth, death).
      - warnings: precision and window caveats met while computing.
    """

    window: Fraction
    bars: Dict[int, List[Bar]] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)

    def degrees(self) -> List[int]:
        return sorted(t for t, items in self.bars.items() if items)

    def full_bars(self, degree: int) -> List[Bar]:
        return [bar for bar in self.bars.get(degree, []) if bar[1] == self.window]

    def finite_bars(self, degree: int) -> List[Bar]:
        return [bar for bar in self.bars.get(degree, []) if bar[1] < self.window]

    def betti(self) -> Dict[int, int]:
        """Count of full-window bars per degree."""
        return {t: len(self.full_bars(t)) for t in self.degrees() if self.full_bars(t)}

    def to_dict(self) -> Dict[str, List[List[str]]]:
        return {
            str(t): [[format_number(birth), format_number(death)] for birth, death in self.bars[t]]
            for t in self.degrees()
        }

    def to_report(self) -> CheckReport:
        report = CheckReport(name="barcode")
        for message in self.warnings:
            report.annotate("warning", message, code="precision")
        report.details["window"] = format_number(self.window)
        report.details["barcode"] = self.to_dict()
        report.details["betti"] = {str(t): n for t, n in self.betti().items()}
        return report


# ----------------------------------------------------------------- Elimination


def _in_window(value: NovikovScalar, window: Fraction) -> NovikovScalar:
    return NovikovScalar.from_terms(value.terms, window, value.field)


def _exact(value: NovikovScalar) -> NovikovScalar:
    return NovikovScalar.from_terms(value.terms, INF, value.field)


def eliminate(matrix: np.ndarray, window: Fraction) -> List[Fraction]:
    """
    Pivot valuations of a matrix over k[T^{1/D}]/(T^window).

    The pivot is always a global minimum-valuation entry, so clearing its
    column by row operations leaves the rest of its row removable by column
    operations without touching other entries.
    """
    rows, cols = matrix.shape
    work = [[_in_window(matrix[r, c], window) for c in range(cols)] for r in range(rows)]
    live_rows, live_cols = list(range(rows)), list(range(cols))
    pivots: List[Fraction] = []
    while live_rows and live_cols:
        best: Optional[Tuple[Fraction, int, int]] = None
        for r in live_rows:
            for c in live_cols:
                value = work[r][c].val()
                if value != INF and (best is None or value < best[0]):
                    best = (value, r, c)
        if best is None:
            break
        exponent, p, q = best
        pivots.append(exponent)
        inverse = work[p][q].shift(-exponent).invert()
        for r in live_rows:
            if r == p or work[r][q].is_zero():
                continue
            # 该行的倍数 a / pivot 只在 T^{E-e} 内已知；乘以赋值 >= e 的主元行后恢复到 T^E
            multiplier = work[r][q]
            for c in live_cols:
                if c == q or work[p][c].is_zero():
                    continue
                factor = _exact(inverse * work[p][c].shift(-exponent))
                work[r][c] = _in_window(work[r][c] - multiplier * factor, window)
            work[r][q] = NovikovScalar.zero(window, multiplier.field)
        live_rows.remove(p)
        live_cols.remove(q)
    return pivots


# ----------------------------------------------------------------- Barcodes


def cohomology_barcode(
    source: TwistedSheaf,
    target: TwistedSheaf,
    cocycle: TwistingCocycle,
    *,
    precision: Optional[Any] = None,
    denominator: Optional[int] = None,
    radius: Optional[int] = None,
    jobs: Optional[int] = None,
) -> Barcode:
    """Barcode of hom(source, target) under mu1 at the given window."""
    complex_ = hom_complex(source, target, radius=radius, precision=precision, denominator=denominator)
    window = complex_.precision
    barcode = Barcode(window=window)
    degrees = complex_.degrees()
    if not degrees:
        return barcode

    ranks: Dict[int, int] = {}
    leaked = 0
    for t in range(degrees[0], degrees[-1] + 1):
        if not complex_.dimension(t) or not complex_.dimension(t + 1):
            ranks[t] = 0
            continue
        matrix, dropped = complex_.differential(t, cocycle, jobs=jobs)
        leaked += dropped
        pivots = eliminate(matrix, window)
        ranks[t] = len(pivots)
        for e in pivots:
            if e < 0:
                barcode.warnings.append(f"pivot of negative valuation {format_number(e)} in degree {t}")
            elif e > window / 2:
                barcode.warnings.append(
                    f"pivot valuation {format_number(e)} in degree {t} exceeds half the window {format_number(window)}"
                )
            if e > 0:
                barcode.bars.setdefault(t + 1, []).append((Fraction(0), e))

    for t in degrees:
        full = complex_.dimension(t) - ranks.get(t, 0) - ranks.get(t - 1, 0)
        barcode.bars.setdefault(t, []).extend([(Fraction(0), window)] * full)
    for t in barcode.bars:
        barcode.bars[t].sort()
    if leaked:
        barcode.warnings.append(f"window leakage: {leaked} terms fell outside the lattice box of radius {complex_.radius}")
    for message in barcode.warnings:
        _logger.warning(message)
    _logger.info("barcode %s", barcode.to_dict())
    return barcode
