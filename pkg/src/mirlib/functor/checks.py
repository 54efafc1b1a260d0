"""
Composition identity and the aggregate functor check.

Responsibilities
  - FloerHomotopy: the degree -1 map h of CF(L, L') given by annulus counts.
  - composition_check: P(C(a)) - (-1)^{n(n-1)/2} a - mu1 h(a) - h mu1(a)
    on every Floer generator.
  - build_functor / functor_check: assemble sheaves, Floer complex, C, P
    and h from one ledger and merge every residual report.

Usage Context
  - `mirror functor check` and the identity-ledger integration tests.
"""
# 说明：复合恒等式与函子检查汇总。
# 职责：
# - FloerHomotopy：annulus 计数给出的 h（次数 −1）
# - composition_check：𝒫𝒞(a) − (−1)^{n(n−1)/2} a − μ¹h(a) − hμ¹(a) 逐生成元判零
# - build_functor：由账本构造层、Floer 复形、𝒞、𝒫、h；functor_check 合并全部报告

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from mirlib.category.sheaf import TwistedSheaf
from mirlib.core.affine.atlas import ChartAtlas
from mirlib.core.affinoid.cocycle import TwistingCocycle, twisting_cocycle
from mirlib.core.novikov.scalar import INF, NovikovScalar
from mirlib.core.utils.logging import get_logger
from mirlib.core.utils.performance import Timer
from mirlib.functor.ainfty import ainfty_functor_check, ainfty_relations_check
from mirlib.functor.floer import FloerChain, FloerComplex, floer_complex
from mirlib.functor.intersections import SOURCE, TARGET, IntersectionData
from mirlib.functor.ledger import (
    FormalCountLedger,
    LedgerEntry,
    LedgerFamily,
    admissible_entries,
    ledger_validate,
)
from mirlib.functor.maps import (
    CechMap,
    FloerMap,
    cech_chain_check,
    cech_map_from_counts,
    floer_chain_check,
    floer_map_from_counts,
    resolve_window,
    sheaf_from_counts,
)
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)


@dataclass
class FloerHomotopy:
    """Linear map of CF(L, L') from annulus counts (input -> output)."""

    entries: List[LedgerEntry] = field(default_factory=list)
    base_field: Any = None

    def apply(self, chain: FloerChain) -> FloerChain:
        out = FloerChain.zero(chain.base_field)
        for entry in self.entries:
            coefficient = chain.coefficient(entry.label("input"))
            if coefficient.is_zero():
                continue
            value = NovikovScalar.monomial(entry.count, entry.energy, INF, chain.base_field) * coefficient
            out = out + FloerChain({entry.label("output"): value}, chain.base_field)
        return out

    def __call__(self, chain: FloerChain) -> FloerChain:
        return self.apply(chain)


def composition_sign(dimension: int) -> int:
    """Exponent of -1 in the identity P o C is homotopic to."""
    return (dimension * (dimension - 1) // 2) % 2


def composition_check(
    cech: CechMap,
    pmap: FloerMap,
    homotopy: Optional[FloerHomotopy] = None,
    *,
    precision: Optional[Any] = None,
) -> CheckReport:
    window = resolve_window(precision)
    complex_ = cech.complex
    dimension = cech.atlas.dimension
    sign = composition_sign(dimension)
    homotopy = homotopy or FloerHomotopy()
    report = CheckReport(name="composition")
    for label in complex_.labels():
        generator = complex_.basis(label)
        image = pmap(cech.component((label,)))
        defect = image - generator.signed(sign)
        defect = defect - complex_.mu1(homotopy(generator)) - homotopy(complex_.mu1(generator))
        defect = defect.truncate(window)
        if defect.is_zero():
            continue
        report.fail(
            "composition",
            f"P o C differs from {'-' if sign else ''}Id up to homotopy on {label}",
            location=(label,),
            witness={"generator": label, "image": image.to_dict(), "defect": defect.to_dict()},
        )
    report.details["sign"] = -1 if sign else 1
    report.details["generators"] = len(complex_.generators)
    return report


# ----------------------------------------------------------------- Aggregate


@dataclass
class FunctorData:
    """Everything built from one ledger, with the reports met along the way."""

    atlas: ChartAtlas
    cocycle: TwistingCocycle
    source: TwistedSheaf
    target: TwistedSheaf
    complex: FloerComplex
    cech: CechMap
    pmap: FloerMap
    homotopy: FloerHomotopy
    reports: Dict[str, CheckReport] = field(default_factory=dict)


def build_functor(
    ledger: FormalCountLedger,
    intersections: IntersectionData,
    atlas: ChartAtlas,
    cocycle: Optional[TwistingCocycle] = None,
    *,
    precision: Optional[Any] = None,
) -> FunctorData:
    cocycle = cocycle if cocycle is not None else twisting_cocycle(atlas)
    reports = {"ledger": ledger_validate(ledger, intersections, atlas)}
    source, reports["sheaf"] = sheaf_from_counts(
        ledger, intersections, atlas, cocycle, brane=SOURCE, precision=precision, name="F(L)"
    )
    if intersections.self_pair:
        target = source
    else:
        target, target_report = sheaf_from_counts(
            ledger, intersections, atlas, cocycle, brane=TARGET, precision=precision, name="F(L')"
        )
        target_report.name = "sheaf_target"
        reports["sheaf_target"] = target_report
    complex_ = floer_complex(ledger, intersections, atlas)
    homotopy = FloerHomotopy(
        entries=admissible_entries(ledger, LedgerFamily.ANNULUS, intersections, atlas), base_field=ledger.base_field
    )
    return FunctorData(
        atlas=atlas,
        cocycle=cocycle,
        source=source,
        target=target,
        complex=complex_,
        cech=cech_map_from_counts(ledger, intersections, complex_, source, target),
        pmap=floer_map_from_counts(ledger, intersections, complex_, source, target),
        homotopy=homotopy,
        reports=reports,
    )


def functor_check(
    ledger: FormalCountLedger,
    intersections: IntersectionData,
    atlas: ChartAtlas,
    cocycle: Optional[TwistingCocycle] = None,
    *,
    precision: Optional[Any] = None,
    radius: Optional[int] = None,
    denominator: Optional[int] = None,
    max_arity: Optional[int] = None,
    jobs: Optional[int] = None,
) -> CheckReport:
    """Every residual of the functor construction, merged into one report."""
    with Timer() as timer:
        data = build_functor(ledger, intersections, atlas, cocycle, precision=precision)
        reports = dict(data.reports)
        reports["cech"] = cech_chain_check(data.cech, data.cocycle, precision=precision)
        reports["floer_map"] = floer_chain_check(
            data.pmap, data.cocycle, precision=precision, radius=radius, denominator=denominator
        )
        reports["composition"] = composition_check(data.cech, data.pmap, data.homotopy, precision=precision)
        reports["ainfty_relations"] = ainfty_relations_check(
            data.complex, max_arity=max_arity, precision=precision, jobs=jobs
        )
        reports["ainfty_functor"] = ainfty_functor_check(
            data.cech, data.cocycle, max_arity=max_arity, precision=precision, jobs=jobs
        )
    report = CheckReport(name="functor")
    for sub in reports.values():
        report.merge(sub)
    report.details["status"] = {name: "PASS" if sub.passed else "FAIL" for name, sub in reports.items()}
    _logger.info("functor check finished in %.3fs: %s", timer.elapsed, report.details["status"])
    return report
