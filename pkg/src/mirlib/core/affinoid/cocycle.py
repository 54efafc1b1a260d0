"""
The twisting cocycle alpha^v and its Cech cocycle check.

alpha_ijk = (-1)^{v_ijk} T^{g(q_k)} z_{q_k}^{dg} with g = f_ij + f_jk - f_ik,
stored exactly in the chart of the chain (i, j, k). Degenerate index triples
evaluate to 1.
"""
# 说明：扭曲上闭链 α^v 的构造、取值与上闭链检查。
# 职责：
# - twisting_cocycle：逐个三元链计算 α_ijk（精确单项式，精度 +∞）
# - TwistingCocycle.value / in_chart：含重复指标时取 1；可限制到更大的链图卡
# - alpha_between：简写 α^v_{J,I} = α_{min I, max I, max J}（要求 max I = min J）
# - cocycle_check：对每个 4 链在图卡 (i,j,k,l) 中比较 α_jkl·α_ijl 与 α_ikl·α_ijk

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from mirlib.core.affine.atlas import ChartAtlas, Triple, sign_coboundary, triples_of
from mirlib.core.affinoid.element import AffinoidElement
from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.logging import get_logger
from mirlib.core.utils.rational import add, is_integral, sub, to_int_vector
from mirlib.core.utils.serialization import format_number
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)


def _chart_of(indices: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(set(indices)))


@dataclass
class TwistingCocycle:
    """
    alpha^v as a table of exact chart-ring units.

    - Configuration
      - atlas: the ChartAtlas the cocycle was built from.
      - entries: (i, j, k) with i < j < k -> AffinoidElement in chart (i, j, k).

    - Behavior
      - value() returns 1 for repeated indices and raises on non-chains.
      - in_chart() restricts a value to a larger chain.
    """

    atlas: ChartAtlas
    entries: Dict[Triple, AffinoidElement] = field(default_factory=dict)

    def value(self, i: int, j: int, k: int) -> AffinoidElement:
        if not i <= j <= k:
            raise ValidationError(f"alpha indices must be ordered, got {(i, j, k)}")
        if i == j or j == k:
            return AffinoidElement.constant(self.atlas, _chart_of((i, j, k)), 1)
        try:
            return self.entries[(i, j, k)]
        except KeyError as exc:
            raise ValidationError(f"no cocycle value on {(i, j, k)}", location=(i, j, k)) from exc

    def in_chart(self, i: int, j: int, k: int, chart: Sequence[int]) -> AffinoidElement:
        return self.value(i, j, k).restrict(tuple(chart))

    def with_entry(self, triple: Triple, element: AffinoidElement) -> "TwistingCocycle":
        entries = dict(self.entries)
        entries[tuple(triple)] = element
        return TwistingCocycle(atlas=self.atlas, entries=entries)

    def monomial_data(self, triple: Triple) -> Optional[Tuple[int, Fraction, Tuple[int, ...]]]:
        # (符号, λ, A)；非单项式时返回 None
        element = self.entries[tuple(triple)]
        if element.monomial_count() != 1:
            return None
        lam, a, c = element.terms[0]
        sign = 0 if c == self.atlas.base_field.one() else 1
        return sign, lam, a

    def to_dict(self) -> List[Dict[str, Any]]:
        return [
            {"triple": list(t), "value": self.entries[t].to_json()}
            for t in sorted(self.entries)
        ]


def twisting_cocycle(atlas: ChartAtlas) -> TwistingCocycle:
    """Build alpha^v on every ordered triple of the atlas."""
    base = atlas.base_field
    entries: Dict[Triple, AffinoidElement] = {}
    for i, j, k in triples_of(atlas):
        f_ij, f_jk, f_ik = atlas.section(i, j), atlas.section(j, k), atlas.section(i, k)
        differential = sub(add(f_ij.gradient, f_jk.gradient), f_ik.gradient)
        if not is_integral(differential):
            raise ValidationError("non-integral cocycle differential", location=(i, j, k))
        # g(q_k)：f_ij 在 q_k = q_j + d(j,k) 处取值
        exponent = f_ij.value_at(atlas.offset(j, k)) + f_jk.value_at_target - f_ik.value_at_target
        entries[(i, j, k)] = AffinoidElement.monomial(
            atlas, (i, j, k), exponent, to_int_vector(differential), base.sign(atlas.sign(i, j, k))
        )
    _logger.debug("built twisting cocycle on %d triples of %s", len(entries), atlas.name)
    return TwistingCocycle(atlas=atlas, entries=entries)


def alpha_between(
    cocycle: TwistingCocycle,
    upper: Sequence[int],
    lower: Sequence[int],
    chart: Optional[Sequence[int]] = None,
) -> AffinoidElement:
    """alpha^v_{J,I} = alpha_{min I, max I, max J} for chains with max I = min J."""
    upper, lower = tuple(upper), tuple(lower)
    if lower[-1] != upper[0]:
        raise ValidationError(f"chains {list(lower)} and {list(upper)} do not meet", location=lower + upper)
    value = cocycle.value(lower[0], lower[-1], upper[-1])
    return value if chart is None else value.restrict(tuple(chart))


def cocycle_check(cocycle: TwistingCocycle, atlas: Optional[ChartAtlas] = None) -> CheckReport:
    """Compare alpha_jkl alpha_ijl with alpha_ikl alpha_ijk on every 4-chain."""
    atlas = atlas or cocycle.atlas
    report = CheckReport(name="cocycle")
    quads = sorted({q for s in atlas.simplices for q in itertools.combinations(s, 4)})
    for quad in quads:
        i, j, k, l = quad
        lhs = cocycle.in_chart(j, k, l, quad) * cocycle.in_chart(i, j, l, quad)
        rhs = cocycle.in_chart(i, k, l, quad) * cocycle.in_chart(i, j, k, quad)
        if lhs == rhs:
            continue
        witness = _witness(lhs, rhs)
        if sign_coboundary(atlas, quad) != 0:
            report.fail("sign_failure", "sign cochain is not a cocycle here", location=quad, witness=witness)
        else:
            report.fail("cocycle_failure", "alpha is not a cocycle on this chain", location=quad, witness=witness)
    report.details["checked_chains"] = len(quads)
    report.details["failing_chains"] = [list(loc) for loc in report.failing_locations()]
    return report


def _witness(lhs: AffinoidElement, rhs: AffinoidElement) -> Dict[str, Any]:
    # 单项式情形下给出加性见证 (g_jkl − g_ikl + g_ijl − g_ijk)(q_l) 与微分之差
    if lhs.monomial_count() == 1 and rhs.monomial_count() == 1:
        (la, aa, ca), (lb, ab, cb) = lhs.terms[0], rhs.terms[0]
        return {
            "energy": format_number(la - lb),
            "differential": [x - y for x, y in zip(aa, ab)],
            "sign_flip": ca != cb,
        }
    return {"lhs": lhs.format(), "rhs": rhs.format()}
