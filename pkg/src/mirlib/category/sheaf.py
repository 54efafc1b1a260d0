"""
Twisted sheaves of perfect modules on the chart atlas.

Responsibilities
  - Hold the graded free modules F(i) and the structure maps F_I over the
    chart ring of I, checking shapes and degree bookkeeping on construction.
  - Evaluate the defining quadratic equation chain by chain and report the
    residual of every chain where it fails at the working precision.
  - Read and write the sheaf JSON format.

Usage Context
  - Objects of the DG category; inputs of hom_complex, mu1 and the barcode.

Limitations
  - Missing structure maps are zero; chains are bounded by the simplices of
    the atlas, so the check is exhaustive.
"""
# 说明：图册上的扭曲层（分次自由模 F(i) 与结构映射 F_I）。
# 职责：
# - Generator / TwistedSheaf：构造时检查矩阵形状与次数 deg(行) = deg(列) + 2 − |I|
# - sheaf_validate：逐链计算 Σ_{内点} (−1)^{p+1} F_{I∖i} ε − Σ_i α^v F_{I≥i} F_{I≤i}，在精度 E 下判零
# - sheaf_from_dict / sheaf_to_dict / load_sheaf / save_sheaf：sheaf.json 读写
# 约定：
# - F_I 的图卡为链 I 本身（基点 q_{max I}）；内层因子均先限制到图卡 I

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from mirlib.category.conventions import internal_structure_map
from mirlib.category.matrix import ChartMatrix
from mirlib.core.affine.atlas import Chain, ChartAtlas
from mirlib.core.affinoid.cocycle import TwistingCocycle
from mirlib.core.exceptions import ValidationError
from mirlib.core.novikov.scalar import INF
from mirlib.core.utils.config import get_config
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.core.utils.param_validation import as_extended_rational
from mirlib.core.utils.serialization import format_number
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)


@dataclass(frozen=True)
class Generator:
    label: str
    degree: int


@dataclass(eq=False)
class TwistedSheaf:
    """
    An (alpha^v)^{-1}-twisted sheaf of perfect modules.

    - Configuration
      - atlas: the ChartAtlas.
      - modules: vertex -> tuple of Generator (the graded free module F(i)).
      - maps: chain -> ChartMatrix F_I of shape rank F(max I) x rank F(min I).
      - name: label used in reports.

    - Behavior
      - Construction rejects unknown chains, wrong shapes and entries whose
        degree bookkeeping is off.
      - structure_map() returns zero matrices for missing chains.
    """

    atlas: ChartAtlas
    modules: Dict[int, Tuple[Generator, ...]]
    maps: Dict[Chain, ChartMatrix] = field(default_factory=dict)
    name: str = "sheaf"

    def __post_init__(self) -> None:
        self.modules = {v: tuple(self.modules.get(v, ())) for v in self.atlas.vertex_ids}
        normalized = {}
        for chain, matrix in self.maps.items():
            chain = tuple(chain)
            self._check_map(chain, matrix)
            normalized[chain] = matrix
        self.maps = normalized

    def _check_map(self, chain: Chain, matrix: ChartMatrix) -> None:
        if not self.atlas.is_chain(chain):
            raise ValidationError(f"structure map on non-chain {list(chain)}", location=chain)
        if matrix.chart != chain:
            raise ValidationError(f"structure map on {list(chain)} lives in chart {list(matrix.chart)}", location=chain)
        expected = (self.rank(chain[-1]), self.rank(chain[0]))
        if matrix.shape != expected:
            raise ValidationError(f"shape mismatch on {format_chain(chain)}: {matrix.shape} vs {expected}", location=chain)
        rows, cols = self.degrees(chain[-1]), self.degrees(chain[0])
        for r, c, _ in matrix.nonzero():
            if rows[r] != cols[c] + 2 - len(chain):
                raise ValidationError(
                    f"degree mismatch on {format_chain(chain)} entry ({r}, {c}): "
                    f"{rows[r]} != {cols[c]} + {2 - len(chain)}",
                    location=chain,
                )

    # ------------------------------------------------------------------ queries

    def rank(self, vertex: int) -> int:
        return len(self.modules.get(vertex, ()))

    def degrees(self, vertex: int) -> List[int]:
        return [g.degree for g in self.modules.get(vertex, ())]

    def total_rank(self) -> int:
        return sum(self.rank(v) for v in self.atlas.vertex_ids)

    def structure_map(self, chain: Sequence[int]) -> ChartMatrix:
        chain = tuple(chain)
        if chain in self.maps:
            return self.maps[chain]
        return ChartMatrix.zeros(self.atlas, chain, self.rank(chain[-1]), self.rank(chain[0]))

    def internal_map(self, chain: Sequence[int]) -> ChartMatrix:
        """The structure map in the normalization used by mu1."""
        chain = tuple(chain)
        return internal_structure_map(self.structure_map(chain), len(chain), self.degrees(chain[0]))

    def with_map(self, chain: Sequence[int], matrix: ChartMatrix) -> "TwistedSheaf":
        maps = dict(self.maps)
        maps[tuple(chain)] = matrix
        return TwistedSheaf(atlas=self.atlas, modules=dict(self.modules), maps=maps, name=self.name)

    def permuted(self, vertex: int, order: Sequence[int]) -> "TwistedSheaf":
        """Reorder the generators of F(vertex); structure maps follow."""
        order = list(order)
        if sorted(order) != list(range(self.rank(vertex))):
            raise ValidationError(f"{order} is not a permutation of the generators at {vertex}")
        modules = dict(self.modules)
        modules[vertex] = tuple(self.modules[vertex][k] for k in order)
        maps = {}
        for chain, matrix in self.maps.items():
            entries = matrix.entries
            if chain[-1] == vertex:
                entries = entries[order, :]
            if chain[0] == vertex:
                entries = entries[:, order]
            maps[chain] = ChartMatrix(atlas=self.atlas, chart=chain, entries=entries)
        return TwistedSheaf(atlas=self.atlas, modules=modules, maps=maps, name=self.name)


# ----------------------------------------------------------------- Validation


def structure_residual(sheaf: TwistedSheaf, cocycle: TwistingCocycle, chain: Sequence[int]) -> ChartMatrix:
    """LHS - RHS of the defining equation on one chain, as a matrix over the chart of the chain."""
    chain = tuple(chain)
    rows, cols = sheaf.rank(chain[-1]), sheaf.rank(chain[0])
    residual = ChartMatrix.zeros(sheaf.atlas, chain, rows, cols)
    for position in range(1, len(chain) - 1):
        face = chain[:position] + chain[position + 1 :]
        term = sheaf.structure_map(face).restrict(chain).source_signs(sheaf.degrees(chain[0]))
        residual = residual + term.signed(position + 1)
    for position, vertex in enumerate(chain):
        upper, lower = chain[position:], chain[: position + 1]
        alpha = cocycle.in_chart(chain[0], vertex, chain[-1], chain)
        product = sheaf.structure_map(upper).restrict(chain) @ sheaf.structure_map(lower).restrict(chain)
        residual = residual - product.times(alpha)
    return residual


def sheaf_validate(
    sheaf: TwistedSheaf,
    cocycle: TwistingCocycle,
    precision: Optional[Any] = None,
) -> CheckReport:
    """Check the quadratic equation on every chain; failures carry the residual matrix."""
    window = as_extended_rational(precision) if precision is not None else get_config().precision
    report = CheckReport(name="sheaf")
    chains = sheaf.atlas.chains()
    for chain in chains:
        residual = structure_residual(sheaf, cocycle, chain)
        if window != INF:
            residual = residual.truncate(window)
        if residual.is_zero():
            continue
        _logger.debug("quadratic equation fails", extra={"chain": chain})
        report.fail(
            "sheaf_equation",
            f"structure maps violate the quadratic equation on {format_chain(chain)}",
            location=chain,
            witness={
                "valuation": format_number(residual.valuation()),
                "residual": residual.describe(),
            },
        )
    report.details["checked_chains"] = len(chains)
    report.details["failing_chains"] = [list(c) for c in report.failing_locations()]
    report.details["precision"] = format_number(window)
    return report


# ----------------------------------------------------------------- JSON


def sheaf_from_dict(atlas: ChartAtlas, data: Mapping[str, Any], name: str = "sheaf") -> TwistedSheaf:
    try:
        modules = {
            int(entry["vertex"]): tuple(Generator(str(g["label"]), int(g["degree"])) for g in entry.get("generators", []))
            for entry in data.get("modules", [])
        }
        precision = data.get("precision", "inf")
        maps = {}
        for entry in data.get("maps", []):
            chain = tuple(int(v) for v in entry["chain"])
            cols = len(modules.get(chain[0], ()))
            maps[chain] = ChartMatrix.from_json(atlas, chain, entry["matrix"], cols, precision)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed sheaf description: {exc}") from exc
    return TwistedSheaf(atlas=atlas, modules=modules, maps=maps, name=data.get("name", name))


def sheaf_to_dict(sheaf: TwistedSheaf) -> Dict[str, Any]:
    return {
        "name": sheaf.name,
        "modules": [
            {"vertex": v, "generators": [{"label": g.label, "degree": g.degree} for g in sheaf.modules[v]]}
            for v in sheaf.atlas.vertex_ids
        ],
        "maps": [
            {"chain": list(chain), "matrix": matrix.to_json()}
            for chain, matrix in sorted(sheaf.maps.items(), key=lambda kv: (len(kv[0]), kv[0]))
            if not matrix.is_zero()
        ],
    }


def load_sheaf(atlas: ChartAtlas, source: Union[str, Path, Mapping[str, Any]]) -> TwistedSheaf:
    if isinstance(source, Mapping):
        return sheaf_from_dict(atlas, source)
    path = Path(source)
    with path.open("r", encoding="utf-8") as handle:
        return sheaf_from_dict(atlas, json.load(handle), name=path.stem)


def save_sheaf(sheaf: TwistedSheaf, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(sheaf_to_dict(sheaf), ensure_ascii=False, sort_keys=True, indent=2), encoding="utf-8")
    return path
