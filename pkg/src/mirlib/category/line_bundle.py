"""Twisted line bundles: rank-one sheaves whose only structure maps are edge transitions."""
# 说明：扭曲线丛（秩 1、次数 0、F_i = 0、仅边上有结构映射 u_ij 的扭曲层）。
# 职责：
# - line_bundle：由边上的转移函数构造层并立即运行 sheaf_validate
# - compatible_transitions：u_ij = (−1)^{w_ij} T^{−f_ij(q_j)} z^{−df_ij}，w 在 GF(2) 上解
#   w_ik = v_ijk + w_jk + w_ij（numpy 消元）；v 不是上边缘时报错
# - gauge_transform：F_I ↦ g_{max I} · F_I · g_{min I}^{-1}（逐顶点的基域单位）

from __future__ import annotations

from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np

from mirlib.category.matrix import ChartMatrix
from mirlib.category.sheaf import Generator, TwistedSheaf, sheaf_validate
from mirlib.core.affine.atlas import ChartAtlas, Edge, edges_of, triples_of
from mirlib.core.affinoid.cocycle import TwistingCocycle
from mirlib.core.affinoid.element import AffinoidElement
from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.logging import get_logger
from mirlib.core.utils.rational import neg, to_int_vector
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)


def line_bundle(
    atlas: ChartAtlas,
    cocycle: TwistingCocycle,
    transitions: Optional[Mapping[Edge, Any]] = None,
    *,
    precision: Optional[Any] = None,
    name: str = "line_bundle",
) -> Tuple[TwistedSheaf, CheckReport]:
    """
    Rank-one sheaf with F_ij = u_ij and the validation report of its equation.

    Missing edges get u_ij = 1; plain values are read as constants.
    """
    transitions = dict(transitions or {})
    modules = {v: (Generator(f"e{v}", 0),) for v in atlas.vertex_ids}
    maps = {}
    for edge in edges_of(atlas):
        value = transitions.pop(edge, 1)
        if not isinstance(value, AffinoidElement):
            value = AffinoidElement.constant(atlas, edge, value)
        elif value.chart != edge:
            raise ValidationError(f"transition on {list(edge)} lives in chart {list(value.chart)}", location=edge)
        maps[edge] = ChartMatrix.from_rows(atlas, edge, [[value]], 1)
    if transitions:
        raise ValidationError(f"transitions given on non-edges {sorted(transitions)}")
    sheaf = TwistedSheaf(atlas=atlas, modules=modules, maps=maps, name=name)
    report = sheaf_validate(sheaf, cocycle, precision)
    if not report.passed:
        _logger.warning("transitions of %s violate the twisted cocycle condition", name)
    return sheaf, report


def _solve_gf2(matrix: np.ndarray, rhs: np.ndarray) -> Optional[np.ndarray]:
    # 行化简为阶梯形；无解时返回 None
    a = np.concatenate([matrix % 2, (rhs % 2).reshape(-1, 1)], axis=1).astype(np.uint8)
    rows, cols = matrix.shape
    pivots = []
    row = 0
    for col in range(cols):
        hits = np.nonzero(a[row:, col])[0]
        if hits.size == 0:
            continue
        swap = row + hits[0]
        a[[row, swap]] = a[[swap, row]]
        for r in range(rows):
            if r != row and a[r, col]:
                a[r] ^= a[row]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    if np.any(a[row:, -1]):
        return None
    solution = np.zeros(cols, dtype=np.uint8)
    for r, col in enumerate(pivots):
        solution[col] = a[r, -1]
    return solution


def compatible_transitions(atlas: ChartAtlas, cocycle: TwistingCocycle) -> Dict[Edge, AffinoidElement]:
    """Monomial transitions satisfying u_ik = alpha_ijk u_jk u_ij on every triple."""
    edges = edges_of(atlas)
    triples = triples_of(atlas)
    column = {e: k for k, e in enumerate(edges)}
    signs = np.zeros(len(edges), dtype=np.uint8)
    if triples:
        system = np.zeros((len(triples), len(edges)), dtype=np.uint8)
        rhs = np.zeros(len(triples), dtype=np.uint8)
        for row, (i, j, k) in enumerate(triples):
            for edge in ((i, j), (j, k), (i, k)):
                system[row, column[edge]] ^= 1
            rhs[row] = atlas.sign(i, j, k)
        solved = _solve_gf2(system, rhs)
        if solved is None:
            raise ValidationError("the sign cochain is not a coboundary; no compatible transitions exist")
        signs = solved
    base = atlas.base_field
    out = {}
    for edge in edges:
        section = atlas.section(*edge)
        out[edge] = AffinoidElement.monomial(
            atlas,
            edge,
            -section.value_at_target,
            to_int_vector(neg(section.gradient)),
            base.sign(int(signs[column[edge]])),
        )
    _logger.debug("solved transition signs on %d edges of %s", len(edges), atlas.name)
    return out


def gauge_transform(sheaf: TwistedSheaf, units: Mapping[int, Any]) -> TwistedSheaf:
    """Conjugate the structure maps by per-vertex base-field units."""
    base = sheaf.atlas.base_field
    factors = {v: base.element(units.get(v, 1)) for v in sheaf.atlas.vertex_ids}
    if any(base.is_zero(c) for c in factors.values()):
        raise ValidationError("gauge units must be nonzero")
    maps = {}
    for chain, matrix in sheaf.maps.items():
        scalar = base.mul(factors[chain[-1]], base.inv(factors[chain[0]]))
        maps[chain] = matrix.times(AffinoidElement.constant(sheaf.atlas, chain, scalar))
    return TwistedSheaf(atlas=sheaf.atlas, modules=dict(sheaf.modules), maps=maps, name=sheaf.name)
