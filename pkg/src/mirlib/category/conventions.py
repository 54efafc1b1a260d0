"""
Sign conventions linking sheaf structure maps to the DG category operations.

Responsibilities
  - Convert the structure maps F_I of an object, written in the normalization
    of the defining quadratic equation, into the degree-one morphism F^M used
    by mu1 (and back).
  - Provide the sign of each summand of the composition.
  - Provide the conversion factor to the equivalent G_I convention.

Usage Context
  - sheaf.py, morphism.py and the functor maps.

Limitations
  - Only the F convention is used internally; G is offered for comparison.
"""
# 说明：对象结构映射与 DG 范畴运算之间的符号约定。
# 职责：
# - internal_structure_map：F^M_K = c_{|K|} · F_K · ε^{e_{|K|}}，c_m = (−1)^{m(m−1)/2}，e_m = (m+1) mod 2
# - equation_structure_map：上式的逆变换
# - composition_sign：(S ∘̂ T)_U 中第 a 个分点的符号 (−1)^{a·|S|}
# - g_conversion_factor：G_I = F_I · Π_{i ∈ I, i ≠ max I} α^v_{min I, i, i+}
# 约定：
# - ε 为源模块上的对角符号 (−1)^{deg}，作用于矩阵右侧

from __future__ import annotations

from typing import Sequence

from mirlib.category.matrix import ChartMatrix
from mirlib.core.affinoid.cocycle import TwistingCocycle
from mirlib.core.affinoid.element import AffinoidElement


def chain_sign(size: int) -> int:
    # c_m 的指数 m(m−1)/2 的奇偶
    return (size * (size - 1) // 2) % 2


def source_sign_power(size: int) -> int:
    return (size + 1) % 2


def internal_structure_map(matrix: ChartMatrix, size: int, source_degrees: Sequence[int]) -> ChartMatrix:
    """F^M_K from the structure map F_K of a chain with ``size`` elements."""
    out = matrix.signed(chain_sign(size))
    if source_sign_power(size):
        out = out.source_signs(source_degrees)
    return out


def equation_structure_map(matrix: ChartMatrix, size: int, source_degrees: Sequence[int]) -> ChartMatrix:
    # c_m 与 ε 均为对合，逆变换与正变换相同
    return internal_structure_map(matrix, size, source_degrees)


def composition_sign(position: int, left_degree: int) -> int:
    """Exponent of -1 for the summand cut at the ``position``-th element (0-based)."""
    return (position * left_degree) % 2


def g_conversion_factor(cocycle: TwistingCocycle, chain: Sequence[int]) -> AffinoidElement:
    """Product of alpha^v_{min I, i, i+} over i in I below max I, in the chart of I."""
    chain = tuple(chain)
    atlas = cocycle.atlas
    factor = AffinoidElement.constant(atlas, chain, 1)
    for i, following in zip(chain, chain[1:]):
        factor = factor * cocycle.in_chart(chain[0], i, following, chain)
    return factor
