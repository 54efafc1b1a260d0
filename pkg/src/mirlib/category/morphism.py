"""
Morphisms of twisted sheaves and the DG operations mu1 and mu2.

Responsibilities
  - SheafMorphism: components T_I over the chart of I, homogeneous of degree
    t + 1 - |I|, with linear arithmetic and truncated comparison.
  - compose (the twisted composition), delta (interior-deletion part of the
    differential), mu1 and mu2.
  - Vertexwise identities and random morphisms for property checks.

Usage Context
  - hom_complex / barcode evaluate mu1 on basis morphisms; the functor maps
    produce SheafMorphism values and compare them through mu1.

Limitations
  - Components are matrices over the chart of the chain itself; every inner
    factor is restricted to the outer chain before multiplying.
"""
# 说明：扭曲层之间的态射与 DG 运算 μ¹、μ²。
# 职责：
# - SheafMorphism：分量 T_I（图卡 I 上的矩阵），次数约束 deg(行) = deg(列) + t + 1 − |I|
# - compose：(S ∘̂ T)_U = Σ_{i∈U} (−1)^{a_i·|S|} α^v_{min U, i, max U} S_{U≥i} T_{U≤i}
# - delta：(δT)_U = Σ_{内点 u} (−1)^{p_u} T_{U∖u}
# - mu1：δT + F′^M ∘̂ T − (−1)^{|T|} T ∘̂ F^M；mu2：S ∘̂ T
# - identity_morphism / structure_morphism / random_morphism
# 约定：
# - a_i、p_u 为 0 起始的位置；F^M 为 conventions.internal_structure_map 给出的内部规范化

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from mirlib.category.conventions import composition_sign
from mirlib.category.matrix import ChartMatrix
from mirlib.category.sheaf import TwistedSheaf
from mirlib.core.affine.atlas import Chain
from mirlib.core.affinoid.cocycle import TwistingCocycle
from mirlib.core.affinoid.element import AffinoidElement
from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.core.utils.random import create_rng, random_fraction
from mirlib.core.utils.rational import lattice_ceil

_logger = get_logger(__name__)


def _same_module(a: TwistedSheaf, b: TwistedSheaf) -> bool:
    return a is b or (a.atlas is b.atlas and a.modules == b.modules)


@dataclass(eq=False)
class SheafMorphism:
    """
    Element of the morphism complex hom(F, F').

    - Configuration
      - source / target: the sheaves F and F'.
      - degree: total degree t.
      - components: chain -> ChartMatrix of shape rank F'(max I) x rank F(min I).

    - Behavior
      - Construction drops zero components and checks shapes and degrees.
      - +, -, negation and signed() act componentwise.
    """

    source: TwistedSheaf
    target: TwistedSheaf
    degree: int
    components: Dict[Chain, ChartMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.source.atlas is not self.target.atlas:
            raise ValidationError("morphisms need source and target on the same atlas")
        kept = {}
        for chain, matrix in self.components.items():
            chain = tuple(chain)
            if matrix.is_zero():
                continue
            self._check_component(chain, matrix)
            kept[chain] = matrix
        self.components = kept

    def _check_component(self, chain: Chain, matrix: ChartMatrix) -> None:
        if matrix.chart != chain:
            raise ValidationError(f"component on {format_chain(chain)} lives in chart {list(matrix.chart)}", location=chain)
        expected = (self.target.rank(chain[-1]), self.source.rank(chain[0]))
        if matrix.shape != expected:
            raise ValidationError(f"shape mismatch on {format_chain(chain)}: {matrix.shape} vs {expected}", location=chain)
        rows, cols = self.target.degrees(chain[-1]), self.source.degrees(chain[0])
        shift = self.degree + 1 - len(chain)
        for r, c, _ in matrix.nonzero():
            if rows[r] != cols[c] + shift:
                raise ValidationError(
                    f"entry ({r}, {c}) on {format_chain(chain)} does not have degree {self.degree}",
                    location=chain,
                )

    @property
    def atlas(self):
        return self.source.atlas

    def component(self, chain: Sequence[int]) -> ChartMatrix:
        chain = tuple(chain)
        if chain in self.components:
            return self.components[chain]
        return ChartMatrix.zeros(self.atlas, chain, self.target.rank(chain[-1]), self.source.rank(chain[0]))

    def support(self) -> List[Chain]:
        return sorted(self.components, key=lambda c: (len(c), c))

    # ------------------------------------------------------------------ linear structure

    def _like(self, components: Dict[Chain, ChartMatrix], degree: Optional[int] = None) -> "SheafMorphism":
        return SheafMorphism(
            source=self.source,
            target=self.target,
            degree=self.degree if degree is None else degree,
            components=components,
        )

    def _check_parallel(self, other: "SheafMorphism") -> None:
        if not (_same_module(self.source, other.source) and _same_module(self.target, other.target)):
            raise ValidationError("morphisms have different source or target")
        if self.degree != other.degree:
            raise ValidationError(f"cannot add morphisms of degrees {self.degree} and {other.degree}")

    def __add__(self, other: "SheafMorphism") -> "SheafMorphism":
        self._check_parallel(other)
        out = dict(self.components)
        for chain, matrix in other.components.items():
            out[chain] = out[chain] + matrix if chain in out else matrix
        return self._like(out)

    def __neg__(self) -> "SheafMorphism":
        return self._like({c: -m for c, m in self.components.items()})

    def __sub__(self, other: "SheafMorphism") -> "SheafMorphism":
        return self + (-other)

    def signed(self, sign: int) -> "SheafMorphism":
        return self if sign % 2 == 0 else -self

    def scaled(self, scalar: Any) -> "SheafMorphism":
        """Multiply every component by a constant (base-field or Novikov scalar)."""
        out = {}
        for chain, matrix in self.components.items():
            out[chain] = matrix.times(AffinoidElement.constant(self.atlas, chain, 1) * scalar)
        return self._like(out)

    def truncate(self, precision: Any) -> "SheafMorphism":
        return self._like({c: m.truncate(precision) for c, m in self.components.items()})

    def is_zero(self, precision: Optional[Any] = None) -> bool:
        morphism = self if precision is None else self.truncate(precision)
        return not morphism.components

    def equals_up_to(self, other: "SheafMorphism", precision: Optional[Any] = None) -> bool:
        return (self - other).is_zero(precision)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "components": [{"chain": list(c), "matrix": self.components[c].to_json()} for c in self.support()],
        }


def zero_morphism(source: TwistedSheaf, target: TwistedSheaf, degree: int) -> SheafMorphism:
    return SheafMorphism(source=source, target=target, degree=degree)


def identity_morphism(sheaf: TwistedSheaf) -> SheafMorphism:
    """The vertexwise identity: T_i = Id on every vertex, zero on longer chains."""
    components = {
        (v,): ChartMatrix.identity(sheaf.atlas, (v,), sheaf.rank(v)) for v in sheaf.atlas.vertex_ids if sheaf.rank(v)
    }
    return SheafMorphism(source=sheaf, target=sheaf, degree=0, components=components)


def structure_morphism(sheaf: TwistedSheaf) -> SheafMorphism:
    """The internal degree-one endomorphism F^M built from the structure maps."""
    components = {chain: sheaf.internal_map(chain) for chain in sheaf.maps}
    return SheafMorphism(source=sheaf, target=sheaf, degree=1, components=components)


# ----------------------------------------------------------------- Operations


def compose(left: SheafMorphism, right: SheafMorphism, cocycle: TwistingCocycle) -> SheafMorphism:
    """The twisted composition left o right; right's target must be left's source."""
    if not _same_module(right.target, left.source):
        raise ValidationError("morphisms are not composable")
    atlas = left.atlas
    out: Dict[Chain, ChartMatrix] = {}
    for chain in atlas.chains():
        total = None
        for position, vertex in enumerate(chain):
            upper, lower = chain[position:], chain[: position + 1]
            if upper not in left.components or lower not in right.components:
                continue
            product = left.components[upper].restrict(chain) @ right.components[lower].restrict(chain)
            if position and vertex != chain[-1]:
                product = product.times(cocycle.in_chart(chain[0], vertex, chain[-1], chain))
            product = product.signed(composition_sign(position, left.degree))
            total = product if total is None else total + product
        if total is not None:
            out[chain] = total
    return SheafMorphism(source=right.source, target=left.target, degree=left.degree + right.degree, components=out)


def delta(morphism: SheafMorphism) -> SheafMorphism:
    """Alternating sum over deletions of interior elements."""
    out: Dict[Chain, ChartMatrix] = {}
    for chain in morphism.atlas.chains():
        total = None
        for position in range(1, len(chain) - 1):
            face = chain[:position] + chain[position + 1 :]
            if face not in morphism.components:
                continue
            term = morphism.components[face].restrict(chain).signed(position)
            total = term if total is None else total + term
        if total is not None:
            out[chain] = total
    return morphism._like(out, degree=morphism.degree + 1)


def mu1(morphism: SheafMorphism, cocycle: TwistingCocycle) -> SheafMorphism:
    """The differential of the morphism complex; raises the degree by one."""
    result = delta(morphism)
    result = result + compose(structure_morphism(morphism.target), morphism, cocycle)
    result = result - compose(morphism, structure_morphism(morphism.source), cocycle).signed(morphism.degree)
    return result


def mu2(left: SheafMorphism, right: SheafMorphism, cocycle: TwistingCocycle) -> SheafMorphism:
    return compose(left, right, cocycle)


# ----------------------------------------------------------------- Random morphisms


def _random_entry(
    atlas,
    chain: Chain,
    rng: np.random.Generator,
    radius: int,
    denominator: int,
    terms: int,
) -> AffinoidElement:
    domain = atlas.domain(chain)
    items = []
    for _ in range(terms):
        lattice_class = tuple(int(x) for x in rng.integers(-radius, radius + 1, size=atlas.dimension))
        floor = lattice_ceil(-domain.min_pairing(lattice_class), denominator)
        lam = floor + random_fraction(rng, denominator, 0, 2)
        coefficient = int(rng.choice([-2, -1, 1, 2]))
        items.append((lam, lattice_class, coefficient))
    return AffinoidElement.from_terms(atlas, chain, items)


def random_morphism(
    source: TwistedSheaf,
    target: TwistedSheaf,
    degree: int,
    rng: Any = None,
    *,
    density: float = 0.5,
    radius: int = 1,
    terms: int = 2,
    chains: Optional[Iterable[Sequence[int]]] = None,
) -> SheafMorphism:
    """
    Random homogeneous morphism with monomial-sum entries of nonnegative valuation.

    Each admissible entry is filled with probability ``density``; lattice
    classes are drawn from the box of sup-norm ``radius``.
    """
    rng = create_rng(rng)
    atlas = source.atlas
    denominator = atlas.lattice_denominator
    selected = [tuple(c) for c in chains] if chains is not None else atlas.chains()
    components: Dict[Chain, ChartMatrix] = {}
    for chain in selected:
        rows, cols = target.degrees(chain[-1]), source.degrees(chain[0])
        if not rows or not cols:
            continue
        matrix = ChartMatrix.zeros(atlas, chain, len(rows), len(cols))
        shift = degree + 1 - len(chain)
        for r, row_degree in enumerate(rows):
            for c, col_degree in enumerate(cols):
                if row_degree != col_degree + shift or rng.random() >= density:
                    continue
                matrix.entries[r, c] = _random_entry(atlas, chain, rng, radius, denominator, terms)
        components[chain] = matrix
    morphism = SheafMorphism(source=source, target=target, degree=degree, components=components)
    _logger.debug("random morphism of degree %d on %d chains", degree, len(morphism.components))
    return morphism

