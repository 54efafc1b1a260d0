"""
Truncated morphism complexes hom(F, F').

Responsibilities
  - Enumerate the finite basis T^{lambda_A} z^A at entry (y, x) of the
    component on a chain I, for lattice classes A in a sup-norm box and
    lambda_A the least lattice exponent with nonnegative valuation on the
    chart of I.
  - Express morphisms in that basis with Novikov coefficients truncated at E
    and assemble the matrices of mu1 degree by degree.

Usage Context
  - cohomology_barcode and `mirror sheaf cohomology`.

Limitations
  - Lattice classes outside the box are dropped when expressing mu1; the
    number of dropped terms is reported as window leakage.
"""
# 说明：截断的态射复形 hom(F, F′) 的有限基与 μ¹ 矩阵。
# 职责：
# - HomBasisElement：(链 U, 目标生成元 y, 源生成元 x, 格类 A)，对应 T^{λ_A} z^A
# - HomComplex.coordinates：把态射展开为基上的 Novikov 系数（指数 λ − λ_A，截断于 E）
# - HomComplex.differential：μ¹ 在次数 t → t+1 上的矩阵（numpy object 数组）
# 约定：
# - 次数 t = deg y − deg x + |U| − 1；λ_A = lattice_ceil(−min⟨x, A⟩, D)
# - 默认 D 取图册的 lattice_denominator，E 取 config.precision，半径取 config.lattice_radius

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from mirlib.category.matrix import ChartMatrix
from mirlib.category.morphism import SheafMorphism, mu1
from mirlib.category.sheaf import TwistedSheaf
from mirlib.core.affine.atlas import Chain
from mirlib.core.affinoid.cocycle import TwistingCocycle
from mirlib.core.affinoid.element import AffinoidElement
from mirlib.core.exceptions import ValidationError
from mirlib.core.novikov.scalar import NovikovScalar
from mirlib.core.utils.config import get_config
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.core.utils.param_validation import as_positive_int, as_rational
from mirlib.core.utils.rational import lattice_ceil

_logger = get_logger(__name__)

BasisKey = Tuple[Chain, int, int, Tuple[int, ...]]


@dataclass(frozen=True)
class HomBasisElement:
    chain: Chain
    row: int
    col: int
    lattice_class: Tuple[int, ...]
    exponent: Fraction
    degree: int

    @property
    def key(self) -> BasisKey:
        return (self.chain, self.row, self.col, self.lattice_class)

    def label(self) -> str:
        return f"{format_chain(self.chain)}[{self.row},{self.col}] z^{list(self.lattice_class)}"


@dataclass
class HomComplex:
    """
    Finite truncated basis of hom(F, F') graded by total degree.

    - Configuration
      - source / target: the sheaves.
      - precision: window end E; denominator: D; radius: lattice box.
      - basis: degree -> list of HomBasisElement in enumeration order.

    - Behavior
      - coordinates() returns the coefficient vector and the number of
        dropped terms (lattice classes outside the box).
    """

    source: TwistedSheaf
    target: TwistedSheaf
    precision: Fraction
    denominator: int
    radius: int
    basis: Dict[int, List[HomBasisElement]] = field(default_factory=dict)
    _index: Dict[int, Dict[BasisKey, int]] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        self._index = {t: {b.key: k for k, b in enumerate(items)} for t, items in self.basis.items()}

    @property
    def atlas(self):
        return self.source.atlas

    def degrees(self) -> List[int]:
        return sorted(t for t, items in self.basis.items() if items)

    def dimension(self, degree: int) -> int:
        return len(self.basis.get(degree, []))

    def total_dimension(self) -> int:
        return sum(len(items) for items in self.basis.values())

    def is_empty(self) -> bool:
        return self.total_dimension() == 0

    def chain_count(self) -> int:
        return len({b.chain for items in self.basis.values() for b in items})

    def element_morphism(self, element: HomBasisElement) -> SheafMorphism:
        matrix = ChartMatrix.zeros(
            self.atlas, element.chain, self.target.rank(element.chain[-1]), self.source.rank(element.chain[0])
        )
        matrix.entries[element.row, element.col] = AffinoidElement.monomial(
            self.atlas, element.chain, element.exponent, element.lattice_class
        )
        return SheafMorphism(
            source=self.source, target=self.target, degree=element.degree, components={element.chain: matrix}
        )

    def _zero_scalar(self) -> NovikovScalar:
        return NovikovScalar.zero(self.precision, self.atlas.base_field)

    def coordinates(self, morphism: SheafMorphism) -> Tuple[List[NovikovScalar], int]:
        """Coefficients of a morphism of some degree t in the degree-t basis."""
        degree = morphism.degree
        index = self._index.get(degree, {})
        coords = [self._zero_scalar() for _ in range(self.dimension(degree))]
        base = self.atlas.base_field
        leaked = 0
        for chain, matrix in morphism.components.items():
            domain = self.atlas.domain(chain)
            for r, c, entry in matrix.nonzero():
                for lam, lattice_class, coefficient in entry.terms:
                    position = index.get((chain, r, c, lattice_class))
                    if position is None:
                        leaked += 1
                        continue
                    anchor = lattice_ceil(-domain.min_pairing(lattice_class), self.denominator)
                    term = NovikovScalar.from_terms([(lam - anchor, coefficient)], self.precision, base)
                    coords[position] = coords[position] + term
        return coords, leaked

    def differential(self, degree: int, cocycle: TwistingCocycle, jobs: Optional[int] = None) -> Tuple[np.ndarray, int]:
        """Matrix of mu1 from degree t to t+1 (rows: degree t+1 basis) and the total leakage."""
        columns = self.basis.get(degree, [])
        matrix = np.empty((self.dimension(degree + 1), len(columns)), dtype=object)
        workers = jobs if jobs is not None else get_config().jobs

        def column(element: HomBasisElement) -> Tuple[List[NovikovScalar], int]:
            return self.coordinates(mu1(self.element_morphism(element), cocycle))

        if workers > 1 and len(columns) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(column, columns))
        else:
            results = [column(b) for b in columns]
        leaked = 0
        for c, (coords, dropped) in enumerate(results):
            leaked += dropped
            for r, value in enumerate(coords):
                matrix[r, c] = value
        if leaked:
            _logger.debug("mu1 from degree %d dropped %d terms outside the lattice box", degree, leaked)
        return matrix, leaked


def _lattice_box(dimension: int, radius: int) -> List[Tuple[int, ...]]:
    return list(itertools.product(range(-radius, radius + 1), repeat=dimension))


def hom_complex(
    source: TwistedSheaf,
    target: TwistedSheaf,
    *,
    radius: Optional[int] = None,
    precision: Optional[Any] = None,
    denominator: Optional[int] = None,
) -> HomComplex:
    """Enumerate the truncated basis of hom(source, target)."""
    if source.atlas is not target.atlas:
        raise ValidationError("hom complexes need both sheaves on the same atlas")
    config = get_config()
    atlas = source.atlas
    window = as_rational(precision if precision is not None else config.precision)
    if window <= 0:
        raise ValidationError("the precision window must be positive")
    lattice = as_positive_int(denominator if denominator is not None else atlas.lattice_denominator)
    box = radius if radius is not None else config.lattice_radius
    if box < 0:
        raise ValidationError("the lattice radius must be nonnegative")

    classes = _lattice_box(atlas.dimension, box)
    basis: Dict[int, List[HomBasisElement]] = {}
    for chain in atlas.chains():
        rows, cols = target.degrees(chain[-1]), source.degrees(chain[0])
        if not rows or not cols:
            continue
        domain = atlas.domain(chain)
        for r, row_degree in enumerate(rows):
            for c, col_degree in enumerate(cols):
                degree = row_degree - col_degree + len(chain) - 1
                for lattice_class in classes:
                    exponent = lattice_ceil(-domain.min_pairing(lattice_class), lattice)
                    basis.setdefault(degree, []).append(
                        HomBasisElement(chain, r, c, lattice_class, exponent, degree)
                    )
    complex_ = HomComplex(
        source=source, target=target, precision=window, denominator=lattice, radius=box, basis=basis
    )
    _logger.info(
        "hom complex %s -> %s: %d basis elements in degrees %s",
        source.name,
        target.name,
        complex_.total_dimension(),
        complex_.degrees(),
    )
    return complex_
