"""
Sheaves and functor maps evaluated from formal counts.

Responsibilities
  - sheaf_from_counts: graded modules from the intersection points of a
    brane and structure maps F_K from strip and continuation counts, with
    the section prefactor T^{f(q_max K)} z^{df - dg_y + dg_x} on |K| >= 2.
  - CechMap: the components C^d from input and discK counts, landing in
    the morphism complex between the sheaves of the two branes.
  - FloerMap: P from output counts, pairing z_I^gamma (x -> x') with the
    counts of boundary class gamma.
  - Chain-map residuals of C and P.

Usage Context
  - functor checks and `mirror functor check`.

Limitations
  - The orientation data of the generators is collapsed into the signs of
    the counts; each generator is a rank-one summand.
"""
# 说明：由形式计数求值的层与函子映射。
# 职责：
# - sheaf_from_counts：F(i) 取膜在顶点 i 的交点；F_K 项为 Σ 计数 · T^λ z^A（|K| ≥ 2 时乘前因子）
# - CechMap：𝒞^d（d = 1 来自 input 与 discK(d=1)，d ≥ 2 来自 discK）
# - FloerMap：𝒫(z_I^γ ⊗ φ_{x→x′}) = Σ_{边界类为 γ 的计数} 计数 · T^{λ} · x_ou
# - cech_chain_check / floer_chain_check：链映射残差
# 约定：
# - 范畴一侧以 Seidel 符号比较：μ¹_S(T) = (−1)^{|T|} μ¹(T)
# - 𝒞 不带前因子；𝒫 的系数按图卡 I 给出，来自更大图卡 J 的项先平移 −⟨A, q_J − q_I⟩

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from mirlib.category.hom_complex import hom_complex
from mirlib.category.matrix import ChartMatrix
from mirlib.category.morphism import SheafMorphism, mu1, zero_morphism
from mirlib.category.sheaf import Generator, TwistedSheaf, sheaf_validate
from mirlib.core.affine.atlas import Chain, ChartAtlas
from mirlib.core.affinoid.cocycle import TwistingCocycle
from mirlib.core.affinoid.element import AffinoidElement
from mirlib.core.exceptions import ValidationError
from mirlib.core.novikov.scalar import INF, NovikovScalar
from mirlib.core.utils.config import get_config
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.core.utils.param_validation import as_extended_rational
from mirlib.core.utils.rational import add, dot, is_integral, sub, to_int_vector
from mirlib.core.utils.serialization import format_number
from mirlib.functor.floer import FloerChain, FloerComplex
from mirlib.functor.intersections import SOURCE, IntersectionData
from mirlib.functor.ledger import FormalCountLedger, LedgerEntry, LedgerFamily, admissible_entries
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)


def resolve_window(precision: Optional[Any]) -> Any:
    return as_extended_rational(precision) if precision is not None else get_config().precision


def seidel_mu1(morphism: SheafMorphism, cocycle: TwistingCocycle) -> SheafMorphism:
    """mu1 of the sheaf category with the sign matching the Floer side."""
    return mu1(morphism, cocycle).signed(morphism.degree)


# ----------------------------------------------------------------- Sheaves


def _prefactor(
    atlas: ChartAtlas, intersections: IntersectionData, brane: str, entry: LedgerEntry
) -> Tuple[Fraction, Tuple[int, ...]]:
    chain = entry.where
    if len(chain) < 2:
        return Fraction(0), (0,) * atlas.dimension
    section = atlas.section(chain[0], chain[-1])
    start = intersections.point(brane, chain[0], entry.label("input"))
    end = intersections.point(brane, chain[-1], entry.label("output"))
    zero = (Fraction(0),) * atlas.dimension
    exponent = sub(add(section.gradient, start.gradient or zero), end.gradient or zero)
    if not is_integral(exponent):
        raise ValidationError(
            f"prefactor z^{[format_number(x) for x in exponent]} on {format_chain(chain)} is not integral",
            location=chain,
        )
    return section.value_at_target, to_int_vector(exponent)


def sheaf_from_counts(
    ledger: FormalCountLedger,
    intersections: IntersectionData,
    atlas: ChartAtlas,
    cocycle: TwistingCocycle,
    *,
    brane: str = SOURCE,
    precision: Optional[Any] = None,
    name: Optional[str] = None,
) -> Tuple[TwistedSheaf, CheckReport]:
    """The twisted sheaf of a brane and the report of its quadratic equation."""
    modules = {
        v: tuple(Generator(p.label, p.degree) for p in intersections.points(brane, v)) for v in atlas.vertex_ids
    }
    wanted = SOURCE if intersections.self_pair else brane
    maps: Dict[Chain, ChartMatrix] = {}
    for family in (LedgerFamily.STRIP, LedgerFamily.CONTINUATION):
        for entry in admissible_entries(ledger, family, intersections, atlas, brane=wanted):
            chain = entry.where
            if chain not in maps:
                rows, cols = len(modules[chain[-1]]), len(modules[chain[0]])
                maps[chain] = ChartMatrix.zeros(atlas, chain, rows, cols)
            row = intersections.index(wanted, chain[-1], entry.label("output"))
            col = intersections.index(wanted, chain[0], entry.label("input"))
            shift, lattice_class = _prefactor(atlas, intersections, wanted, entry)
            boundary = entry.boundary_class(atlas.dimension)
            term = AffinoidElement.monomial(
                atlas,
                chain,
                entry.energy + shift,
                tuple(a + b for a, b in zip(boundary, lattice_class)),
                entry.count,
            )
            maps[chain].entries[row, col] = maps[chain].entries[row, col] + term
    sheaf = TwistedSheaf(atlas=atlas, modules=modules, maps=maps, name=name or f"F({brane})")
    report = sheaf_validate(sheaf, cocycle, precision)
    _logger.info(
        "sheaf %s from %d structure maps: %s", sheaf.name, len(sheaf.maps), "PASS" if report.passed else "FAIL"
    )
    return sheaf, report


# ----------------------------------------------------------------- Floer to Cech


def _cech_inputs(entry: LedgerEntry) -> Tuple[str, ...]:
    if entry.family is LedgerFamily.INPUT:
        return (entry.label("pair"),)
    return entry.inputs


@dataclass
class CechMap:
    """
    The A-infinity map C from CF(L, L') to hom(F(L), F(L')).

    - Configuration
      - source / target: F(L) and F(L').
      - complex: the Floer complex supplying generator degrees.
      - components: arity d -> entries contributing to C^d.

    - Behavior
      - component(labels) is C^d on one tuple of generators, of degree
        sum(deg) + 1 - d.
      - apply(chains, degree) extends multilinearly.
    """

    source: TwistedSheaf
    target: TwistedSheaf
    complex: FloerComplex
    components: Dict[int, List[LedgerEntry]] = field(default_factory=dict)

    @property
    def atlas(self) -> ChartAtlas:
        return self.source.atlas

    def arities(self) -> List[int]:
        return sorted(d for d, entries in self.components.items() if entries)

    def degree_of(self, labels: Sequence[str]) -> int:
        return sum(self.complex.degree(a) for a in labels) + 1 - len(labels)

    def _index(self, sheaf: TwistedSheaf, vertex: int, label: str) -> int:
        for k, generator in enumerate(sheaf.modules[vertex]):
            if generator.label == label:
                return k
        raise ValidationError(f"no generator '{label}' at vertex {vertex} of {sheaf.name}", location=(vertex,))

    def component(self, labels: Sequence[str]) -> SheafMorphism:
        labels = tuple(labels)
        atlas = self.atlas
        matrices: Dict[Chain, ChartMatrix] = {}
        for entry in self.components.get(len(labels), []):
            if _cech_inputs(entry) != labels:
                continue
            chain = entry.where
            if chain not in matrices:
                matrices[chain] = ChartMatrix.zeros(
                    atlas, chain, self.target.rank(chain[-1]), self.source.rank(chain[0])
                )
            row = self._index(self.target, chain[-1], entry.label("output"))
            col = self._index(self.source, chain[0], entry.label("input"))
            term = AffinoidElement.monomial(
                atlas, chain, entry.energy, entry.boundary_class(atlas.dimension), entry.count
            )
            matrices[chain].entries[row, col] = matrices[chain].entries[row, col] + term
        return SheafMorphism(source=self.source, target=self.target, degree=self.degree_of(labels), components=matrices)

    def apply(self, chains: Sequence[FloerChain], degree: int) -> SheafMorphism:
        """C^d on Floer chains, expected to land in the given degree."""
        result = zero_morphism(self.source, self.target, degree)
        if not self.components.get(len(chains)):
            return result
        for labels in itertools.product(*(chain.support() for chain in chains)):
            term = self.component(labels)
            if term.is_zero():
                continue
            if term.degree != degree:
                raise ValidationError(f"C^{len(chains)}{list(labels)} has degree {term.degree}, expected {degree}")
            scalar = NovikovScalar.one(INF, self.complex.base_field)
            for label, chain in zip(labels, chains):
                scalar = scalar * chain.coefficient(label)
            result = result + term.scaled(scalar)
        return result

    def __call__(self, chain: FloerChain, degree: int) -> SheafMorphism:
        return self.apply([chain], degree)


def cech_map_from_counts(
    ledger: FormalCountLedger,
    intersections: IntersectionData,
    complex_: FloerComplex,
    source: TwistedSheaf,
    target: TwistedSheaf,
) -> CechMap:
    """C^1 from input counts and discK(1) counts; C^d from discK(d) counts."""
    atlas = source.atlas
    components: Dict[int, List[LedgerEntry]] = {}
    for entry in admissible_entries(ledger, LedgerFamily.INPUT, intersections, atlas):
        components.setdefault(1, []).append(entry)
    for entry in admissible_entries(ledger, LedgerFamily.DISC_K, intersections, atlas):
        components.setdefault(entry.arity, []).append(entry)
    cech = CechMap(source=source, target=target, complex=complex_, components=components)
    _logger.debug("Cech map with components of arity %s", cech.arities())
    return cech


def cech_chain_check(
    cech: CechMap,
    cocycle: TwistingCocycle,
    *,
    precision: Optional[Any] = None,
) -> CheckReport:
    """mu1_S(C a) - C(mu1_F a) on every Floer generator."""
    window = resolve_window(precision)
    complex_ = cech.complex
    report = CheckReport(name="cech")
    for label in complex_.labels():
        degree = complex_.degree(label)
        image = cech.component((label,))
        lhs = seidel_mu1(image, cocycle)
        rhs = cech(complex_.mu1(complex_.basis(label)), degree + 1)
        residual = (lhs - rhs).truncate(window)
        for chain in residual.support():
            report.fail(
                "cech_chain_map",
                f"C is not a chain map on {label} at {format_chain(chain)}",
                location=chain,
                witness={"generator": label, "residual": residual.components[chain].describe()},
            )
    report.details["generators"] = len(complex_.generators)
    report.details["failing_chains"] = sorted({format_chain(c) for c in report.failing_locations()})
    return report


# ----------------------------------------------------------------- Cech to Floer


@dataclass
class FloerMap:
    """
    The map P from hom(F(L), F(L')) to CF(L, L').

    - Configuration
      - source / target: F(L) and F(L').
      - complex: the Floer complex P lands in.
      - entries: chain I -> output entries on I.

    - Behavior
      - evaluate_entry() reads the coefficients of z_I^gamma in the chart of
        I; terms handed over in a larger chart are rebased first.
    """

    source: TwistedSheaf
    target: TwistedSheaf
    complex: FloerComplex
    entries: Dict[Chain, List[LedgerEntry]] = field(default_factory=dict)

    @property
    def atlas(self) -> ChartAtlas:
        return self.source.atlas

    def evaluate_entry(self, chain: Sequence[int], row: int, col: int, element: AffinoidElement) -> FloerChain:
        chain = tuple(chain)
        base = self.complex.base_field
        out = FloerChain.zero(base)
        entries = self.entries.get(chain, [])
        if not entries or element.is_zero():
            return out
        if not set(chain) <= set(element.chart):
            raise ValidationError(f"entry in chart {list(element.chart)} does not cover {format_chain(chain)}")
        rebase = self.atlas.offset(chain[-1], element.chart[-1])
        start = self.source.modules[chain[0]][col].label
        end = self.target.modules[chain[-1]][row].label
        for entry in entries:
            if entry.label("input") != start or entry.label("output") != end:
                continue
            gamma = entry.boundary_class(self.atlas.dimension)
            for lam, lattice_class, coefficient in element.terms:
                if tuple(lattice_class) != tuple(gamma):
                    continue
                exponent = lam - dot(rebase, lattice_class) + entry.energy
                value = NovikovScalar.monomial(base.mul(coefficient, entry.count), exponent, INF, base)
                out = out + FloerChain({entry.label("pair"): value}, base)
        return out

    def apply(self, morphism: SheafMorphism) -> FloerChain:
        out = FloerChain.zero(self.complex.base_field)
        for chain, matrix in morphism.components.items():
            for row, col, element in matrix.nonzero():
                out = out + self.evaluate_entry(chain, row, col, element)
        return out

    def __call__(self, morphism: SheafMorphism) -> FloerChain:
        return self.apply(morphism)


def floer_map_from_counts(
    ledger: FormalCountLedger,
    intersections: IntersectionData,
    complex_: FloerComplex,
    source: TwistedSheaf,
    target: TwistedSheaf,
) -> FloerMap:
    entries: Dict[Chain, List[LedgerEntry]] = {}
    for entry in admissible_entries(ledger, LedgerFamily.OUTPUT, intersections, source.atlas):
        entries.setdefault(entry.where, []).append(entry)
    _logger.debug("Floer map with output counts on %d chains", len(entries))
    return FloerMap(source=source, target=target, complex=complex_, entries=entries)


def floer_chain_check(
    pmap: FloerMap,
    cocycle: TwistingCocycle,
    *,
    precision: Optional[Any] = None,
    radius: Optional[int] = None,
    denominator: Optional[int] = None,
) -> CheckReport:
    """mu1_F(P T) - P(mu1_S T) on the truncated basis of the morphism complex."""
    window = resolve_window(precision)
    complex_ = hom_complex(pmap.source, pmap.target, radius=radius, precision=precision, denominator=denominator)
    report = CheckReport(name="floer_map")
    checked = 0
    for degree in complex_.degrees():
        for element in complex_.basis[degree]:
            morphism = complex_.element_morphism(element)
            lhs = pmap.complex.mu1(pmap(morphism))
            rhs = pmap(seidel_mu1(morphism, cocycle))
            residual = (lhs - rhs).truncate(window)
            checked += 1
            if residual.is_zero():
                continue
            report.fail(
                "floer_chain_map",
                f"P is not a chain map on {element.label()}",
                location=element.chain,
                witness={"basis": element.label(), "residual": residual.to_dict()},
            )
    report.details["checked_basis_elements"] = checked
    report.details["precision"] = format_number(window)
    return report
