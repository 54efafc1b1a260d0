"""
Triangulated integral affine tori and their validation.

Responsibilities
  - Hold the atlas data: vertices with basepoints and chart polytopes,
    simplices, section data f_ij and the sign cochain v.
  - Compute torus offsets between basepoints and chart domains of chains.
  - Validate every structural invariant, reporting offending cells.

Usage Context
  - Loaded from atlas.json or built by mirlib.core.affine.builders; consumed
    by chart rings, the twisting cocycle, sheaves and the CLI.

Limitations
  - Chart identifications are pure translations (trivial monodromy).
  - Openness of the star condition is replaced by closed containment.
"""
# 说明：三角剖分整仿射环面的数据模型与校验。
# 职责：
# - ChartAtlas：顶点（基点 q_i、图卡多面体 P_i）、单形、截面数据 f_ij、符号上链 v
# - offset(i, j)：q_j − q_i 在 R^n/Z^n 中的最近代表元（各坐标落在 [-1/2, 1/2)）
# - domain(chain)：链 I 的图卡区域 ∩_{i∈I} P_i，以 q_{max I} 为原点表示
# - atlas_validate：逐项检查不变量并返回 CheckReport
# 约定：
# - 截面 f_ij 以 (梯度, 在 q_j 处的值) 存储，f_ij(q_j + x) = value + ⟨gradient, x⟩
# - 嵌套条件 P_j ⊆ P_i 默认只作为 warning 注释，strict_nesting=True 时作为失败

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from mirlib.core.affine.geometry import Polytope, Region, intersect_all
from mirlib.core.exceptions import ValidationError
from mirlib.core.novikov.base_field import RATIONALS, BaseField
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.core.utils.rational import Vector, add, dot, is_integral, on_lattice, sub, torus_representative, vec, zero
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)

Chain = Tuple[int, ...]
Edge = Tuple[int, int]
Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class Vertex:
    id: int
    basepoint: Vector
    polytope: Polytope


@dataclass(frozen=True)
class Section:
    # f_ij：梯度与在 q_j 处的取值
    gradient: Vector
    value_at_target: Fraction

    def value_at(self, offset_from_target: Sequence) -> Fraction:
        return self.value_at_target + dot(self.gradient, offset_from_target)


@dataclass(frozen=True)
class ChartDomain:
    """Chart domain of a chain: the intersection of its polytopes around q_{max I}."""

    chain: Chain
    region: Region

    @property
    def anchor(self) -> int:
        return self.chain[-1]

    def min_pairing(self, lattice_class: Sequence) -> Fraction:
        return self.region.min_pairing(lattice_class)


@dataclass
class ChartAtlas:
    """
    Triangulated integral affine torus with chart and section data.

    - Configuration
      - dimension: n.
      - vertices: Vertex records; ids form the ordered label set.
      - simplices: sorted vertex tuples.
      - sections: (i, j) with i < j -> Section; missing edges are zero.
      - sign_cocycle: (i, j, k) -> 0 | 1; missing triples are 0.

    - Behavior
      - Treated as immutable after construction; chains and domains are cached.

    - Usage Notes
      - Use atlas_validate() before building chart rings on user input.
    """

    dimension: int
    vertices: Tuple[Vertex, ...]
    simplices: Tuple[Chain, ...]
    sections: Dict[Edge, Section] = field(default_factory=dict)
    sign_cocycle: Dict[Triple, int] = field(default_factory=dict)
    base_field: BaseField = RATIONALS
    lattice_denominator: int = 1
    name: str = "atlas"
    _domain_cache: Dict[Chain, ChartDomain] = field(default_factory=dict, init=False, repr=False, compare=False)
    _chain_cache: Dict[int, List[Chain]] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.vertices = tuple(sorted(self.vertices, key=lambda v: v.id))
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate vertex ids")
        self._by_id = {v.id: v for v in self.vertices}
        normalized = []
        for simplex in self.simplices:
            ordered = tuple(sorted(simplex))
            if len(set(ordered)) != len(ordered):
                raise ValidationError(f"simplex {list(simplex)} repeats a vertex", location=simplex)
            missing = [v for v in ordered if v not in self._by_id]
            if missing:
                raise ValidationError(f"simplex {list(simplex)} uses unknown vertices {missing}", location=simplex)
            normalized.append(ordered)
        self.simplices = tuple(sorted(set(normalized), key=lambda c: (len(c), c)))
        if self.lattice_denominator < 1:
            raise ValidationError("lattice denominator must be >= 1")

    # ------------------------------------------------------------------ Basic data

    @property
    def vertex_ids(self) -> Tuple[int, ...]:
        return tuple(v.id for v in self.vertices)

    def vertex(self, i: int) -> Vertex:
        try:
            return self._by_id[i]
        except KeyError as exc:
            raise ValidationError(f"unknown vertex {i}") from exc

    def basepoint(self, i: int) -> Vector:
        return self.vertex(i).basepoint

    def offset(self, i: int, j: int) -> Vector:
        # q_j 相对 q_i 的位置（环面最近代表元）
        if i == j:
            return zero(self.dimension)
        return torus_representative(sub(self.basepoint(j), self.basepoint(i)))

    def section(self, i: int, j: int) -> Section:
        if i == j:
            return Section(zero(self.dimension), Fraction(0))
        if i > j:
            raise ValidationError(f"sections are indexed by ordered edges, got ({i}, {j})")
        return self.sections.get((i, j), Section(zero(self.dimension), Fraction(0)))

    def sign(self, i: int, j: int, k: int) -> int:
        return self.sign_cocycle.get((i, j, k), 0) % 2

    def relative_polytope(self, i: int, anchor: int) -> Polytope:
        # P_i 平移到以 q_anchor 为原点的坐标
        vertex = self.vertex(i)
        return vertex.polytope.translate(sub(zero(self.dimension), add(vertex.basepoint, self.offset(i, anchor))))

    # ------------------------------------------------------------------ Chains

    def max_simplices(self) -> List[Chain]:
        out = []
        for s in self.simplices:
            if not any(set(s) < set(t) for t in self.simplices):
                out.append(s)
        return out

    def is_chain(self, chain: Sequence[int]) -> bool:
        members = set(chain)
        if not members or tuple(sorted(members)) != tuple(chain):
            return False
        if len(members) == 1:
            return next(iter(members)) in self._by_id
        return any(members <= set(s) for s in self.simplices)

    def chains(self, max_len: Optional[int] = None) -> List[Chain]:
        limit = max_len if max_len is not None else self.dimension + 1
        if limit not in self._chain_cache:
            from mirlib.core.affine.chains import enumerate_chains

            self._chain_cache[limit] = enumerate_chains(self, limit)
        return list(self._chain_cache[limit])

    def domain(self, chain: Sequence[int]) -> ChartDomain:
        chain = tuple(chain)
        if chain not in self._domain_cache:
            if not self.is_chain(chain):
                raise ValidationError(f"{list(chain)} is not a chain of the atlas", location=chain)
            anchor = chain[-1]
            region = intersect_all([self.relative_polytope(i, anchor) for i in chain])
            self._domain_cache[chain] = ChartDomain(chain=chain, region=region)
        return self._domain_cache[chain]

    def label(self, chain: Sequence[int]) -> str:
        return format_chain(chain)


# ----------------------------------------------------------------- Validation


def _simplex_offsets(atlas: ChartAtlas, simplex: Chain, i: int) -> List[Vector]:
    base = atlas.basepoint(i)
    return [add(base, atlas.offset(i, k)) for k in simplex]


def atlas_validate(atlas: ChartAtlas, *, strict_nesting: bool = False) -> CheckReport:
    """Check every atlas invariant, reporting each violation with its cell."""
    report = CheckReport(name="atlas")
    n = atlas.dimension

    for simplex in atlas.max_simplices():
        if len(simplex) != n + 1:
            report.fail(
                "simplex_dimension",
                f"maximal simplex has {len(simplex)} vertices, expected {n + 1}",
                location=simplex,
            )

    for vertex in atlas.vertices:
        if len(vertex.basepoint) != n or vertex.polytope.dimension != n:
            report.fail("dimension_mismatch", "basepoint or polytope has the wrong dimension", location=(vertex.id,))
            continue
        if not vertex.polytope.contains_point(vertex.basepoint):
            report.fail("basepoint_outside_chart", "q_i not in P_i", location=(vertex.id,))

    # 单形的几何实现需落在其每个顶点的图卡中
    for simplex in atlas.simplices:
        for i in simplex:
            points = _simplex_offsets(atlas, simplex, i)
            if not all(atlas.vertex(i).polytope.contains_point(p) for p in points):
                report.fail(
                    "simplex_not_in_chart",
                    f"simplex not in chart P_{i}",
                    location=simplex,
                    witness={"chart": i},
                )
        for i, j, k in itertools.combinations(simplex, 3):
            if add(atlas.offset(i, j), atlas.offset(j, k)) != atlas.offset(i, k):
                report.fail("lift_inconsistent", "torus offsets do not compose", location=(i, j, k))

    for simplex in atlas.simplices:
        for i, j in itertools.combinations(simplex, 2):
            inner = atlas.relative_polytope(j, i)
            outer = atlas.relative_polytope(i, i)
            if not outer.contains(inner):
                if strict_nesting:
                    report.fail("nesting", f"P_{j} not contained in P_{i}", location=(i, j))
                else:
                    report.annotate("warning", f"P_{j} not contained in P_{i}", code="nesting", location=(i, j))

    edges = {e for s in atlas.simplices for e in itertools.combinations(s, 2)}
    for edge, section in atlas.sections.items():
        if edge not in edges:
            report.fail("unknown_edge", "section data on an edge outside the triangulation", location=edge)
        elif len(section.gradient) != n:
            report.fail("dimension_mismatch", "section gradient has the wrong dimension", location=edge)

    triples = sorted({t for s in atlas.simplices for t in itertools.combinations(s, 3)})
    for i, j, k in triples:
        differential = add(sub(atlas.section(i, j).gradient, atlas.section(i, k).gradient), atlas.section(j, k).gradient)
        if not is_integral(differential):
            report.fail(
                "non_integral_differential",
                "non-integral cocycle differential",
                location=(i, j, k),
                witness=[str(c) for c in differential],
            )
        value = (
            atlas.section(i, j).value_at(atlas.offset(j, k))
            + atlas.section(j, k).value_at_target
            - atlas.section(i, k).value_at_target
        )
        if not on_lattice(value, atlas.lattice_denominator):
            report.annotate(
                "warning",
                f"cocycle exponent {value} leaves the lattice (1/{atlas.lattice_denominator})Z",
                code="off_lattice",
                location=(i, j, k),
            )

    triple_set = set(triples)
    for triple, value in atlas.sign_cocycle.items():
        if triple not in triple_set:
            report.fail("unknown_triple", "sign cochain on a triple outside the triangulation", location=triple)
        elif value not in (0, 1):
            report.fail("sign_value", "sign cochain values must be 0 or 1", location=triple)

    for quad in sorted({q for s in atlas.simplices for q in itertools.combinations(s, 4)}):
        if sign_coboundary(atlas, quad) != 0:
            report.fail("sign_not_cocycle", "sign cochain is not a cocycle", location=quad)

    report.annotate(
        "info",
        "open-star containment is checked as closed containment of simplices",
        code="closed_star",
    )
    _logger.debug("validated atlas %s: %d failures", atlas.name, len(report.failures))
    return report


def sign_coboundary(atlas: ChartAtlas, quad: Sequence[int]) -> int:
    # (δv)_{ijkl} = v_jkl − v_ikl + v_ijl − v_ijk (mod 2)
    i, j, k, l = quad
    return (atlas.sign(j, k, l) + atlas.sign(i, k, l) + atlas.sign(i, j, l) + atlas.sign(i, j, k)) % 2


def edges_of(atlas: ChartAtlas) -> List[Edge]:
    return sorted({e for s in atlas.simplices for e in itertools.combinations(s, 2)})


def triples_of(atlas: ChartAtlas) -> List[Triple]:
    return sorted({t for s in atlas.simplices for t in itertools.combinations(s, 3)})


def with_updates(
    atlas: ChartAtlas,
    *,
    sections: Optional[Mapping[Edge, Section]] = None,
    sign_cocycle: Optional[Mapping[Triple, int]] = None,
    vertices: Optional[Iterable[Vertex]] = None,
) -> ChartAtlas:
    """Copy of the atlas with replaced section, sign or vertex data."""
    return ChartAtlas(
        dimension=atlas.dimension,
        vertices=tuple(vertices) if vertices is not None else atlas.vertices,
        simplices=atlas.simplices,
        sections=dict(sections) if sections is not None else dict(atlas.sections),
        sign_cocycle=dict(sign_cocycle) if sign_cocycle is not None else dict(atlas.sign_cocycle),
        base_field=atlas.base_field,
        lattice_denominator=atlas.lattice_denominator,
        name=atlas.name,
    )
