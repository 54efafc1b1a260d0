"""
Compactified Adams cubes and their strata posets.

Responsibilities
  - Model the plain cube on K \\ {min K, max K}, the prism cubes on
    K_- x {-} u K_+ x {+}, and the input / output cubes on nested sequences.
  - Enumerate strata (pairs I within J), their face order and the product
    decomposition of each stratum into smaller cubes.
  - Provide the coordinate projections f_{I within J} and check that they
    commute along nested strata.

Usage Context
  - The boundary families, the pairs-cell maps and the CLI `adams strata`
    command all start from these cubes.

Limitations
  - Purely combinatorial: points are rational coordinate tuples, strata are
    label sets; no smooth structure is represented.
"""
# 说明：Adams 立方体（普通 / 棱柱 / 输入 / 输出）及其层偏序。
# 职责：
# - AdamsCube：有序标签集 labels 与固定标签 fixed；坐标为 labels \ fixed
# - Stratum：层 (I ⊂ J)，维数 |J \ I|；面关系 I ⊆ I' ⊆ J' ⊆ J
# - product_factors：按引理把层分解为更小立方体的乘积
# - strata_poset：networkx.DiGraph（传递约简后的覆盖关系，边由面指向上层）
# - project / projections_commute：坐标投影 f_{I⊂J} 及其交换性检查
# 约定：
# - 棱柱标签写作 (符号, 顶点)，符号为 ASCII "+" / "-"，元组字典序恰为 (+,i) < (-,j)
# - 嵌套序列的标签为链（按包含关系递增排列）

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from mirlib.core.exceptions import ValidationError
from mirlib.core.utils.logging import format_chain, get_logger

_logger = get_logger(__name__)

Label = Hashable
PrismLabel = Tuple[str, int]

PLAIN = "plain"
PRISM = "prism"
INPUT = "input"
OUTPUT = "output"
_KINDS = (PLAIN, PRISM, INPUT, OUTPUT)


# ----------------------------------------------------------------- Label rendering


def format_label(label: Label) -> str:
    if isinstance(label, tuple) and len(label) == 2 and label[0] in ("+", "-"):
        return f"{label[1]}{'+' if label[0] == '+' else '−'}"
    if isinstance(label, tuple):
        return format_chain(label)
    return str(label)


def format_labels(labels: Iterable[Label]) -> str:
    labels = list(labels)
    if labels and isinstance(labels[0], tuple) and labels[0] and isinstance(labels[0][0], int):
        return "(" + "⊂".join(format_chain(c) for c in labels) + ")"
    if labels and isinstance(labels[0], int) and all(0 <= x <= 9 for x in labels):
        return "".join(str(x) for x in labels)
    return ",".join(format_label(x) for x in labels)


# ----------------------------------------------------------------- Strata


@dataclass(frozen=True)
class Stratum:
    """Stratum labelled by I within J; both stored in the cube's label order."""

    inner: Tuple[Label, ...]
    outer: Tuple[Label, ...]

    @property
    def dimension(self) -> int:
        return len(self.outer) - len(self.inner)

    @property
    def free(self) -> Tuple[Label, ...]:
        inner = set(self.inner)
        return tuple(x for x in self.outer if x not in inner)

    def is_face_of(self, other: "Stratum") -> bool:
        return set(other.inner) <= set(self.inner) and set(self.outer) <= set(other.outer)

    def label(self) -> str:
        return f"{format_labels(self.inner)}⊂{format_labels(self.outer)} [{self.dimension}]"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "inner": [format_label(x) for x in self.inner],
            "outer": [format_label(x) for x in self.outer],
            "dimension": self.dimension,
        }


# ----------------------------------------------------------------- Cubes


@dataclass(frozen=True)
class AdamsCube:
    """
    Compactified Adams cube.

    - Configuration
      - kind: plain | prism | input | output.
      - labels: the ordered label set (vertices, prism labels or chains).

    - Behavior
      - plain / prism: coordinates are labels minus the first and last.
      - input: coordinates are labels minus the last (K); output: minus the
        first (K_0).
      - A coordinate equal to 0 drops the label from J, equal to 1 puts it
        in I.
    """

    kind: str
    labels: Tuple[Label, ...]

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValidationError(f"unknown cube kind '{self.kind}'")
        if not self.labels:
            raise ValidationError("a cube needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("cube labels repeat")
        if self.kind in (INPUT, OUTPUT):
            for a, b in zip(self.labels, self.labels[1:]):
                if not set(a) < set(b):
                    raise ValidationError(
                        f"{format_labels(self.labels)} is not strictly nested", location=tuple(self.labels)
                    )
        elif list(self.labels) != sorted(self.labels):
            raise ValidationError(f"labels {list(self.labels)} are not in increasing order")

    # ------------------------------------------------------------------ shape

    @property
    def fixed(self) -> Tuple[Label, ...]:
        if self.kind == INPUT:
            return (self.labels[-1],)
        if self.kind == OUTPUT:
            return (self.labels[0],)
        if len(self.labels) == 1:
            return self.labels
        return (self.labels[0], self.labels[-1])

    @property
    def coordinates(self) -> Tuple[Label, ...]:
        fixed = set(self.fixed)
        return tuple(x for x in self.labels if x not in fixed)

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    def order(self, subset: Iterable[Label]) -> Tuple[Label, ...]:
        members = set(subset)
        return tuple(x for x in self.labels if x in members)

    def name(self) -> str:
        suffix = {INPUT: ";in", OUTPUT: ";ou"}.get(self.kind, "")
        return f"A_{{{format_labels(self.labels)}{suffix}}}"

    # ------------------------------------------------------------------ strata

    def top_stratum(self) -> Stratum:
        return Stratum(inner=self.fixed, outer=self.labels)

    def strata(self) -> List[Stratum]:
        out = []
        coords = self.coordinates
        # 每个坐标取 0（不在 J 中）、自由、1（在 I 中）
        for states in itertools.product((0, None, 1), repeat=len(coords)):
            inner = set(self.fixed) | {c for c, s in zip(coords, states) if s == 1}
            outer = set(self.fixed) | {c for c, s in zip(coords, states) if s != 0}
            out.append(Stratum(inner=self.order(inner), outer=self.order(outer)))
        return sorted(out, key=lambda s: (-s.dimension, self._index_key(s)))

    def _index_key(self, stratum: Stratum) -> Tuple:
        index = {x: k for k, x in enumerate(self.labels)}
        return (tuple(index[x] for x in stratum.outer), tuple(index[x] for x in stratum.inner))

    def is_stratum(self, stratum: Stratum) -> bool:
        inner, outer = set(stratum.inner), set(stratum.outer)
        return set(self.fixed) <= inner <= outer <= set(self.labels)

    def stratum_of(self, point: Sequence[Fraction]) -> Stratum:
        """The open stratum containing a point of the cube."""
        point = self.check_point(point)
        inner = set(self.fixed) | {c for c, r in zip(self.coordinates, point) if r == 1}
        outer = set(self.fixed) | {c for c, r in zip(self.coordinates, point) if r != 0}
        return Stratum(inner=self.order(inner), outer=self.order(outer))

    def check_point(self, point: Sequence[Any]) -> Tuple[Fraction, ...]:
        values = tuple(Fraction(r) for r in point)
        if len(values) != self.dimension:
            raise ValidationError(f"{self.name()} has {self.dimension} coordinates, got {len(values)}")
        if any(r < 0 or r > 1 for r in values):
            raise ValidationError("cube coordinates must lie in [0, 1]")
        return values

    def vertices(self) -> List[Tuple[Fraction, ...]]:
        return [tuple(Fraction(v) for v in bits) for bits in itertools.product((0, 1), repeat=self.dimension)]

    def center(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(1, 2) for _ in self.coordinates)

    # ------------------------------------------------------------------ product decompositions

    def product_factors(self, stratum: Stratum) -> List["AdamsCube"]:
        """Factor cubes of a stratum, listed from the top (max) factor down."""
        if not self.is_stratum(stratum):
            raise ValidationError(f"{stratum.label()} is not a stratum of {self.name()}")
        if self.kind in (PLAIN, PRISM):
            return _segments(stratum.outer, stratum.inner) or [AdamsCube(self.kind, stratum.outer)]
        inner, outer = list(stratum.inner), list(stratum.outer)
        if self.kind == INPUT:
            # I_0 = vI 中最小的成员
            pivot = outer.index(inner[0])
            upper = outer[pivot:]
            return _segments(tuple(upper), tuple(inner)) + [AdamsCube(INPUT, tuple(outer[: pivot + 1]))]
        pivot = outer.index(inner[-1])
        lower = outer[: pivot + 1]
        return [AdamsCube(OUTPUT, tuple(outer[pivot:]))] + _segments(tuple(lower), tuple(inner))

    # ------------------------------------------------------------------ projections

    def project(self, point: Mapping[Label, Fraction], stratum: Stratum) -> Dict[Label, Fraction]:
        """f_{I within J}: keep the coordinates labelled by J minus I."""
        return {label: point[label] for label in stratum.free}

    def as_mapping(self, point: Sequence[Any]) -> Dict[Label, Fraction]:
        return dict(zip(self.coordinates, self.check_point(point)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "labels": [format_label(x) for x in self.labels],
            "dimension": self.dimension,
        }


def _segments(outer: Tuple[Label, ...], cuts: Tuple[Label, ...]) -> List[AdamsCube]:
    # 在 I 的相邻元素处切分 J，得到从顶部向下排列的普通立方体因子
    positions = [outer.index(c) for c in cuts]
    positions.sort()
    factors = []
    for a, b in zip(positions, positions[1:]):
        factors.append(AdamsCube(PLAIN, tuple(outer[a : b + 1])))
    return list(reversed(factors))


# ----------------------------------------------------------------- Constructors


def plain_cube(labels: Sequence[Label]) -> AdamsCube:
    return AdamsCube(PLAIN, tuple(sorted(labels)))


def prism_cube(k_minus: Iterable[int], k_plus: Iterable[int]) -> AdamsCube:
    """Cube on K_- x {-} u K_+ x {+}, ordered with (+, i) < (-, j)."""
    labels = [("+", v) for v in sorted(set(k_plus))] + [("-", v) for v in sorted(set(k_minus))]
    return AdamsCube(PRISM, tuple(labels))


def prism_in(chain: Sequence[int], inner: Sequence[int]) -> AdamsCube:
    # K^in_I = (K^≥_{max I} × {−}, K^≤_{min I} × {+})
    chain = sorted(chain)
    top, bottom = max(inner), min(inner)
    return prism_cube([k for k in chain if k >= top], [k for k in chain if k <= bottom])


def prism_out(chain: Sequence[int], inner: Sequence[int]) -> AdamsCube:
    # K^ou_I = (K^≤_{min I} × {−}, K^≥_{max I} × {+})
    chain = sorted(chain)
    top, bottom = max(inner), min(inner)
    return prism_cube([k for k in chain if k <= bottom], [k for k in chain if k >= top])


def input_cube(flag: Sequence[Sequence[int]]) -> AdamsCube:
    return AdamsCube(INPUT, tuple(tuple(c) for c in flag))


def output_cube(flag: Sequence[Sequence[int]]) -> AdamsCube:
    return AdamsCube(OUTPUT, tuple(tuple(c) for c in flag))


# ----------------------------------------------------------------- Posets


def strata_poset(cube: AdamsCube) -> nx.DiGraph:
    """Hasse diagram of the strata, each node annotated with its product factors."""
    strata = cube.strata()
    order = nx.DiGraph()
    order.add_nodes_from(strata)
    for face, coface in itertools.permutations(strata, 2):
        if face.is_face_of(coface):
            order.add_edge(face, coface)
    hasse = nx.transitive_reduction(order)
    for stratum in strata:
        hasse.add_node(
            stratum,
            dim=stratum.dimension,
            label=stratum.label(),
            factors=[f.name() for f in cube.product_factors(stratum)],
        )
    _logger.debug("strata poset of %s: %d strata", cube.name(), len(strata))
    return hasse


def facet_strata(cube: AdamsCube) -> List[Stratum]:
    return [s for s in cube.strata() if s.dimension == cube.dimension - 1]


def verify_product_decomposition(cube: AdamsCube, stratum: Stratum) -> bool:
    """Check that the faces of a stratum form the product of its factors' strata posets."""
    faces = [s for s in cube.strata() if s.is_face_of(stratum)]
    down = strata_poset(cube).subgraph(faces)
    graphs = [strata_poset(f) for f in cube.product_factors(stratum)]
    product = reduce(nx.cartesian_product, graphs)
    if down.number_of_nodes() != product.number_of_nodes():
        return False
    return nx.is_isomorphic(_bare(down), _bare(product))


def _bare(graph: nx.DiGraph) -> nx.DiGraph:
    bare = nx.DiGraph()
    bare.add_nodes_from(graph.nodes())
    bare.add_edges_from(graph.edges())
    return bare


def projections_commute(cube: AdamsCube, points: Optional[Sequence[Sequence[Any]]] = None) -> List[Tuple[Stratum, Stratum]]:
    """Pairs of nested strata on which f_{I' within J'} o f_{I within J} differs from f_{I' within J'}."""
    samples = list(points) if points is not None else cube.vertices() + [cube.center()]
    strata = cube.strata()
    failures = []
    for point in samples:
        mapping = cube.as_mapping(point)
        for big in strata:
            through = cube.project(mapping, big)
            for small in strata:
                if small.is_face_of(big) and cube.project(through, small) != cube.project(mapping, small):
                    failures.append((big, small))
    return failures
