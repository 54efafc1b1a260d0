"""
Standard atlases and randomized section data.

Responsibilities
  - Build the fixture atlases used across the library and its tests: the
    m-vertex circle, an interval, a single triangle, a single tetrahedron and
    the Freudenthal-triangulated n-torus.
  - Draw random section data with integral cocycle differentials and random
    sign cochains (cocycles or not).

Usage Context
  - Property suites, CLI examples and benchmarks.
"""
# 说明：常用图册与随机截面数据的构造器。
# 职责：
# - circle_atlas / interval_atlas / triangle_atlas / tetrahedron_atlas / torus_atlas
# - random_sections：梯度为 n_ij + (c_j − c_i)（n_ij 为整向量），保证 df_ij + df_jk − df_ik 为整向量
# - random_sign_cocycle / random_sign_cochain：随机上边缘（必为上闭链）或任意随机 0/1 上链

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from mirlib.core.affine.atlas import ChartAtlas, Section, Vertex, edges_of, triples_of, with_updates
from mirlib.core.affine.geometry import Polytope
from mirlib.core.novikov.base_field import RATIONALS, BaseField
from mirlib.core.utils.param_validation import ensure
from mirlib.core.utils.random import create_rng, random_fraction, random_fraction_vector
from mirlib.core.utils.rational import vec


def _box_vertex(vid: int, point: Sequence[Fraction], left: Fraction, right: Fraction) -> Vertex:
    # 每个坐标方向上 [q − left, q + right] 的方体
    corners: List[List[Fraction]] = [[]]
    for c in point:
        corners = [p + [c - left] for p in corners] + [p + [c + right] for p in corners]
    return Vertex(id=vid, basepoint=vec(point), polytope=Polytope.from_points(corners, len(point)))


def circle_atlas(
    m: int = 3,
    *,
    left: Optional[Fraction] = None,
    right: Optional[Fraction] = None,
    base_field: BaseField = RATIONALS,
) -> ChartAtlas:
    """Circle R/Z with basepoints i/m and charts [q - left, q + right] (default 5/(4m) each side)."""
    ensure(m >= 3, "a circle atlas needs at least 3 vertices")
    radius = Fraction(5, 4 * m)
    left = radius if left is None else Fraction(left)
    right = radius if right is None else Fraction(right)
    vertices = [_box_vertex(i, [Fraction(i, m)], left, right) for i in range(m)]
    simplices = [tuple(sorted((i, (i + 1) % m))) for i in range(m)]
    return ChartAtlas(
        dimension=1,
        vertices=tuple(vertices),
        simplices=tuple(simplices),
        base_field=base_field,
        lattice_denominator=m,
        name=f"circle{m}",
    )


def interval_atlas(base_field: BaseField = RATIONALS) -> ChartAtlas:
    """Two vertices 0, 1/3 on the circle joined by a single edge."""
    radius = Fraction(5, 12)
    vertices = [_box_vertex(0, [Fraction(0)], radius, radius), _box_vertex(1, [Fraction(1, 3)], radius, radius)]
    return ChartAtlas(
        dimension=1,
        vertices=tuple(vertices),
        simplices=((0, 1),),
        base_field=base_field,
        lattice_denominator=3,
        name="interval",
    )


def triangle_atlas(base_field: BaseField = RATIONALS) -> ChartAtlas:
    """One 2-simplex {0,1,2} at (0,0), (1/3,0), (1/3,1/3)."""
    radius = Fraction(5, 12)
    points = [(0, 0), (Fraction(1, 3), 0), (Fraction(1, 3), Fraction(1, 3))]
    vertices = [_box_vertex(i, vec(p), radius, radius) for i, p in enumerate(points)]
    return ChartAtlas(
        dimension=2,
        vertices=tuple(vertices),
        simplices=((0, 1, 2),),
        base_field=base_field,
        lattice_denominator=3,
        name="triangle",
    )


def tetrahedron_atlas(base_field: BaseField = RATIONALS) -> ChartAtlas:
    """One 3-simplex {0,1,2,3} along a staircase path of steps 1/3."""
    radius = Fraction(5, 12)
    third = Fraction(1, 3)
    points = [(0, 0, 0), (third, 0, 0), (third, third, 0), (third, third, third)]
    vertices = [_box_vertex(i, vec(p), radius, radius) for i, p in enumerate(points)]
    return ChartAtlas(
        dimension=3,
        vertices=tuple(vertices),
        simplices=((0, 1, 2, 3),),
        base_field=base_field,
        lattice_denominator=3,
        name="tetrahedron",
    )


def torus_atlas(dimension: int = 2, subdivisions: int = 3, base_field: BaseField = RATIONALS) -> ChartAtlas:
    """
    Freudenthal triangulation of the n-torus on an m^n grid.

    Vertex (a_1, ..., a_n) has id sum a_k m^(n-k) and basepoint a/m; charts are
    cubes of half-width 5/(4m). Each grid cube contributes n! simplices.
    """
    m = subdivisions
    ensure(m >= 3, "torus atlases need at least 3 subdivisions")
    ensure(dimension >= 1, "dimension must be positive")
    radius = Fraction(5, 4 * m)

    def vid(point: Sequence[int]) -> int:
        value = 0
        for coord in point:
            value = value * m + (coord % m)
        return value

    vertices = []
    for point in itertools.product(range(m), repeat=dimension):
        vertices.append(_box_vertex(vid(point), [Fraction(c, m) for c in point], radius, radius))
    simplices = set()
    for base in itertools.product(range(m), repeat=dimension):
        for order in itertools.permutations(range(dimension)):
            current = list(base)
            members = [vid(current)]
            for axis in order:
                current[axis] += 1
                members.append(vid(current))
            simplices.add(tuple(sorted(members)))
    return ChartAtlas(
        dimension=dimension,
        vertices=tuple(vertices),
        simplices=tuple(sorted(simplices)),
        base_field=base_field,
        lattice_denominator=m,
        name=f"torus{dimension}x{m}",
    )


# ----------------------------------------------------------------- Random data


def random_sections(
    atlas: ChartAtlas,
    rng: Optional[np.random.Generator] = None,
    *,
    denominator: int = 2,
    spread: int = 1,
) -> Dict[Tuple[int, int], Section]:
    """Section data whose cocycle differentials are integral by construction."""
    rng = create_rng(rng)
    n = atlas.dimension
    shift = {v: random_fraction_vector(rng, n, denominator, Fraction(-1), Fraction(1)) for v in atlas.vertex_ids}
    sections = {}
    for i, j in edges_of(atlas):
        integral = [int(x) for x in rng.integers(-spread, spread + 1, size=n)]
        gradient = tuple(Fraction(a) + shift[j][k] - shift[i][k] for k, a in enumerate(integral))
        value = random_fraction(rng, atlas.lattice_denominator, Fraction(-2), Fraction(2))
        sections[(i, j)] = Section(gradient=gradient, value_at_target=value)
    return sections


def random_sign_cocycle(atlas: ChartAtlas, rng: Optional[np.random.Generator] = None) -> Dict[Tuple[int, int, int], int]:
    # v = δw，w 为边上的随机 0/1 上链
    rng = create_rng(rng)
    w = {e: int(rng.integers(0, 2)) for e in edges_of(atlas)}
    return {(i, j, k): (w[(j, k)] + w[(i, k)] + w[(i, j)]) % 2 for i, j, k in triples_of(atlas)}


def random_sign_cochain(atlas: ChartAtlas, rng: Optional[np.random.Generator] = None) -> Dict[Tuple[int, int, int], int]:
    rng = create_rng(rng)
    return {t: int(rng.integers(0, 2)) for t in triples_of(atlas)}


def with_random_data(
    atlas: ChartAtlas,
    rng: Optional[np.random.Generator] = None,
    *,
    cocycle: bool = True,
) -> ChartAtlas:
    """Atlas copy carrying random sections and a random sign cochain."""
    rng = create_rng(rng)
    sections = random_sections(atlas, rng)
    signs = random_sign_cocycle(atlas, rng) if cocycle else random_sign_cochain(atlas, rng)
    return with_updates(atlas, sections=sections, sign_cocycle=signs)
