"""Integral affine base: atlases, chains, subdivisions and fixtures."""

from .atlas import ChartAtlas, ChartDomain, Section, Vertex, atlas_validate, edges_of, sign_coboundary, triples_of
from .builders import (
    circle_atlas,
    interval_atlas,
    random_sections,
    random_sign_cochain,
    random_sign_cocycle,
    tetrahedron_atlas,
    torus_atlas,
    triangle_atlas,
    with_random_data,
)
from .chains import (
    PairsBarycentricCell,
    barycentric_chains,
    dual_cell_boundary,
    enumerate_chains,
    pairs_barycentric_cells,
    pairs_cells,
    pbs_face_poset,
    top_cell_count,
)
from .geometry import Polytope
from .io import atlas_from_dict, atlas_to_dict, load_atlas, save_atlas

__all__ = [
    "ChartAtlas",
    "ChartDomain",
    "Section",
    "Vertex",
    "atlas_validate",
    "edges_of",
    "sign_coboundary",
    "triples_of",
    "circle_atlas",
    "interval_atlas",
    "random_sections",
    "random_sign_cochain",
    "random_sign_cocycle",
    "tetrahedron_atlas",
    "torus_atlas",
    "triangle_atlas",
    "with_random_data",
    "PairsBarycentricCell",
    "barycentric_chains",
    "dual_cell_boundary",
    "enumerate_chains",
    "pairs_barycentric_cells",
    "pairs_cells",
    "pbs_face_poset",
    "top_cell_count",
    "Polytope",
    "atlas_from_dict",
    "atlas_to_dict",
    "load_atlas",
    "save_atlas",
]
