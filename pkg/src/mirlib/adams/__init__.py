"""Adams paths, Adams cubes, pairs-cell maps, degenerate annuli and gluing."""

from .annuli import (
    FibreComponent,
    FibreDescription,
    degenerate_annulus_fibre,
    face_restriction_compatible,
    face_restriction_failures,
    plain_fibre,
)
from .boundary import BoundaryFacet, ModuliFactor, marked_moduli_boundary
from .cubes import (
    AdamsCube,
    Stratum,
    facet_strata,
    input_cube,
    output_cube,
    plain_cube,
    prism_cube,
    prism_in,
    prism_out,
    projections_commute,
    strata_poset,
    verify_product_decomposition,
)
from .gluing import GLUING_MAPS, GluingParameters, annulus_gluing, cube_gluing_parameters, get_gluing_map, nested_gluing
from .pairs import CellMap, PairsCellMaps, pairs_cell_to_adams, singleton_bijection
from .path import adams_path_eval, face_inclusion, vertex_times

__all__ = [
    "FibreComponent",
    "FibreDescription",
    "degenerate_annulus_fibre",
    "face_restriction_compatible",
    "face_restriction_failures",
    "plain_fibre",
    "BoundaryFacet",
    "ModuliFactor",
    "marked_moduli_boundary",
    "AdamsCube",
    "Stratum",
    "facet_strata",
    "input_cube",
    "output_cube",
    "plain_cube",
    "prism_cube",
    "prism_in",
    "prism_out",
    "projections_commute",
    "strata_poset",
    "verify_product_decomposition",
    "GLUING_MAPS",
    "GluingParameters",
    "annulus_gluing",
    "cube_gluing_parameters",
    "get_gluing_map",
    "nested_gluing",
    "CellMap",
    "PairsCellMaps",
    "pairs_cell_to_adams",
    "singleton_bijection",
    "adams_path_eval",
    "face_inclusion",
    "vertex_times",
]
