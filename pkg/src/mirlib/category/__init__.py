"""The DG category of twisted sheaves of perfect modules on a chart atlas."""

from .barcode import Barcode, cohomology_barcode, eliminate
from .conventions import g_conversion_factor, internal_structure_map, equation_structure_map
from .hom_complex import HomBasisElement, HomComplex, hom_complex
from .line_bundle import compatible_transitions, gauge_transform, line_bundle
from .matrix import ChartMatrix
from .morphism import (
    SheafMorphism,
    compose,
    delta,
    identity_morphism,
    mu1,
    mu2,
    random_morphism,
    structure_morphism,
    zero_morphism,
)
from .sheaf import Generator, TwistedSheaf, load_sheaf, save_sheaf, sheaf_from_dict, sheaf_to_dict, sheaf_validate

__all__ = [
    "Barcode",
    "cohomology_barcode",
    "eliminate",
    "g_conversion_factor",
    "internal_structure_map",
    "equation_structure_map",
    "HomBasisElement",
    "HomComplex",
    "hom_complex",
    "compatible_transitions",
    "gauge_transform",
    "line_bundle",
    "ChartMatrix",
    "SheafMorphism",
    "compose",
    "delta",
    "identity_morphism",
    "mu1",
    "mu2",
    "random_morphism",
    "structure_morphism",
    "zero_morphism",
    "Generator",
    "TwistedSheaf",
    "load_sheaf",
    "save_sheaf",
    "sheaf_from_dict",
    "sheaf_to_dict",
    "sheaf_validate",
]
