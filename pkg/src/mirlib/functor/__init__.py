"""Formal count ledgers and the checks of the functors between Floer and Cech sides."""

from .ainfty import ainfty_functor_check, ainfty_relations_check, functor_residual, relation_residual
from .checks import FloerHomotopy, FunctorData, build_functor, composition_check, functor_check
from .floer import FloerChain, FloerComplex, floer_complex
from .intersections import IntersectionData, IntersectionPoint, PairGenerator, intersections_from_dict, load_intersections
from .ledger import (
    FormalCountLedger,
    LedgerEntry,
    LedgerFamily,
    admissible_entries,
    degree_defect,
    ledger_from_dict,
    ledger_validate,
    load_ledger,
)
from .maps import (
    CechMap,
    FloerMap,
    cech_chain_check,
    cech_map_from_counts,
    floer_chain_check,
    floer_map_from_counts,
    sheaf_from_counts,
)

__all__ = [
    "ainfty_functor_check",
    "ainfty_relations_check",
    "functor_residual",
    "relation_residual",
    "FloerHomotopy",
    "FunctorData",
    "build_functor",
    "composition_check",
    "functor_check",
    "FloerChain",
    "FloerComplex",
    "floer_complex",
    "IntersectionData",
    "IntersectionPoint",
    "PairGenerator",
    "intersections_from_dict",
    "load_intersections",
    "FormalCountLedger",
    "LedgerEntry",
    "LedgerFamily",
    "admissible_entries",
    "degree_defect",
    "ledger_from_dict",
    "ledger_validate",
    "load_ledger",
    "CechMap",
    "FloerMap",
    "cech_chain_check",
    "cech_map_from_counts",
    "floer_chain_check",
    "floer_map_from_counts",
    "sheaf_from_counts",
]
