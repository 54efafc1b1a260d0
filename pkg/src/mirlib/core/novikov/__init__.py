"""Novikov field arithmetic: base fields and truncated scalars."""

from .base_field import RATIONALS, BaseField
from .scalar import INF, NovikovScalar, check_lattice

__all__ = ["RATIONALS", "BaseField", "INF", "NovikovScalar", "check_lattice"]
