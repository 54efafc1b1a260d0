"""Chart rings of the mirror and the twisting cocycle."""

from mirlib.core.affinoid.cocycle import (
    TwistingCocycle,
    alpha_between,
    cocycle_check,
    twisting_cocycle,
)
from mirlib.core.affinoid.element import AffinoidElement

__all__ = [
    "AffinoidElement",
    "TwistingCocycle",
    "alpha_between",
    "cocycle_check",
    "twisting_cocycle",
]
