"""
Random number generation helpers.

Responsibilities
  - Centralize RNG creation and seeding (CLI --seed, MIRROR_ATLAS_SEED).
  - Draw exact lattice rationals for randomized section data and morphisms.

Usage Context
  - Fixture builders and the randomized property suites.

Limitations
  - Relies on numpy Generator behavior for reproducibility.
"""
# 说明：随机数生成辅助工具，统一 RNG 的创建，并提供精确有理数采样。
# 职责：
# - create_rng：封装 numpy Generator 的创建逻辑
# - random_fraction / random_fraction_vector：在 (1/D)Z ∩ [low, high] 上均匀采样精确有理数

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

import numpy as np


def create_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Create a numpy Generator from a seed, SeedSequence, or existing generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_fraction(
    rng: np.random.Generator,
    denominator: int,
    low: Fraction,
    high: Fraction,
) -> Fraction:
    """Uniform draw from (1/denominator)Z intersected with [low, high]."""
    lo = int(np.ceil(Fraction(low) * denominator))
    hi = int(np.floor(Fraction(high) * denominator))
    if hi < lo:
        raise ValueError("empty lattice interval")
    return Fraction(int(rng.integers(lo, hi + 1)), denominator)


def random_fraction_vector(
    rng: np.random.Generator,
    size: int,
    denominator: int,
    low: Fraction,
    high: Fraction,
) -> Tuple[Fraction, ...]:
    return tuple(random_fraction(rng, denominator, low, high) for _ in range(size))

