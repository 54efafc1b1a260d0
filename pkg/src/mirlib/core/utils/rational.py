"""
Exact rational vector helpers.

Small functions over tuples of Fractions used by the affine geometry,
chart rings and Adams combinatorics. Vectors are plain tuples so they hash.
"""
# 说明：精确有理数向量工具：内积、加减、数乘、整性判断、格点判断与环面最近代表元。

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Vector = Tuple[Fraction, ...]
IntVector = Tuple[int, ...]


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def add(a: Sequence, b: Sequence) -> Vector:
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> Vector:
    return tuple(Fraction(x) - Fraction(y) for x, y in zip(a, b))


def scale(c, a: Sequence) -> Vector:
    return tuple(Fraction(c) * Fraction(x) for x in a)


def neg(a: Sequence) -> Vector:
    return tuple(-Fraction(x) for x in a)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def is_integral(a: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in a)


def to_int_vector(a: Sequence) -> IntVector:
    if not is_integral(a):
        raise ValueError(f"vector {a} is not integral")
    return tuple(int(Fraction(x)) for x in a)


def on_lattice(value, denominator: int) -> bool:
    # value ∈ (1/D)Z
    return (Fraction(value) * denominator).denominator == 1


def lattice_ceil(value, denominator: int) -> Fraction:
    # (1/D)Z 中不小于 value 的最小元
    return Fraction(math.ceil(Fraction(value) * denominator), denominator)


def torus_representative(a: Sequence) -> Vector:
    # R^n/Z^n 中的最近代表元，各坐标落在 [-1/2, 1/2)
    out = []
    for x in a:
        x = Fraction(x)
        out.append(x - math.floor(x + Fraction(1, 2)))
    return tuple(out)
