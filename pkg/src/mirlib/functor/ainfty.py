"""
A-infinity relations of the Floer operations and the functor equation of C.

Responsibilities
  - ainfty_relations_check: sum over (m, n) of (-1)^{mark_n} mu^{d-m+1}(...,
    mu^m(...), a_n, ..., a_1) vanishes on every tuple of generators.
  - ainfty_functor_check: for every arity d,
      mu1_S(C^d(a)) + sum_{d1} mu2_S(C^{d-d1}(...), C^{d1}(...))
        = sum (-1)^{mark_n} C^{d-m+1}(..., mu^m(...), a_n, ..., a_1),
    where mark_n = sum_{i <= n} (|a_i| - 1).

Usage Context
  - functor_check and `mirror functor check`.

Limitations
  - The functor equation is checked for endomorphisms of one sheaf; the
    Floer complex must then be CF(L, L).
  - Tuples run over generators only; arity is capped by max_arity.
"""
# 说明：Floer 运算的 A∞ 关系与 𝒞 的 A∞ 函子方程。
# 职责：
# - ainfty_relations_check：Σ (−1)^{✠_n} μ^{d−m+1}(a_d, …, μ^m(a_{n+m}, …, a_{n+1}), a_n, …, a_1) = 0
# - ainfty_functor_check：μ¹_S(𝒞^d) + Σ μ²_S(𝒞^{d−d1}, 𝒞^{d1}) = Σ (−1)^{✠_n} 𝒞^{d−m+1}(… μ^m …)
# 约定：
# - μ¹_S(T) = (−1)^{|T|} μ¹(T)，μ²_S(S, T) = (−1)^{|T|} S ∘̂ T
# - 输入 [a_d, ..., a_1] 为书写顺序；残差次数为 Σ|a_i| + 2 − d

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, List, Optional, Sequence, Tuple

from mirlib.category.morphism import SheafMorphism, compose, zero_morphism
from mirlib.core.affinoid.cocycle import TwistingCocycle
from mirlib.core.utils.config import get_config
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.functor.floer import FloerChain, FloerComplex
from mirlib.functor.maps import CechMap, resolve_window, seidel_mu1
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)

Labels = Tuple[str, ...]


def seidel_mark(complex_: FloerComplex, labels: Sequence[str], n: int) -> int:
    """Sum of |a_i| - 1 over the last n written inputs a_n, ..., a_1."""
    if n == 0:
        return 0
    return sum(complex_.degree(a) - 1 for a in labels[len(labels) - n :])


def seidel_mu2(left: SheafMorphism, right: SheafMorphism, cocycle: TwistingCocycle) -> SheafMorphism:
    return compose(left, right, cocycle).signed(right.degree)


def _tuples(complex_: FloerComplex, arity: int) -> List[Labels]:
    return list(itertools.product(complex_.labels(), repeat=arity))


def _run(tuples: List[Labels], evaluate: Callable[[Labels], Any], jobs: Optional[int]) -> List[Any]:
    workers = jobs if jobs is not None else get_config().jobs
    if workers > 1 and len(tuples) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(evaluate, tuples))
    return [evaluate(t) for t in tuples]


# ----------------------------------------------------------------- Floer side


def relation_residual(complex_: FloerComplex, labels: Sequence[str]) -> FloerChain:
    labels = tuple(labels)
    d = len(labels)
    basis = [complex_.basis(a) for a in labels]
    total = FloerChain.zero(complex_.base_field)
    arities = set(complex_.arities())
    for m in range(1, d + 1):
        if m not in arities or (d - m + 1) not in arities:
            continue
        for n in range(0, d - m + 1):
            inner = complex_.mu(basis[d - n - m : d - n])
            if inner.is_zero():
                continue
            outer = complex_.mu(basis[: d - n - m] + [inner] + basis[d - n :])
            total = total + outer.signed(seidel_mark(complex_, labels, n))
    return total


def ainfty_relations_check(
    complex_: FloerComplex,
    *,
    max_arity: Optional[int] = None,
    precision: Optional[Any] = None,
    jobs: Optional[int] = None,
) -> CheckReport:
    window = resolve_window(precision)
    top = max_arity if max_arity is not None else get_config().max_arity
    report = CheckReport(name="ainfty_relations")
    checked = 0
    for d in range(1, top + 1):
        tuples = _tuples(complex_, d)
        residuals = _run(tuples, lambda labels: relation_residual(complex_, labels).truncate(window), jobs)
        checked += len(tuples)
        for labels, residual in zip(tuples, residuals):
            if residual.is_zero():
                continue
            report.fail(
                "ainfty_relation",
                f"A-infinity relation of arity {d} fails on {list(labels)}",
                location=labels,
                witness={"arity": d, "residual": residual.to_dict()},
            )
    report.details["max_arity"] = top
    report.details["checked_tuples"] = checked
    return report


# ----------------------------------------------------------------- Functor equation


def functor_residual(cech: CechMap, cocycle: TwistingCocycle, labels: Sequence[str]) -> SheafMorphism:
    labels = tuple(labels)
    complex_ = cech.complex
    d = len(labels)
    degree = sum(complex_.degree(a) for a in labels) + 2 - d
    basis = [complex_.basis(a) for a in labels]

    lhs = zero_morphism(cech.source, cech.target, degree)
    if d in cech.components:
        lhs = lhs + seidel_mu1(cech.component(labels), cocycle)
    for d1 in range(1, d):
        left = cech.component(labels[: d - d1])
        right = cech.component(labels[d - d1 :])
        if left.is_zero() or right.is_zero():
            continue
        lhs = lhs + seidel_mu2(left, right, cocycle)

    rhs = zero_morphism(cech.source, cech.target, degree)
    arities = set(complex_.arities())
    for m in range(1, d + 1):
        if m not in arities or (d - m + 1) not in cech.components:
            continue
        for n in range(0, d - m + 1):
            inner = complex_.mu(basis[d - n - m : d - n])
            if inner.is_zero():
                continue
            chains = basis[: d - n - m] + [inner] + basis[d - n :]
            rhs = rhs + cech.apply(chains, degree).signed(seidel_mark(complex_, labels, n))
    return lhs - rhs


def ainfty_functor_check(
    cech: CechMap,
    cocycle: TwistingCocycle,
    *,
    max_arity: Optional[int] = None,
    precision: Optional[Any] = None,
    jobs: Optional[int] = None,
) -> CheckReport:
    window = resolve_window(precision)
    top = max_arity if max_arity is not None else get_config().max_arity
    report = CheckReport(name="ainfty_functor")
    if cech.source is not cech.target:
        report.annotate("info", "functor equation skipped: source and target sheaves differ", code="skipped")
        report.details["max_arity"] = top
        report.details["checked_tuples"] = 0
        return report
    checked = 0
    for d in range(1, top + 1):
        tuples = _tuples(cech.complex, d)
        residuals = _run(tuples, lambda labels: functor_residual(cech, cocycle, labels).truncate(window), jobs)
        checked += len(tuples)
        for labels, residual in zip(tuples, residuals):
            for chain in residual.support():
                report.fail(
                    "ainfty_functor",
                    f"functor equation of arity {d} fails on {list(labels)} at {format_chain(chain)}",
                    location=chain,
                    witness={
                        "arity": d,
                        "inputs": list(labels),
                        "residual": residual.components[chain].describe(),
                    },
                )
    report.details["max_arity"] = top
    report.details["checked_tuples"] = checked
    _logger.debug("functor equation checked on %d tuples", checked)
    return report
