"""
Unit tests for sheaves and functor maps built from formal counts.
"""
# 说明：由计数构造的层、𝒞 与 𝒫 的单元测试。
# 覆盖：结构映射与前因子、strip 层的二次方程及逐条删除的失败、𝒞 的分量与链映射、𝒫∘𝒞 与 𝒫 的链映射

import pytest

from mirlib.core.affinoid import twisting_cocycle
from mirlib.core.exceptions import ValidationError
from mirlib.functor import (
    FloerChain,
    cech_chain_check,
    cech_map_from_counts,
    floer_chain_check,
    floer_complex,
    floer_map_from_counts,
    intersections_from_dict,
    load_ledger,
    sheaf_from_counts,
)


def _maps(atlas, ledger, data):
    cocycle = twisting_cocycle(atlas)
    sheaf, _ = sheaf_from_counts(ledger, data, atlas, cocycle)
    complex_ = floer_complex(ledger, data, atlas)
    cech = cech_map_from_counts(ledger, data, complex_, sheaf, sheaf)
    pmap = floer_map_from_counts(ledger, data, complex_, sheaf, sheaf)
    return cocycle, sheaf, complex_, cech, pmap


def test_sheaf_from_continuations(circle3, circle_identity) -> None:
    # 验证 continuation 计数给出平凡线丛
    ledger, data = circle_identity
    sheaf, report = sheaf_from_counts(ledger, data, circle3, twisting_cocycle(circle3))
    assert report.passed, report.to_text()
    assert sheaf.name == "F(source)"
    assert [g.label for g in sheaf.modules[1]] == ["a1"]
    assert sheaf.structure_map((0, 2)).describe() == [["1"]]


def test_prefactor_from_gradients(circle3) -> None:
    # 验证前因子 z^{df - dg_y + dg_x} 进入结构映射
    data = intersections_from_dict(
        {
            "source": [
                {"vertex": 0, "points": [{"label": "x", "degree": 0, "gradient": [1]}]},
                {"vertex": 1, "points": [{"label": "y", "degree": 0}]},
                {"vertex": 2, "points": [{"label": "w", "degree": 0}]},
            ]
        },
        1,
    )
    ledger = load_ledger([{"family": "continuation", "where": [0, 1], "labels": {"input": "x", "output": "y"}}])
    sheaf, _ = sheaf_from_counts(ledger, data, circle3, twisting_cocycle(circle3))
    assert sheaf.structure_map((0, 1)).describe() == [["1*z^{1}"]]


def test_non_integral_prefactor(circle3) -> None:
    # 验证非整前因子报错
    data = intersections_from_dict(
        {
            "source": [
                {"vertex": 0, "points": [{"label": "x", "degree": 0, "gradient": ["1/2"]}]},
                {"vertex": 1, "points": [{"label": "y", "degree": 0}]},
                {"vertex": 2, "points": [{"label": "w", "degree": 0}]},
            ]
        },
        1,
    )
    ledger = load_ledger([{"family": "continuation", "where": [0, 1], "labels": {"input": "x", "output": "y"}}])
    with pytest.raises(ValidationError):
        sheaf_from_counts(ledger, data, circle3, twisting_cocycle(circle3))


def test_strip_sheaf(interval, interval_strip) -> None:
    # 验证带微分的秩二层满足二次方程
    ledger, data = interval_strip
    sheaf, report = sheaf_from_counts(ledger, data, interval, twisting_cocycle(interval))
    assert report.passed, report.to_text()
    assert sheaf.structure_map((0,)).describe() == [["0", "0"], ["1", "0"]]
    assert sheaf.structure_map((0, 1)).describe() == [["1", "0"], ["0", "-1"]]


@pytest.mark.parametrize("index", [0, 1, 2, 3])
def test_strip_sheaf_needs_every_count(interval, interval_strip, index) -> None:
    # 验证删去任一计数后 (0,1) 上的方程失败
    ledger, data = interval_strip
    _, report = sheaf_from_counts(ledger.without(index), data, interval, twisting_cocycle(interval))
    assert report.failing_locations("sheaf_equation") == [(0, 1)]


def test_cech_components(circle3, circle_identity) -> None:
    # 验证 𝒞(p) 为恒等、𝒞(q) 为 (0,1) 上的一次分量
    ledger, data = circle_identity
    _, _, _, cech, _ = _maps(circle3, ledger, data)
    identity = cech.component(("p",))
    assert identity.degree == 0
    assert sorted(identity.components) == [(0,), (1,), (2,)]
    shifted = cech.component(("q",))
    assert shifted.degree == 1
    assert sorted(shifted.components) == [(0, 1)]
    assert cech.arities() == [1]


def test_cech_degree_mismatch(circle3, circle_identity) -> None:
    # 验证 apply 的次数不符时报错
    ledger, data = circle_identity
    _, _, complex_, cech, _ = _maps(circle3, ledger, data)
    with pytest.raises(ValidationError):
        cech(complex_.basis("q"), 0)


def test_chain_maps(circle3, circle_identity) -> None:
    # 验证 𝒞 与 𝒫 都是链映射，且 𝒫∘𝒞 = Id
    ledger, data = circle_identity
    cocycle, _, complex_, cech, pmap = _maps(circle3, ledger, data)
    assert cech_chain_check(cech, cocycle).passed
    report = floer_chain_check(pmap, cocycle, radius=1)
    assert report.passed, report.to_text()
    assert report.details["checked_basis_elements"] == 18
    for label in ("p", "q"):
        image = pmap(cech(complex_.basis(label), complex_.degree(label)))
        assert image.equals_up_to(FloerChain.generator(label))


def test_floer_map_detects_broken_counts(circle3, circle_identity) -> None:
    # 验证改变一条 output 计数后 𝒫 不再是链映射
    ledger, data = circle_identity
    cocycle, _, _, _, pmap = _maps(circle3, ledger.with_count(9, 1), data)
    report = floer_chain_check(pmap, cocycle, radius=0)
    assert set(report.failure_codes()) == {"floer_chain_map"}
    assert report.failing_locations() == [(0,), (2,)]
