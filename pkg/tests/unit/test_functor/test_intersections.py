"""
Unit tests for intersection data.
"""
# 说明：交点数据的单元测试。
# 覆盖：自配对、按顶点查找标签、目标膜、重复标签、梯度维数、JSON 往返与错误输入

import pytest

from mirlib.functor import intersections_from_dict, load_intersections
from mirlib.core.exceptions import ValidationError


def test_self_pair_lookup(circle_identity) -> None:
    # 验证 L' = L 时目标膜与源膜共用交点
    _, data = circle_identity
    assert data.self_pair
    assert data.index("target", 1, "a1") == 0
    assert data.point("source", 2, "a2").degree == 0
    assert data.generator_labels() == ["p", "q"]
    assert data.generator("q").degree == 1


def test_unknown_labels(circle_identity) -> None:
    # 验证未知标签、未知生成元与未知膜均报错
    _, data = circle_identity
    with pytest.raises(ValidationError):
        data.index("source", 0, "a1")
    with pytest.raises(ValidationError):
        data.generator("r")
    with pytest.raises(ValidationError):
        data.brane("middle")


def test_target_brane() -> None:
    # 验证给出 target 时两膜分开
    data = intersections_from_dict(
        {
            "source": [{"vertex": 0, "points": [{"label": "x", "degree": 0}]}],
            "target": [{"vertex": 0, "points": [{"label": "y", "degree": 1}]}],
            "pair": [{"label": "g", "degree": 1}],
        }
    )
    assert not data.self_pair
    assert [p.label for p in data.points("target", 0)] == ["y"]
    assert data.points("target", 3) == ()


def test_duplicates_rejected() -> None:
    # 验证同一顶点的重复标签与重复 Floer 生成元被拒绝
    with pytest.raises(ValidationError):
        intersections_from_dict(
            {"source": [{"vertex": 0, "points": [{"label": "x", "degree": 0}, {"label": "x", "degree": 1}]}]}
        )
    with pytest.raises(ValidationError):
        intersections_from_dict({"pair": [{"label": "g", "degree": 0}, {"label": "g", "degree": 1}]})


def test_gradient_dimension() -> None:
    # 验证梯度长度与维数不符时报错
    data = {"source": [{"vertex": 0, "points": [{"label": "x", "degree": 0, "gradient": [1]}]}]}
    with pytest.raises(ValidationError):
        intersections_from_dict(data, dimension=2)


def test_round_trip(circle_identity, tmp_path) -> None:
    # 验证 to_dict 可被重新读取，坏 JSON 与缺字段报错
    _, data = circle_identity
    assert intersections_from_dict(data.to_dict(), 1) == data
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_intersections(broken)
    with pytest.raises(ValidationError):
        intersections_from_dict({"pair": [{"degree": 0}]})
