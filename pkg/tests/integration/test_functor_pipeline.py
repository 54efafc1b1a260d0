"""
Integration tests for the functor check from count files.
"""
# 说明：从形式计数文件到函子检查报告的端到端测试。
# 覆盖：
# - 恒等与翻转夹具经命令行全部通过
# - 修改后的计数写回文件后以退出码 1 报告具体失败项
# - 交点数据可单独经 --intersections 传入

import json

from mirlib.cli import main
from mirlib.core.affine import circle_atlas, save_atlas, triangle_atlas
from mirlib.functor import load_ledger


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def _counts(data_dir, name):
    return json.loads((data_dir / name).read_text(encoding="utf-8"))


def test_flip_passes_and_breaks(data_dir, tmp_path, capsys) -> None:
    # 验证翻转夹具通过；output 计数改为 +1 后仅 composition 失败
    atlas_file = str(save_atlas(triangle_atlas(), tmp_path / "triangle.json"))
    data = _counts(data_dir, "triangle_flip_counts.json")
    good = tmp_path / "good.json"
    good.write_text(json.dumps(data), encoding="utf-8")
    argv = ["functor", "check", "--atlas", atlas_file, "--radius", "0", "--format", "json"]
    assert main(argv + ["--counts", str(good)]) == 0
    assert _json(capsys)["status"] == "PASS"

    broken = load_ledger(data).with_count(6, 1).to_dict()
    broken["intersections"] = data["intersections"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(broken), encoding="utf-8")
    assert main(argv + ["--counts", str(bad)]) == 1
    payload = _json(capsys)
    assert payload["status"] == "FAIL"
    assert payload["details"]["status"]["composition"] == "FAIL"
    assert payload["details"]["status"]["ledger"] == "PASS"


def test_separate_intersections_file(data_dir, tmp_path, capsys) -> None:
    # 验证交点数据单独成文件时结果不变
    atlas_file = str(save_atlas(circle_atlas(3), tmp_path / "circle.json"))
    data = _counts(data_dir, "circle_identity_counts.json")
    intersections = tmp_path / "intersections.json"
    intersections.write_text(json.dumps(data.pop("intersections")), encoding="utf-8")
    counts = tmp_path / "counts.json"
    counts.write_text(json.dumps(data), encoding="utf-8")
    argv = [
        "functor", "check", "--atlas", atlas_file, "--counts", str(counts),
        "--intersections", str(intersections), "--radius", "0",
    ]
    assert main(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "ledger: PASS"
    assert all(line.endswith(": PASS") for line in lines)


def test_missing_intersections_exit_2(data_dir, tmp_path, capsys) -> None:
    # 验证既无内嵌也无单独交点数据时返回 2
    atlas_file = str(save_atlas(circle_atlas(3), tmp_path / "circle.json"))
    data = _counts(data_dir, "circle_identity_counts.json")
    del data["intersections"]
    counts = tmp_path / "counts.json"
    counts.write_text(json.dumps(data), encoding="utf-8")
    assert main(["functor", "check", "--atlas", atlas_file, "--counts", str(counts)]) == 2
    assert "intersection" in _json(capsys)["error"]["message"]
