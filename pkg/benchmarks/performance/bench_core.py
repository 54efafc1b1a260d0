"""
Timing runs for the hot paths: barcode elimination, strata enumeration, A-infinity checks.

Usage:
    python -m benchmarks.performance.bench_core [--repeat N]
"""
# 说明：核心计算路径的计时脚本，结果以 JSON 打印到标准输出。
# 覆盖：
# - 圆周线丛在不同格点半径下的条码计算
# - 普通 Adams 立方体的层偏序枚举
# - 恒等计数账本上的 A∞ 关系检查

import argparse
import json
import sys
from pathlib import Path

from mirlib.adams import plain_cube, strata_poset
from mirlib.category import cohomology_barcode, line_bundle
from mirlib.core.affine import circle_atlas
from mirlib.core.affinoid import twisting_cocycle
from mirlib.core.utils import benchmark
from mirlib.functor import ainfty_relations_check, floer_complex, load_intersections, load_ledger

_DATA = Path(__file__).resolve().parents[2] / "tests" / "data" / "circle_identity_counts.json"


def _barcode(radius: int) -> None:
    atlas = circle_atlas(4)
    cocycle = twisting_cocycle(atlas)
    sheaf, _ = line_bundle(atlas, cocycle)
    cohomology_barcode(sheaf, sheaf, cocycle, precision=8, radius=radius)


def _strata(size: int) -> None:
    strata_poset(plain_cube(list(range(size))))


def _ainfty(max_arity: int) -> None:
    data = json.loads(_DATA.read_text(encoding="utf-8"))
    atlas = circle_atlas(3)
    complex_ = floer_complex(load_ledger(data), load_intersections(data["intersections"], 1), atlas)
    ainfty_relations_check(complex_, max_arity=max_arity)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    results = {}
    for radius in (0, 1, 2):
        results[f"barcode circle4 radius={radius}"] = benchmark(_barcode, repeat=args.repeat, radius=radius)
    for size in (4, 5, 6):
        results[f"strata A_{size}"] = benchmark(_strata, repeat=args.repeat, size=size)
    for arity in (3, 4):
        results[f"ainfty circle identity arity={arity}"] = benchmark(_ainfty, repeat=args.repeat, max_arity=arity)
    json.dump(results, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
