"""
The `mirror` command line.

Responsibilities
  - Parse subcommands and the shared flags into a RunConfig layered over
    the process RuntimeConfig.
  - Run the constructions and checkers, print reports as text, JSON or DOT.
  - Map outcomes to exit status: 0 when every check passes, 1 on a failed
    check, 2 on malformed input (with a JSON error object on stdout).

Usage Context
  - `mirror mirror build`, `mirror sheaf validate|cohomology`,
    `mirror adams sample|strata`, `mirror annuli cells`,
    `mirror functor check`; `python -m mirlib` is equivalent.

Limitations
  - Library parallelism is passed explicitly per call; the CLI never
    mutates the global RuntimeConfig.
"""
# 说明：命令行入口 mirror。
# 职责：
# - RunConfig：命令行参数叠加在 RuntimeConfig 之上（MIRROR_ATLAS_SEED 覆盖 --seed）
# - 各子命令加载 JSON 输入、运行构造与检查器，并以 text / json / dot 输出
# 约定：
# - 退出码：0 全部检查通过；1 存在失败的检查；2 输入格式错误（stdout 输出 JSON 错误对象）
# - 日志写到 stderr，报告写到 stdout

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from mirlib import __version__
from mirlib.adams.annuli import degenerate_annulus_fibre, face_restriction_failures
from mirlib.adams.cubes import (
    AdamsCube,
    input_cube,
    output_cube,
    plain_cube,
    prism_cube,
    strata_poset,
    verify_product_decomposition,
)
from mirlib.adams.path import adams_path_eval, vertex_times
from mirlib.category.barcode import cohomology_barcode
from mirlib.category.sheaf import load_sheaf, sheaf_validate
from mirlib.cli.dot import emit_dot, node_order
from mirlib.cli.io import (
    FORMATS,
    error_object,
    parse_chain,
    parse_prism_label,
    parse_rationals,
    read_json,
    write_report,
)
from mirlib.core.affine.atlas import ChartAtlas, atlas_validate
from mirlib.core.affine.chains import pairs_barycentric_cells, pbs_face_poset, top_cell_count
from mirlib.core.affine.io import atlas_from_dict
from mirlib.core.affinoid.cocycle import cocycle_check, twisting_cocycle
from mirlib.core.exceptions import MirrorError, ValidationError
from mirlib.core.utils.config import get_config
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.core.utils.param_validation import ParamValidationError, as_rational, ensure
from mirlib.core.utils.performance import Timer
from mirlib.core.utils.random import create_rng, random_fraction
from mirlib.core.utils.serialization import format_number, serialize_to_json
from mirlib.functor.checks import functor_check
from mirlib.functor.intersections import load_intersections
from mirlib.functor.ledger import load_ledger
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)

_SAMPLE_DENOMINATOR = 12


# ----------------------------------------------------------------- Run configuration


@dataclass
class RunConfig:
    """
    Settings of one CLI run.

    - Configuration
      - precision: window end E > 0.
      - denominator: lattice denominator D >= 1 for hom complexes; None
        means the atlas's own.
      - atlas / sheaf / target / counts / intersections: input paths.
      - output_format: text | json | dot.
      - jobs: worker count handed to library checkers.
      - seed: randomness seed; MIRROR_ATLAS_SEED wins over --seed.
    """

    precision: Fraction
    denominator: Optional[int] = None
    atlas: Optional[str] = None
    sheaf: Optional[str] = None
    target: Optional[str] = None
    counts: Optional[str] = None
    intersections: Optional[str] = None
    output_format: str = "text"
    jobs: int = 1
    seed: Optional[int] = None
    radius: Optional[int] = None
    max_arity: Optional[int] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        base = replace(get_config())
        base.load_from_env()
        precision = as_rational(args.precision) if args.precision is not None else Fraction(base.precision)
        ensure(precision > 0, f"precision must be positive, got {format_number(precision)}")
        if args.denominator is not None:
            ensure(args.denominator >= 1, f"lattice denominator must be >= 1, got {args.denominator}")
        jobs = args.jobs if args.jobs is not None else base.jobs
        ensure(jobs >= 1, "--jobs must be at least 1")
        seed = base.seed if "MIRROR_ATLAS_SEED" in os.environ else args.seed
        if seed is None:
            seed = base.seed
        return cls(
            precision=precision,
            denominator=args.denominator,
            atlas=args.atlas,
            sheaf=args.sheaf,
            target=getattr(args, "target", None),
            counts=args.counts,
            intersections=args.intersections,
            output_format=args.format,
            jobs=jobs,
            seed=seed,
            radius=args.radius,
            max_arity=args.max_arity,
        )


def _load_atlas(run: RunConfig) -> ChartAtlas:
    return atlas_from_dict(read_json(run.atlas, what="atlas"))


def _no_dot(run: RunConfig, command: str) -> None:
    if run.output_format == "dot":
        raise ValidationError(f"--format dot is not available for '{command}'")


# ----------------------------------------------------------------- mirror build


def _chart_table(atlas: ChartAtlas) -> List[Dict[str, Any]]:
    rows = []
    for chain in atlas.chains():
        anchor = chain[-1]
        row: Dict[str, Any] = {
            "chart": format_chain(chain),
            "anchor": anchor,
            "basepoint": [format_number(x) for x in atlas.basepoint(anchor)],
            "empty": atlas.domain(chain).region.is_empty(),
        }
        if len(chain) == 2:
            section = atlas.section(*chain)
            row["gradient"] = [format_number(x) for x in section.gradient]
            row["value_at_target"] = format_number(section.value_at_target)
        rows.append(row)
    return rows


def _render_charts(atlas: ChartAtlas, rows: List[Dict[str, Any]], alpha: List[Dict[str, Any]]) -> str:
    lines = [
        f"atlas {atlas.name}: n={atlas.dimension}, D={atlas.lattice_denominator}, field {atlas.base_field.label()}",
        f"{'chart':<8}{'anchor':<8}{'basepoint':<16}section",
    ]
    for row in rows:
        point = "(" + ", ".join(row["basepoint"]) + ")"
        section = ""
        if "gradient" in row:
            section = f"df=({', '.join(row['gradient'])}) f(q)={row['value_at_target']}"
        lines.append(f"{row['chart']:<8}{row['anchor']!s:<8}{point:<16}{section}".rstrip())
    if alpha:
        for item in alpha:
            lines.append(f"alpha_{item['triple']} = {item['value']}")
    else:
        lines.append("alpha: no triples")
    return "\n".join(lines)


def _cmd_build(run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    _no_dot(run, "mirror build")
    atlas = _load_atlas(run)
    reports = [atlas_validate(atlas, strict_nesting=args.strict_nesting)]
    alpha: List[Dict[str, Any]] = []
    if reports[0].passed:
        cocycle = twisting_cocycle(atlas)
        reports.append(cocycle_check(cocycle, atlas))
        alpha = [
            {"triple": format_chain(t), "value": cocycle.entries[t].truncate(run.precision).format()}
            for t in sorted(cocycle.entries)
        ]
    else:
        _logger.warning("atlas failed validation; the twisting cocycle is not built")
    rows = _chart_table(atlas)
    report = CheckReport(name="build")
    for sub in reports:
        report.merge(sub)
    report.details["charts"] = rows
    report.details["alpha"] = alpha
    report.details["precision"] = format_number(run.precision)
    if run.output_format == "json":
        write_report(report, "json", out)
    else:
        out.write(_render_charts(atlas, rows, alpha) + "\n")
        out.write("\n".join(sub.to_text() for sub in reports) + "\n")
    return 0 if report.passed else 1


# ----------------------------------------------------------------- sheaf


def _cmd_sheaf_validate(run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    _no_dot(run, "sheaf validate")
    atlas = _load_atlas(run)
    sheaf = load_sheaf(atlas, read_json(run.sheaf, what="sheaf"))
    report = sheaf_validate(sheaf, twisting_cocycle(atlas), run.precision)
    write_report(report, run.output_format, out)
    return 0 if report.passed else 1


def _cmd_sheaf_cohomology(run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    _no_dot(run, "sheaf cohomology")
    atlas = _load_atlas(run)
    cocycle = twisting_cocycle(atlas)
    source = load_sheaf(atlas, read_json(run.sheaf, what="sheaf"))
    target = load_sheaf(atlas, read_json(run.target, what="target")) if run.target else source
    report = CheckReport(name="cohomology")
    report.merge(sheaf_validate(source, cocycle, run.precision))
    if target is not source:
        target_report = sheaf_validate(target, cocycle, run.precision)
        target_report.name = "sheaf_target"
        report.merge(target_report)
    if not report.passed:
        _logger.warning("structure maps fail their equation; mu1 does not square to zero")
    barcode = cohomology_barcode(
        source,
        target,
        cocycle,
        precision=run.precision,
        denominator=run.denominator,
        radius=run.radius,
        jobs=run.jobs,
    )
    report.merge(barcode.to_report())
    lines = [f"window [0, {format_number(barcode.window)})"]
    for degree in barcode.degrees():
        bars = ", ".join(f"[{format_number(b)}, {format_number(d)})" for b, d in barcode.bars[degree])
        lines.append(f"H^{degree}: {bars}")
    write_report(report, run.output_format, out, text="\n".join(lines))
    return 0 if report.passed else 1


# ----------------------------------------------------------------- adams


def _cmd_adams_sample(run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    _no_dot(run, "adams sample")
    rng = create_rng(run.seed)
    if args.r is not None:
        r = parse_rationals(args.r)
        if args.d is not None:
            ensure(len(r) == args.d - 1, f"--d {args.d} needs {args.d - 1} Adams parameters, got {len(r)}")
    else:
        ensure(args.d is not None and args.d >= 1, "--d is required when --r is not given")
        r = [random_fraction(rng, _SAMPLE_DENOMINATOR, Fraction(0), Fraction(1)) for _ in range(args.d - 1)]
    total = vertex_times(r)[-1]
    s = as_rational(args.s) if args.s is not None else random_fraction(rng, _SAMPLE_DENOMINATOR, Fraction(0), total)
    point = adams_path_eval(r, s)
    if run.output_format == "json":
        payload = {"d": len(r) + 1, "r": list(r), "s": s, "point": list(point)}
        out.write(serialize_to_json(payload, indent=2) + "\n")
    else:
        out.write(" ".join(format_number(x) for x in point) + "\n")
    return 0


def _cube_from_args(args: argparse.Namespace) -> AdamsCube:
    labels: Sequence[str] = args.labels
    if args.kind == "plain":
        try:
            return plain_cube([int(x) for x in labels])
        except ValueError as exc:
            raise ValidationError(f"plain cube labels are integers, got {list(labels)}") from exc
    if args.kind == "prism":
        parsed = [parse_prism_label(x) for x in labels]
        return prism_cube([v for sign, v in parsed if sign == "-"], [v for sign, v in parsed if sign == "+"])
    flag = [parse_chain(x) for x in labels]
    return input_cube(flag) if args.kind == "input" else output_cube(flag)


def _cmd_adams_strata(run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    cube = _cube_from_args(args)
    with Timer("strata enumeration", _logger):
        poset = strata_poset(cube)
    report = CheckReport(name="strata")
    order = node_order(poset)
    for stratum in order:
        if not verify_product_decomposition(cube, stratum):
            report.fail(
                "product_decomposition",
                f"faces of {stratum.label()} are not the product of its factors",
                location=(stratum.label(),),
            )
    report.details["cube"] = cube.to_dict()
    report.details["strata"] = [dict(s.to_dict(), factors=poset.nodes[s]["factors"]) for s in order]
    report.details["covers"] = sorted([u.label(), v.label()] for u, v in poset.edges)
    if run.output_format == "dot":
        out.write(emit_dot(poset, name=cube.name()))
    else:
        lines = [f"{cube.name()}: {len(order)} strata"]
        lines.extend(f"  {s.label()}  = {' x '.join(poset.nodes[s]['factors'])}" for s in order)
        write_report(report, run.output_format, out, text="\n".join(lines))
    return 0 if report.passed else 1


# ----------------------------------------------------------------- annuli


def _cell_label(cell: Any, attrs: Dict[str, Any]) -> str:
    return f"{cell.label()} [{cell.dimension}]"


def _cmd_annuli_cells(run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    atlas = _load_atlas(run)
    cells = pairs_barycentric_cells(atlas)
    poset = pbs_face_poset(cells)
    report = CheckReport(name="annuli")
    top = max((c.dimension for c in cells), default=0)
    tops = sum(1 for c in cells if c.dimension == top)
    expected = top_cell_count(atlas)
    if tops != expected:
        report.fail("top_cells", f"{tops} top cells, expected {expected} from the maximal flags")
    rows = []
    for cell in cells:
        fibre = degenerate_annulus_fibre(cell)
        if fibre.component_count != 2 * len(cell.inner):
            report.fail(
                "fibre_components",
                f"fibre over {cell.label()} has {fibre.component_count} components",
                location=(cell.label(),),
            )
        rows.append({"cell": cell.label(), "dimension": cell.dimension, "components": fibre.component_count})
    for face, cell in face_restriction_failures(cells):
        report.fail("face_restriction", f"fibre of {face} disagrees with its restriction from {cell}", location=(face, cell))
    report.details["cells"] = rows
    report.details["top_cells"] = tops
    if run.output_format == "dot":
        out.write(emit_dot(poset, name=f"PBS({atlas.name})", label=_cell_label))
    else:
        lines = [f"{len(cells)} cells, {tops} of top dimension {top}"]
        lines.extend(f"  {_cell_label(c, {})}  fibre: {row['components']} strips" for c, row in zip(cells, rows))
        write_report(report, run.output_format, out, text="\n".join(lines))
    return 0 if report.passed else 1


# ----------------------------------------------------------------- functor


def _cmd_functor_check(run: RunConfig, args: argparse.Namespace, out: TextIO) -> int:
    _no_dot(run, "functor check")
    atlas = _load_atlas(run)
    counts = read_json(run.counts, what="counts")
    if run.intersections:
        data = read_json(run.intersections, what="intersections")
    elif isinstance(counts, dict) and "intersections" in counts:
        data = counts["intersections"]
    else:
        raise ValidationError("no intersection data: pass --intersections or embed it in the counts file")
    intersections = load_intersections(data, atlas.dimension)
    ledger = load_ledger(counts, atlas.base_field)
    report = functor_check(
        ledger,
        intersections,
        atlas,
        precision=run.precision,
        radius=run.radius,
        denominator=run.denominator,
        max_arity=run.max_arity,
        jobs=run.jobs,
    )
    lines = [f"{name}: {status}" for name, status in report.details["status"].items()]
    write_report(report, run.output_format, out, text="\n".join(lines))
    return 0 if report.passed else 1


# ----------------------------------------------------------------- Parser


Handler = Callable[[RunConfig, argparse.Namespace, TextIO], int]


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--atlas", help="atlas.json")
    common.add_argument("--sheaf", help="sheaf JSON")
    common.add_argument("--counts", help="formal count ledger JSON")
    common.add_argument("--intersections", help="intersection data JSON (may also sit inside --counts)")
    common.add_argument("--precision", help="window end E, an exact rational")
    common.add_argument("--denominator", type=int, help="lattice denominator D")
    common.add_argument("--radius", type=int, help="lattice box radius for hom complexes")
    common.add_argument("--max-arity", dest="max_arity", type=int, help="highest arity of A-infinity checks")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--jobs", type=int, help="worker count")
    common.add_argument("--seed", type=int, help="randomness seed (MIRROR_ATLAS_SEED overrides)")
    common.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ...")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="mirror",
        description="Rigid-analytic mirror of an integral affine torus: build, validate, check.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    groups = parser.add_subparsers(dest="group", required=True)

    def command(group: argparse._SubParsersAction, name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        sub = group.add_parser(name, parents=[common], help=help_text, allow_abbrev=False)
        sub.set_defaults(handler=handler)
        return sub

    mirror = groups.add_parser("mirror", help="atlas and chart rings").add_subparsers(dest="command", required=True)
    build = command(mirror, "build", _cmd_build, "chart summary, twisting cocycle and its check")
    build.add_argument("--strict-nesting", action="store_true", help="treat chart nesting violations as failures")

    sheaf = groups.add_parser("sheaf", help="twisted sheaves").add_subparsers(dest="command", required=True)
    command(sheaf, "validate", _cmd_sheaf_validate, "check the structure-map equation")
    cohomology = command(sheaf, "cohomology", _cmd_sheaf_cohomology, "barcode of hom(sheaf, target)")
    cohomology.add_argument("--target", help="second sheaf JSON; defaults to --sheaf")

    adams = groups.add_parser("adams", help="Adams paths and cubes").add_subparsers(dest="command", required=True)
    sample = command(adams, "sample", _cmd_adams_sample, "evaluate the Adams path")
    sample.add_argument("--d", type=int, help="simplex dimension")
    sample.add_argument("--r", help="comma-separated Adams parameters r_1, ..., r_{d-1}")
    sample.add_argument("--s", help="path time")
    strata = command(adams, "strata", _cmd_adams_strata, "strata poset of an Adams cube")
    strata.add_argument("--kind", choices=("plain", "prism", "input", "output"), default="plain")
    strata.add_argument(
        "--labels",
        nargs="+",
        required=True,
        help="vertices (plain), +v/-v (prism) or nested chains such as 0 01 012 (input/output)",
    )

    annuli = groups.add_parser("annuli", help="degenerate annuli").add_subparsers(dest="command", required=True)
    command(annuli, "cells", _cmd_annuli_cells, "pairs barycentric cells and their fibres")

    functor = groups.add_parser("functor", help="the mirror functor").add_subparsers(dest="command", required=True)
    command(functor, "check", _cmd_functor_check, "every residual of the functor construction")
    return parser


def _set_log_level(name: str) -> None:
    try:
        logging.getLogger().setLevel(name.upper())
    except ValueError as exc:
        raise ValidationError(f"unknown log level '{name}'") from exc


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.log_level:
            _set_log_level(args.log_level)
        run = RunConfig.from_args(args)
        with Timer() as timer:
            status = args.handler(run, args, out)
    except (MirrorError, ParamValidationError, json.JSONDecodeError, OSError) as exc:
        _logger.error("%s: %s", type(exc).__name__, exc)
        out.write(serialize_to_json(error_object(exc)) + "\n")
        return 2
    _logger.info("%s %s finished in %.3fs with status %d", args.group, args.command, timer.elapsed, status)
    return status


if __name__ == "__main__":
    sys.exit(main())
