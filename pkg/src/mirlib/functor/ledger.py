"""
Formal count ledgers: signed rigid-curve counts supplied as input.

Responsibilities
  - LedgerEntry / FormalCountLedger: one record per rigid count, keyed by
    family (strip, continuation, input, output, disc, discK, annulus) with
    endpoint labels, energy, boundary class and a base-field count.
  - The dimension formula of every family, evaluated on Maslov degrees.
  - ledger_validate, and the filtered entry lists the evaluators consume.
  - counts.json reading and writing.

Usage Context
  - sheaf_from_counts, the Floer complex, the maps C and P, the A-infinity
    checks and `mirror functor check`.

Limitations
  - Counts are never computed; an entry is trusted once it passes its
    filters. Entries failing a filter are skipped by evaluators with a
    warning, so enabling one changes no output.
"""
# 说明：形式计数账本（代替伪全纯曲线模空间的刚性计数）。
# 职责：
# - LedgerFamily：strip / continuation / input / output / disc / discK / annulus
# - LedgerEntry：where（顶点或链）、labels（端点标签）、能量 λ、边界类 A、计数（基域元素）、膜
# - degree_defect：各族的维数公式；为 0 时条目通过次数过滤
# - ledger_validate：标签存在性、次数过滤、能量非负且位于 (1/D)ℤ、链与边界类形状
# - admissible_entries：求值器使用的过滤后条目（跳过的条目记 warning）
# 约定（标签角色）：
# - strip / continuation / annulus："input"、"output"
# - input："pair"（x_in）、"input"（源膜在 min K 的点）、"output"（目标膜在 max K 的点）
# - output："input"（源膜在 min I）、"pair"（x_ou）、"output"（目标膜在 max I）
# - disc："output"（x_0）、"inputs"（[a_d, ..., a_1]，按书写顺序）
# - discK："inputs"、"input"（min K 处）、"output"（max K 处）

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from mirlib.core.affine.atlas import Chain, ChartAtlas
from mirlib.core.exceptions import ValidationError
from mirlib.core.novikov.base_field import RATIONALS, BaseField
from mirlib.core.utils.logging import format_chain, get_logger
from mirlib.core.utils.param_validation import ParamValidationError, as_rational
from mirlib.core.utils.rational import on_lattice
from mirlib.core.utils.serialization import format_number
from mirlib.functor.intersections import SOURCE, TARGET, BRANES, IntersectionData
from mirlib.reporting.check_report import CheckReport

_logger = get_logger(__name__)


class LedgerFamily(str, enum.Enum):
    """
    Families of formal counts.

    - Configuration
      - Values are the lowercase names used in counts.json.

    - Behavior
      - from_str accepts members unchanged, any case and the spelling "disc_k".
    """

    STRIP = "strip"
    CONTINUATION = "continuation"
    INPUT = "input"
    OUTPUT = "output"
    DISC = "disc"
    DISC_K = "disck"
    ANNULUS = "annulus"

    @classmethod
    def from_str(cls, name: Union[str, "LedgerFamily"]) -> "LedgerFamily":
        if isinstance(name, cls):
            return name
        normalized = str(name).lower().replace("_", "")
        try:
            return cls(normalized)
        except ValueError as exc:
            raise ValidationError(f"unknown count family '{name}'") from exc

    @property
    def json_name(self) -> str:
        return "discK" if self is LedgerFamily.DISC_K else self.value


# where 为空的族（Floer 复形上的运算）
_FLOER_FAMILIES = (LedgerFamily.DISC, LedgerFamily.ANNULUS)


@dataclass(frozen=True)
class LedgerEntry:
    """
    One rigid count.

    - Configuration
      - family / where: the moduli space kind and its vertex or chain.
      - labels: role -> label (a list of labels for "inputs").
      - energy: lambda; boundary: class A (empty means zero).
      - count: base-field element; brane: which brane strips and
        continuations belong to.
    """

    family: LedgerFamily
    where: Chain = ()
    labels: Mapping[str, Any] = field(default_factory=dict)
    energy: Fraction = Fraction(0)
    boundary: Tuple[int, ...] = ()
    count: Any = Fraction(1)
    brane: str = SOURCE

    @property
    def inputs(self) -> Tuple[str, ...]:
        return tuple(self.labels.get("inputs", ()))

    @property
    def arity(self) -> int:
        return len(self.inputs)

    def label(self, role: str) -> str:
        try:
            return self.labels[role]
        except KeyError as exc:
            raise ValidationError(f"{self.family.json_name} entry has no '{role}' label") from exc

    def boundary_class(self, dimension: int) -> Tuple[int, ...]:
        return self.boundary if self.boundary else (0,) * dimension

    def describe(self) -> str:
        where = format_chain(self.where) if self.where else "-"
        labels = ",".join(f"{k}={v}" for k, v in sorted(self.labels.items()))
        return f"{self.family.json_name}{where}[{labels}]"

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "family": self.family.json_name,
            "where": list(self.where),
            "labels": {k: (list(v) if k == "inputs" else v) for k, v in self.labels.items()},
            "energy": format_number(self.energy),
            "count": format_number(Fraction(self.count)),
        }
        if self.boundary:
            out["boundary"] = list(self.boundary)
        if self.brane != SOURCE:
            out["brane"] = self.brane
        return out


@dataclass(frozen=True)
class FormalCountLedger:
    """
    An ordered collection of LedgerEntry records over one base field.

    - Behavior
      - Ledgers add by concatenation; every evaluator is a sum over entries,
        so residuals are additive in the ledger.
      - without(k) drops one entry (perturbation experiments).
    """

    entries: Tuple[LedgerEntry, ...] = ()
    base_field: BaseField = RATIONALS

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "FormalCountLedger") -> "FormalCountLedger":
        if self.base_field != other.base_field:
            raise ValidationError("ledgers over different base fields")
        return FormalCountLedger(entries=self.entries + other.entries, base_field=self.base_field)

    def of_family(self, family: Union[str, LedgerFamily]) -> List[LedgerEntry]:
        family = LedgerFamily.from_str(family)
        return [e for e in self.entries if e.family is family]

    def without(self, index: int) -> "FormalCountLedger":
        if not 0 <= index < len(self.entries):
            raise IndexError(f"ledger has no entry {index}")
        return replace(self, entries=self.entries[:index] + self.entries[index + 1 :])

    def with_count(self, index: int, count: Any) -> "FormalCountLedger":
        entries = list(self.entries)
        entries[index] = replace(entries[index], count=self.base_field.element(count))
        return replace(self, entries=tuple(entries))

    def families(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for entry in self.entries:
            out[entry.family.json_name] = out.get(entry.family.json_name, 0) + 1
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {"entries": [e.to_dict() for e in self.entries]}


# ----------------------------------------------------------------- JSON


def _entry_from_dict(item: Mapping[str, Any], base_field: BaseField) -> LedgerEntry:
    family = LedgerFamily.from_str(item["family"])
    where = item.get("where", [])
    if isinstance(where, int):
        where = [where]
    labels = dict(item.get("labels", {}))
    if "inputs" in labels:
        labels["inputs"] = tuple(str(a) for a in labels["inputs"])
    brane = item.get("brane", SOURCE)
    if brane not in BRANES:
        raise ValidationError(f"unknown brane '{brane}'")
    return LedgerEntry(
        family=family,
        where=tuple(int(v) for v in where),
        labels=labels,
        energy=as_rational(item.get("energy", 0)),
        boundary=tuple(item.get("boundary", ())),
        count=base_field.element(item.get("count", 1)),
        brane=brane,
    )


def ledger_from_dict(data: Any, base_field: BaseField = RATIONALS) -> FormalCountLedger:
    items = data.get("entries", []) if isinstance(data, Mapping) else data
    try:
        entries = tuple(_entry_from_dict(item, base_field) for item in items)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed counts: {exc}") from exc
    return FormalCountLedger(entries=entries, base_field=base_field)


def load_ledger(source: Union[str, Path, Mapping[str, Any], Sequence[Any]], base_field: BaseField = RATIONALS) -> FormalCountLedger:
    if not isinstance(source, (str, Path)):
        return ledger_from_dict(source, base_field)
    try:
        data = json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{source}: invalid JSON ({exc.msg})") from exc
    return ledger_from_dict(data, base_field)


# ----------------------------------------------------------------- Degree filters


def _point_degree(intersections: IntersectionData, brane: str, vertex: int, label: str) -> int:
    return intersections.point(brane, vertex, label).degree


def entry_degrees(entry: LedgerEntry, intersections: IntersectionData) -> Dict[str, Any]:
    """Maslov degree per role; raises ValidationError on unknown labels."""
    family = entry.family
    where = entry.where
    if family in (LedgerFamily.STRIP, LedgerFamily.CONTINUATION):
        brane = SOURCE if intersections.self_pair else entry.brane
        return {
            "input": _point_degree(intersections, brane, where[0], entry.label("input")),
            "output": _point_degree(intersections, brane, where[-1], entry.label("output")),
        }
    if family is LedgerFamily.INPUT:
        return {
            "pair": intersections.generator(entry.label("pair")).degree,
            "input": _point_degree(intersections, SOURCE, where[0], entry.label("input")),
            "output": _point_degree(intersections, TARGET, where[-1], entry.label("output")),
        }
    if family is LedgerFamily.OUTPUT:
        return {
            "input": _point_degree(intersections, SOURCE, where[0], entry.label("input")),
            "pair": intersections.generator(entry.label("pair")).degree,
            "output": _point_degree(intersections, TARGET, where[-1], entry.label("output")),
        }
    inputs = [intersections.generator(a).degree for a in entry.inputs]
    if family is LedgerFamily.DISC:
        return {"output": intersections.generator(entry.label("output")).degree, "inputs": inputs}
    if family is LedgerFamily.DISC_K:
        return {
            "inputs": inputs,
            "input": _point_degree(intersections, SOURCE, where[0], entry.label("input")),
            "output": _point_degree(intersections, TARGET, where[-1], entry.label("output")),
        }
    return {
        "input": intersections.generator(entry.label("input")).degree,
        "output": intersections.generator(entry.label("output")).degree,
    }


def degree_defect(entry: LedgerEntry, intersections: IntersectionData, dimension: int) -> int:
    """Value of the family's dimension formula; the entry is rigid iff it is 0."""
    deg = entry_degrees(entry, intersections)
    size = len(entry.where)
    family = entry.family
    if family is LedgerFamily.STRIP:
        return deg["output"] - deg["input"] - 1
    if family is LedgerFamily.CONTINUATION:
        return deg["output"] - deg["input"] + size - 2
    if family is LedgerFamily.INPUT:
        return deg["output"] - deg["pair"] - deg["input"] + size - 1
    if family is LedgerFamily.OUTPUT:
        # 目标膜生成元在模空间中的次数带有 n 的平移
        return deg["input"] + deg["pair"] - (deg["output"] + dimension) + dimension + 1 - size
    if family is LedgerFamily.DISC:
        return deg["output"] - sum(deg["inputs"]) + entry.arity - 2
    if family is LedgerFamily.DISC_K:
        return deg["output"] - deg["input"] - sum(deg["inputs"]) + size + entry.arity - 2
    return deg["output"] - deg["input"] + 1


# ----------------------------------------------------------------- Validation


def _chain_problem(entry: LedgerEntry, atlas: ChartAtlas) -> Optional[str]:
    family = entry.family
    if family in _FLOER_FAMILIES:
        return None if not entry.where else "Floer operations carry no chain"
    if not entry.where or not atlas.is_chain(entry.where):
        return f"{list(entry.where)} is not a chain of the atlas"
    if family is LedgerFamily.STRIP and len(entry.where) != 1:
        return "strips live on a single vertex"
    if family is LedgerFamily.CONTINUATION and len(entry.where) < 2:
        return "continuation counts need a chain with at least two vertices"
    if family in (LedgerFamily.DISC, LedgerFamily.DISC_K) and entry.arity < 1:
        return "disc counts need at least one input"
    return None


def _boundary_problem(entry: LedgerEntry, atlas: ChartAtlas) -> Optional[str]:
    if not entry.boundary:
        return None
    if len(entry.boundary) != atlas.dimension:
        return f"boundary class has {len(entry.boundary)} entries, expected {atlas.dimension}"
    if any(not isinstance(a, int) or isinstance(a, bool) for a in entry.boundary):
        return "boundary classes are integer vectors"
    if entry.family in _FLOER_FAMILIES and any(entry.boundary):
        return "Floer operations carry no boundary class"
    return None


def entry_problems(entry: LedgerEntry, intersections: IntersectionData, atlas: ChartAtlas) -> List[Tuple[str, str]]:
    """(code, message) pairs for every filter the entry fails."""
    problems: List[Tuple[str, str]] = []
    chain = _chain_problem(entry, atlas)
    if chain is not None:
        return [("bad_chain", chain)]
    boundary = _boundary_problem(entry, atlas)
    if boundary is not None:
        problems.append(("bad_boundary", boundary))
    if entry.energy < 0:
        problems.append(("negative_energy", f"energy {format_number(entry.energy)} is negative"))
    elif not on_lattice(entry.energy, atlas.lattice_denominator):
        problems.append(
            ("off_lattice", f"energy {format_number(entry.energy)} is not on the 1/{atlas.lattice_denominator} lattice")
        )
    try:
        defect = degree_defect(entry, intersections, atlas.dimension)
    except ValidationError as exc:
        problems.append(("unknown_label", str(exc)))
    else:
        if defect != 0:
            problems.append(("degree_filter", f"dimension formula gives {defect}, expected 0"))
    return problems


def ledger_validate(ledger: FormalCountLedger, intersections: IntersectionData, atlas: ChartAtlas) -> CheckReport:
    report = CheckReport(name="ledger")
    for index, entry in enumerate(ledger.entries):
        for code, message in entry_problems(entry, intersections, atlas):
            report.fail(
                code,
                f"entry {index} ({entry.describe()}): {message}",
                location=entry.where,
                witness={"index": index, "family": entry.family.json_name},
            )
    report.details["entries"] = len(ledger)
    report.details["families"] = ledger.families()
    return report


def admissible_entries(
    ledger: FormalCountLedger,
    family: LedgerFamily,
    intersections: IntersectionData,
    atlas: ChartAtlas,
    *,
    brane: Optional[str] = None,
) -> List[LedgerEntry]:
    """Entries of one family that pass every filter; the rest are logged and skipped."""
    kept = []
    for entry in ledger.of_family(family):
        if brane is not None and not intersections.self_pair and entry.brane != brane:
            continue
        problems = entry_problems(entry, intersections, atlas)
        if problems:
            _logger.warning("skipping %s: %s", entry.describe(), "; ".join(m for _, m in problems))
            continue
        if ledger.base_field.is_zero(entry.count):
            continue
        kept.append(entry)
    return kept
