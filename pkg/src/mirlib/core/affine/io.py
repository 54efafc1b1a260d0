"""
atlas.json reading and writing.

Schema: {"dimension", "field", "lattice_denominator",
"vertices": [{"id", "basepoint", "polytope": {"vertices": [...]}}],
"simplices": [[...]],
"sections": [{"edge": [i, j], "gradient": [...], "value_at_target": "r"}],
"sign_cocycle": [{"triple": [i, j, k], "value": 0|1}]}.
All numbers are exact rational strings.
"""
# 说明：atlas.json 的解析与输出；所有数值均为精确有理数字符串。

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Mapping, Union

from mirlib.core.affine.atlas import ChartAtlas, Section, Vertex
from mirlib.core.affine.geometry import Polytope
from mirlib.core.exceptions import ValidationError
from mirlib.core.novikov.base_field import BaseField
from mirlib.core.utils.logging import get_logger
from mirlib.core.utils.param_validation import ParamValidationError, as_rational, as_rational_vector
from mirlib.core.utils.serialization import format_number

_logger = get_logger(__name__)


def _read(source: Union[str, Path, Mapping[str, Any]]) -> Mapping[str, Any]:
    if isinstance(source, Mapping):
        return source
    try:
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{source}: invalid JSON ({exc.msg})") from exc


def atlas_from_dict(data: Mapping[str, Any]) -> ChartAtlas:
    try:
        dimension = int(data["dimension"])
        vertices = []
        for item in data["vertices"]:
            polytope = Polytope.from_points(
                [as_rational_vector(p) for p in item["polytope"]["vertices"]], dimension
            )
            vertices.append(Vertex(id=int(item["id"]), basepoint=as_rational_vector(item["basepoint"]), polytope=polytope))
        simplices = tuple(tuple(int(v) for v in s) for s in data.get("simplices", []))
        sections = {}
        for item in data.get("sections", []):
            i, j = (int(v) for v in item["edge"])
            if i > j:
                raise ValidationError(f"section edge {[i, j]} must be ordered", location=(i, j))
            sections[(i, j)] = Section(
                gradient=as_rational_vector(item["gradient"]),
                value_at_target=as_rational(item["value_at_target"]),
            )
        signs = {}
        for item in data.get("sign_cocycle", []):
            triple = tuple(int(v) for v in item["triple"])
            if len(triple) != 3 or list(triple) != sorted(triple):
                raise ValidationError(f"sign triple {list(triple)} must be an ordered triple", location=triple)
            signs[triple] = int(item["value"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed atlas: missing or invalid field {exc}") from exc
    except ParamValidationError as exc:
        raise ValidationError(f"malformed atlas: {exc}") from exc
    atlas = ChartAtlas(
        dimension=dimension,
        vertices=tuple(vertices),
        simplices=simplices,
        sections=sections,
        sign_cocycle=signs,
        base_field=BaseField.parse(data.get("field", "rationals")),
        lattice_denominator=int(data.get("lattice_denominator", 1)),
        name=str(data.get("name", "atlas")),
    )
    _logger.info(
        "loaded atlas %s: n=%d, %d vertices, %d simplices; exponents restricted to (1/%d)Z",
        atlas.name,
        atlas.dimension,
        len(atlas.vertices),
        len(atlas.simplices),
        atlas.lattice_denominator,
    )
    return atlas


def load_atlas(source: Union[str, Path, Mapping[str, Any]]) -> ChartAtlas:
    return atlas_from_dict(_read(source))


def atlas_to_dict(atlas: ChartAtlas) -> Dict[str, Any]:
    def vector(v):
        return [format_number(c) for c in v]

    return {
        "name": atlas.name,
        "dimension": atlas.dimension,
        "field": atlas.base_field.label(),
        "lattice_denominator": atlas.lattice_denominator,
        "vertices": [
            {
                "id": v.id,
                "basepoint": vector(v.basepoint),
                "polytope": {"vertices": [vector(p) for p in v.polytope.vertices]},
            }
            for v in atlas.vertices
        ],
        "simplices": [list(s) for s in atlas.simplices],
        "sections": [
            {"edge": list(edge), "gradient": vector(s.gradient), "value_at_target": format_number(s.value_at_target)}
            for edge, s in sorted(atlas.sections.items())
        ],
        "sign_cocycle": [{"triple": list(t), "value": v} for t, v in sorted(atlas.sign_cocycle.items())],
    }


def save_atlas(atlas: ChartAtlas, path: Union[str, Path]) -> Path:
    out = Path(path)
    out.write_text(json.dumps(atlas_to_dict(atlas), indent=2, sort_keys=True), encoding="utf-8")
    return out
