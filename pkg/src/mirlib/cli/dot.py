"""
DOT rendering of strata and cell posets.

Responsibilities
  - emit_dot: Graphviz text for a face poset, with nodes ordered by
    (dimension, label) and only covering relations drawn.

Usage Context
  - `mirror adams strata --format dot` and `mirror annuli cells --format dot`.

Limitations
  - Layout hints are limited to rankdir; no styling beyond labels.
"""
# 说明：偏序集的 DOT 输出。
# 约定：
# - 节点按 (维数, 标签) 排序后依次编号 n0, n1, ...，输出逐字节可复现
# - 只画覆盖关系：先做传递约简，再按编号排序输出边
# - 节点标签形如 "I⊂J [dim]"

from __future__ import annotations

from typing import Any, Callable, Dict, Hashable, List, Optional

import networkx as nx

NodeLabel = Callable[[Hashable, Dict[str, Any]], str]


def _default_label(node: Hashable, attrs: Dict[str, Any]) -> str:
    text = attrs.get("label", str(node))
    dim = attrs.get("dim")
    if dim is None or text.endswith(f"[{dim}]"):
        return text
    return f"{text} [{dim}]"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def node_order(poset: nx.DiGraph, label: Optional[NodeLabel] = None) -> List[Hashable]:
    label = label or _default_label
    return sorted(poset.nodes, key=lambda n: (poset.nodes[n].get("dim", 0), label(n, poset.nodes[n])))


def emit_dot(poset: nx.DiGraph, *, name: str = "poset", label: Optional[NodeLabel] = None) -> str:
    """Deterministic DOT text; edges point from a face to the cells covering it."""
    label = label or _default_label
    covers = nx.transitive_reduction(poset) if poset.number_of_edges() else poset
    order = node_order(poset, label)
    ids = {node: k for k, node in enumerate(order)}
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for node in order:
        lines.append(f"  n{ids[node]} [label={_quote(label(node, poset.nodes[node]))}];")
    for a, b in sorted((ids[u], ids[v]) for u, v in covers.edges):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
