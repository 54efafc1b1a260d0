"""Command-line surface: argument parsing, report rendering and DOT export."""

from .dot import emit_dot, node_order
from .main import RunConfig, build_parser, main

__all__ = ["emit_dot", "node_order", "RunConfig", "build_parser", "main"]
