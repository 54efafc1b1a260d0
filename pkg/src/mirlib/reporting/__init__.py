"""Check reports shared by validators and the CLI."""

from .check_report import CheckAnnotation, CheckFailure, CheckReport

__all__ = ["CheckAnnotation", "CheckFailure", "CheckReport"]
