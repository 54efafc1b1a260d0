# src/mirlib/__init__.py
__all__ = ["core", "adams", "category", "functor", "reporting", "cli"]

__version__ = "0.1.0"
