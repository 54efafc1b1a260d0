# src/mirlib/core/__init__.py
__all__ = ["affine", "affinoid", "novikov", "utils", "exceptions"]
