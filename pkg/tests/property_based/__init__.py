"""Hypothesis-based property testing suite for mirlib."""
