"""Formal count fixtures shared by the functor tests."""

import json

import pytest

from mirlib.functor import load_intersections, load_ledger


def _load(data_dir, name, dimension):
    data = json.loads((data_dir / name).read_text(encoding="utf-8"))
    return load_ledger(data), load_intersections(data["intersections"], dimension)


@pytest.fixture
def circle_identity(data_dir):
    return _load(data_dir, "circle_identity_counts.json", 1)


@pytest.fixture
def triangle_flip(data_dir):
    return _load(data_dir, "triangle_flip_counts.json", 2)


@pytest.fixture
def interval_strip(data_dir):
    return _load(data_dir, "interval_strip_counts.json", 1)
