"""Shared pytest configuration, path setup and atlas fixtures for test modules."""

import sys
from pathlib import Path

import pytest

# Ensure repo root and src/ are on sys.path for all tests
_ROOT = Path(__file__).resolve().parents[1]
_SRC = _ROOT / "src"
for p in (str(_ROOT), str(_SRC)):
    if p not in sys.path:
        sys.path.insert(0, p)

from mirlib.core.affine import circle_atlas, interval_atlas, tetrahedron_atlas, triangle_atlas  # noqa: E402
from mirlib.core.utils import RuntimeConfig, get_config  # noqa: E402

DATA_DIR = _ROOT / "tests" / "data"


@pytest.fixture(autouse=True)
def _restore_global_config():
    # 每个用例结束后恢复全局配置，避免用例之间相互影响
    cfg = get_config()
    saved = {name: getattr(cfg, name) for name in RuntimeConfig.__dataclass_fields__}
    yield
    for name, value in saved.items():
        setattr(cfg, name, value)


@pytest.fixture
def circle3():
    return circle_atlas(3)


@pytest.fixture
def interval():
    return interval_atlas()


@pytest.fixture
def triangle():
    return triangle_atlas()


@pytest.fixture
def tetrahedron():
    return tetrahedron_atlas()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR
