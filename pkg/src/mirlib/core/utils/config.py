"""
Runtime configuration utilities.

Centralises the library's tunable options (working precision, lattice
denominator, gluing identification, parallelism) and exposes helpers to read
them from environment variables or update them at runtime.

Responsibilities
  - Define a runtime configuration container for shared settings.
  - Load configuration values from MIRROR_* environment variables.
  - Provide helpers for updating and accessing global config.

Usage Context
  - Library defaults for truncation windows and validation strictness.
  - The CLI layers its RunConfig on top of this object.

Limitations
  - Global config is process-local and not persisted.
  - Environment parsing is limited to predefined keys.
"""
# 说明：运行时配置管理工具，集中管理截断精度、格点分母、粘合参数映射、并行度等可调选项。
# 职责：
# - RuntimeConfig：封装精度窗口、格点分母/半径、基域、严格校验开关、日志等级与随机种子
# - load_from_env(...)：按统一前缀（MIRROR_）从环境变量加载并解析配置值
# - get_config()：获取全局 RuntimeConfig 单例
# - configure(...)：通过关键字参数更新全局配置并返回更新后的实例
# 约定：
# - 布尔类环境变量使用 {"1", "true", "yes"}（大小写不敏感）视为 True
# - MIRROR_ATLAS_SEED 写入 seed 字段，并覆盖命令行 --seed
# - 未知配置键在 update(...) 中会触发 AttributeError

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

from mirlib.core.utils.param_validation import ParamValidationError

# 环境变量名 -> (字段名, 解析方式)
_ENV_FIELDS: Dict[str, tuple] = {
    "PRECISION": ("precision", "rational"),
    "LATTICE_DENOMINATOR": ("lattice_denominator", "int"),
    "LATTICE_RADIUS": ("lattice_radius", "int"),
    "BASE_FIELD": ("base_field", "str"),
    "GLUING_MAP": ("gluing_map", "str"),
    "MAX_ARITY": ("max_arity", "int"),
    "JOBS": ("jobs", "int"),
    "LOG_LEVEL": ("log_level", "str"),
    "STRICT_VALIDATION": ("strict_validation", "bool"),
    "ATLAS_SEED": ("seed", "int"),
}


@dataclass
class RuntimeConfig:
    """
    Process-wide defaults for truncation and validation.

    - Configuration
      - precision: exponent window end E for scalars and chart elements.
      - lattice_denominator: D, exponents live in (1/D)Z.
      - lattice_radius: sup-norm bound on lattice classes in hom complexes.
      - gluing_map: registry name of the identification [0,1] -> [0,inf].

    - Behavior
      - update() rejects unknown keys; load_from_env() parses typed values.

    - Usage Notes
      - Prefer explicit arguments in library calls; config only fills defaults.
    """

    precision: Fraction = Fraction(8)
    lattice_denominator: int = 1
    lattice_radius: int = 1
    base_field: str = "rationals"
    gluing_map: str = "odds"
    max_arity: int = 3
    jobs: int = 1
    seed: Optional[int] = None
    log_level: str = field(default_factory=lambda: os.environ.get("MIRROR_LOG_LEVEL", "INFO"))
    strict_validation: bool = True
    extra: Dict[str, Any] = field(default_factory=dict)

    def update(self, **kwargs: Any) -> None:
        # 按关键字参数更新当前配置实例，未知字段名将显式报错
        for key, value in kwargs.items():
            if not hasattr(self, key):
                raise AttributeError(f"unknown config option '{key}'")
            if key == "precision" and value is not None:
                value = Fraction(value)
            setattr(self, key, value)

    def load_from_env(self, prefix: str = "MIRROR_") -> None:
        # 从带有指定前缀的环境变量中加载配置，并进行类型转换后写回实例字段
        for key, (attr, kind) in _ENV_FIELDS.items():
            env_key = f"{prefix}{key}"
            if env_key not in os.environ:
                continue
            raw = os.environ[env_key]
            try:
                if kind == "bool":
                    value: Any = raw.lower() in {"1", "true", "yes"}
                elif kind == "int":
                    value = int(raw)
                elif kind == "rational":
                    value = Fraction(raw)
                else:
                    value = raw
            except (ValueError, ZeroDivisionError) as exc:
                raise ParamValidationError(f"{env_key}={raw!r} is not a valid {kind}") from exc
            setattr(self, attr, value)


# 全局配置单例
_GLOBAL_CONFIG = RuntimeConfig()


def get_config() -> RuntimeConfig:
    # 返回全局 RuntimeConfig 实例
    return _GLOBAL_CONFIG


def configure(**kwargs: Any) -> RuntimeConfig:
    # 以关键字参数更新全局配置，并返回更新后的实例
    _GLOBAL_CONFIG.update(**kwargs)
    return _GLOBAL_CONFIG
