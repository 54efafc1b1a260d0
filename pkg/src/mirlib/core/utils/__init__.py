"""Ambient utilities: configuration, logging, validation, serialization, randomness, timing."""
# 说明：工具子包入口，汇总常用的配置、日志、参数校验、序列化、随机数与计时工具。

from .config import RuntimeConfig, configure, get_config
from .logging import configure_logging, get_logger
from .param_validation import ParamValidationError, ensure, ensure_type, validate_arguments
from .performance import Timer, benchmark, time_function
from .random import create_rng, random_fraction
from .serialization import serialize_to_json

__all__ = [
    "RuntimeConfig",
    "configure",
    "get_config",
    "configure_logging",
    "get_logger",
    "ParamValidationError",
    "ensure",
    "ensure_type",
    "validate_arguments",
    "Timer",
    "benchmark",
    "time_function",
    "create_rng",
    "random_fraction",
    "serialize_to_json",
]
