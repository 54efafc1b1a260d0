"""
Lightweight logging helpers with chain-aware records.

Responsibilities
  - Provide a filter that prefixes records with the chain they concern.
  - Configure logging with library defaults and optional overrides.
  - Expose a helper for obtaining named loggers.

Usage Context
  - Checkers pass ``extra={"chain": ...}`` so failures are easy to grep.

Limitations
  - Uses basicConfig and does not manage advanced logging setups.
"""
# 说明：轻量级日志工具，统一日志格式，并为携带 chain 字段的记录添加链标签前缀。
# 职责：
# - ChainContextFilter：把 record.chain（若存在）格式化为 "chain=..." 前缀
# - configure_logging(...)：初始化 logging 基本配置并挂载过滤器
# - get_logger(...)：按名称获取 logger，必要时懒加载初始化
# 约定：
# - 日志级别优先级：显式参数 level > 环境变量 MIRROR_LOG_LEVEL > 运行时配置的 log_level

from __future__ import annotations

import logging
import os
from typing import Iterable, Optional

from .config import get_config


def format_chain(chain: Iterable[int]) -> str:
    # 链以紧凑形式显示，如 {0,1,2} -> "012"（顶点编号大于 9 时使用逗号分隔）
    items = list(chain)
    if all(0 <= v <= 9 for v in items):
        return "".join(str(v) for v in items)
    return ",".join(str(v) for v in items)


class ChainContextFilter(logging.Filter):
    """
    Filter that renders a ``chain`` extra into the message.

    - Behavior
      - Records carrying ``chain`` get a ``chain=<label> `` prefix once.

    - Usage Notes
      - Attached to the root logger by configure_logging().
    """

    def filter(self, record: logging.LogRecord) -> bool:
        chain = getattr(record, "chain", None)
        if chain is not None and not getattr(record, "_chain_rendered", False):
            label = chain if isinstance(chain, str) else format_chain(chain)
            record.msg = f"chain={label} {record.msg}"
            record._chain_rendered = True
        return True


def configure_logging(level: Optional[str] = None) -> None:
    # 初始化根 logger：确定最终日志级别、设置格式，并挂载链上下文过滤器
    log_level = level or os.environ.get("MIRROR_LOG_LEVEL", get_config().log_level)
    logging.basicConfig(
        level=log_level,
        format="[%(levelname)s] %(name)s %(asctime)s | %(message)s",
    )
    root = logging.getLogger()
    if not any(isinstance(f, ChainContextFilter) for f in root.filters):
        root.addFilter(ChainContextFilter())


def get_logger(name: str) -> logging.Logger:
    # 获取指定名称的 logger，若尚无 handler，则懒加载方式调用 configure_logging
    logger = logging.getLogger(name)
    if not logger.handlers:
        configure_logging()
    # 过滤器需挂在发出记录的 logger 上
    if not any(isinstance(f, ChainContextFilter) for f in logger.filters):
        logger.addFilter(ChainContextFilter())
    return logger
