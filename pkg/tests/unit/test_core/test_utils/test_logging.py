"""
Unit tests for logging utilities.
"""
# 说明：日志配置与链上下文过滤器的单元测试。
# 覆盖：
# - get_logger(...)：返回挂有 ChainContextFilter 的 logger
# - 携带 chain 字段的记录被加上 "chain=..." 前缀
# - format_chain：紧凑链标签

import logging

from mirlib.core.utils import configure_logging, get_logger
from mirlib.core.utils.logging import ChainContextFilter, format_chain


def test_format_chain() -> None:
    # 验证单位数顶点紧凑拼接，多位数顶点以逗号分隔
    assert format_chain((0, 1, 2)) == "012"
    assert format_chain((3, 12)) == "3,12"


def test_chain_prefix_in_records(caplog) -> None:
    # 验证带 chain 字段的记录在输出中带有 chain= 前缀
    configure_logging(level="INFO")
    logger = get_logger("mirlib.test.chain")
    with caplog.at_level(logging.INFO):
        logger.info("quadratic equation fails", extra={"chain": (0, 1)})
    assert "chain=01 quadratic equation fails" in caplog.text


def test_filter_attached_once() -> None:
    # 验证重复获取同名 logger 不会重复挂载过滤器
    get_logger("mirlib.test.once")
    logger = get_logger("mirlib.test.once")
    assert sum(isinstance(f, ChainContextFilter) for f in logger.filters) == 1
