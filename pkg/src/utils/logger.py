"""
日志工具

loguru：诊断信息一律写 stderr，stdout 只留给自动机与报告
"""
import sys
from pathlib import Path
from typing import Optional

from loguru import logger

DEFAULT_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function} | {message}"


def setup_logger(level: str = "WARNING", log_file: Optional[str] = None,
                 log_format: str = DEFAULT_FORMAT):
    """
    设置日志系统

    Args:
        level: 日志级别
        log_file: 日志文件路径，为空时只输出到 stderr
        log_format: 日志格式
    """
    logger.remove()

    logger.add(
        sys.stderr,
        format=log_format,
        level=level,
        colorize=True
    )

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            format=log_format,
            level=level,
            rotation="10 MB",
            retention="7 days",
            compression="zip"
        )

    logger.debug(f"日志系统已初始化，级别: {level}")
