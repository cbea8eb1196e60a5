"""
日志配置
统一日志管理，控制台输出到 stderr，可选按天轮转的日志文件
"""
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Dict, Optional

# 全局日志器缓存，避免重复创建
_loggers: Dict[str, logging.Logger] = {}

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """设置日志器"""
    if name in _loggers and level is None:
        return _loggers[name]

    try:
        from src.utils.env_config import env_config
        log_level = level or env_config.log_level
        log_file = env_config.log_file
        log_max_days = env_config.log_max_days
    except ImportError:
        log_level = level or "WARNING"
        log_file = None
        log_max_days = 1

    numeric_level = getattr(logging, log_level.upper(), logging.WARNING)

    logger = logging.getLogger(f"isemlab.{name}")
    logger.setLevel(numeric_level)
    logger.handlers.clear()

    formatter = logging.Formatter(_FORMAT)

    # stdout 留给 JSON 输出
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        try:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.handlers.TimedRotatingFileHandler(
                filename=log_file,
                when='midnight',
                interval=1,
                backupCount=log_max_days,
                encoding='utf-8',
                utc=False
            )
            file_handler.suffix = "%Y-%m-%d"
            file_handler.setLevel(numeric_level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError as e:
            # 文件处理器失败时仅警告一次，不中断程序
            logger.warning(f"Failed to initialize file log handler: {e}")

    logger.propagate = False
    _loggers[name] = logger
    return logger


def set_global_level(level: str) -> None:
    """调整所有已创建日志器的级别（CLI 的 --verbose 使用）"""
    numeric_level = getattr(logging, level.upper(), logging.WARNING)
    for logger in _loggers.values():
        logger.setLevel(numeric_level)
        for handler in logger.handlers:
            handler.setLevel(numeric_level)
