"""
环境变量配置管理器
统一管理输出目录与日志相关的环境变量
"""
import os
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv


class EnvConfig:
    """环境变量配置管理器"""

    def __init__(self):
        self._load_env_file()

    def _load_env_file(self):
        """加载.env文件（已存在的环境变量优先）"""
        env_file = Path(".env")
        if env_file.exists():
            load_dotenv(env_file, override=False)

    def get_str(self, key: str, default: str = "") -> str:
        """获取字符串配置"""
        return os.getenv(key, default)

    def get_int(self, key: str, default: int = 0) -> int:
        """获取整数配置"""
        try:
            return int(os.getenv(key, str(default)))
        except ValueError:
            return default

    # ================================
    # 输出配置
    # ================================

    @property
    def output_dir(self) -> str:
        """报告、语料与反例回放文件的输出目录"""
        return self.get_str("ISEMLAB_OUTPUT_DIR", "output")

    # ================================
    # 日志配置
    # ================================

    @property
    def log_level(self) -> str:
        """日志级别"""
        return self.get_str("LOG_LEVEL", "WARNING")

    @property
    def log_file(self) -> Optional[str]:
        """日志文件路径（未设置或为空则只输出到控制台）"""
        return self.get_str("LOG_FILE") or None

    @property
    def log_max_days(self) -> int:
        """日志文件保留天数"""
        return self.get_int("LOG_MAX_DAYS", 1)

    def validate_config(self) -> List[str]:
        """验证配置，返回错误列表"""
        errors = []

        if self.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"LOG_LEVEL must be a logging level name, got '{self.log_level}'")

        if self.log_max_days <= 0:
            errors.append(f"LOG_MAX_DAYS must be positive, got {self.log_max_days}")

        out_dir = Path(self.output_dir)
        if out_dir.exists() and not out_dir.is_dir():
            errors.append(f"ISEMLAB_OUTPUT_DIR points to a file: {out_dir}")

        return errors


# 全局配置实例
env_config = EnvConfig()
