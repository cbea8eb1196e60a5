#!/usr/bin/env python3
"""
isemlab 命令行启动脚本
"""
import sys
from pathlib import Path

# 添加项目根目录到Python路径
sys.path.insert(0, str(Path(__file__).parent))


def main():
    # 导入环境配置
    from src.utils.env_config import env_config

    # 验证配置
    config_errors = env_config.validate_config()
    if config_errors:
        print("❌ 配置验证失败:", file=sys.stderr)
        for error in config_errors:
            print(f"   - {error}", file=sys.stderr)
        sys.exit(2)

    from src.cli.app import app
    app()


if __name__ == "__main__":
    main()
