"""
验证模块
命题检查、批量运行与报告
"""
