"""
文件格式模块
乘法表文件与语料文件的解析和写出
"""
