"""
自定义异常类
"""
from typing import Optional, Tuple


class SemigroupLabException(Exception):
    """实验室基础异常"""
    pass


class NotAssociativeError(SemigroupLabException):
    """结合律不成立"""

    def __init__(self, triple: Tuple[int, int, int]):
        # triple 内部使用 0 基下标，消息按文件格式显示 1 基标签
        self.triple = triple
        x, y, z = (t + 1 for t in triple)
        super().__init__(f"Table is not associative: ({x}·{y})·{z} != {x}·({y}·{z})")


class IndexOutOfRangeError(SemigroupLabException):
    """元素下标越界"""
    pass


class NotInverseError(SemigroupLabException):
    """不是逆半群"""
    pass


class NotInverseOrCompletelyRegularError(SemigroupLabException):
    """既不是逆半群也不是完全正则半群"""
    pass


class NotCliffordError(SemigroupLabException):
    """不是 Clifford 半群"""
    pass


class NotAGroupError(SemigroupLabException):
    """不是群"""
    pass


class NotUniquely2DivisibleError(SemigroupLabException):
    """平方映射不是双射"""
    pass


class DegreeMismatchError(SemigroupLabException):
    """部分置换次数不一致"""
    pass


class DegreeTooLargeError(SemigroupLabException):
    """对称逆幺半群次数过大"""
    pass


class OrderTooLargeError(SemigroupLabException):
    """枚举阶数超过上限"""
    pass


class TableParseError(SemigroupLabException):
    """表格文本解析错误"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ConfigurationError(SemigroupLabException):
    """配置错误"""
    pass


class UnknownStatementError(SemigroupLabException):
    """未知的命题编号"""
    pass


class InvariantViolationError(SemigroupLabException):
    """内部恒等式被破坏"""
    pass


class NotAutomorphismError(SemigroupLabException):
    """映射不是自同构"""
    pass
