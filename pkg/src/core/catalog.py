"""
命名实例目录
测试、画廊与命令行共用的小半群构造
"""
from typing import Callable, Dict, List

from src.core.group_library import cyclic_group, dihedral_group, symmetric_group
from src.core.partialperm import monoid_In
from src.core.semigroup import FiniteSemigroup


def _from_rows(rows: List[List[int]], labels=None) -> FiniteSemigroup:
    return FiniteSemigroup(len(rows), tuple(tuple(r) for r in rows),
                           tuple(labels) if labels is not None else None)


def trivial_semigroup() -> FiniteSemigroup:
    return _from_rows([[0]])


def adjoin_zero(S: FiniteSemigroup) -> FiniteSemigroup:
    """S ∪ {0}，新元素编号为 n"""
    n = S.order
    rows = [list(S.table[x]) + [n] for x in S.elements]
    rows.append([n] * (n + 1))
    labels = None
    if S.labels is not None:
        labels = list(S.labels) + ["0"]
    return _from_rows(rows, labels)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S¹，新元素编号为 n"""
    n = S.order
    rows = [list(S.table[x]) + [x] for x in S.elements]
    rows.append(list(range(n)) + [n])
    labels = None
    if S.labels is not None:
        labels = list(S.labels) + ["1"]
    return _from_rows(rows, labels)


def chain_semilattice(k: int) -> FiniteSemigroup:
    """k 元链 0 < 1 < … < k-1，x·y = min(x, y)"""
    return _from_rows([[min(x, y) for y in range(k)] for x in range(k)])


def left_zero_band(n: int) -> FiniteSemigroup:
    """x·y = x"""
    return _from_rows([[x] * n for x in range(n)])


def right_zero_band(n: int) -> FiniteSemigroup:
    return _from_rows([list(range(n)) for _ in range(n)])


def brandt_b2() -> FiniteSemigroup:
    """Brandt 半群 B2：0 与 (i,j)，(i,j)(k,l) = (i,l) 当 j = k，否则 0"""
    pairs = [(1, 1), (1, 2), (2, 1), (2, 2)]
    rows = [[0] * 5]
    for i, j in pairs:
        row = [0]
        for k, l in pairs:
            row.append(pairs.index((i, l)) + 1 if j == k else 0)
        rows.append(row)
    return _from_rows(rows, ["0", "11", "12", "21", "22"])


# 1 基文本：1 3 3 1 / 4 2 2 4 / 1 3 3 1 / 4 2 2 4
BAND_B4_ROWS = [
    [0, 2, 2, 0],
    [3, 1, 1, 3],
    [0, 2, 2, 0],
    [3, 1, 1, 3],
]

# 1' = 2, 2' = 1, 3' = 3, 4' = 4
BAND_B4_INVOLUTION = (1, 0, 2, 3)


def band_b4() -> FiniteSemigroup:
    """四元带，行乘列读表"""
    return _from_rows(BAND_B4_ROWS)


def symmetric_inverse_monoid(n: int) -> FiniteSemigroup:
    return monoid_In(n)


NAMED_SEMIGROUPS: Dict[str, Callable[[], FiniteSemigroup]] = {
    "trivial": trivial_semigroup,
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C5": lambda: cyclic_group(5),
    "C3+0": lambda: adjoin_zero(cyclic_group(3)),
    "S3": lambda: symmetric_group(3),
    "S3+0": lambda: adjoin_zero(symmetric_group(3)),
    "D4": lambda: dihedral_group(4),
    "chain2": lambda: chain_semilattice(2),
    "L2": lambda: left_zero_band(2),
    "L3": lambda: left_zero_band(3),
    "B2": brandt_b2,
    "B4": band_b4,
    "I2": lambda: monoid_In(2),
}


def named_semigroup(name: str) -> FiniteSemigroup:
    try:
        return NAMED_SEMIGROUPS[name]()
    except KeyError:
        raise KeyError(f"Unknown named semigroup: {name}") from None
