"""
小群库
以构造方式给出 15 阶以内全部群（同构意义下）以及若干 16–24 阶群
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

from src.core.semigroup import FiniteSemigroup
from src.utils.exceptions import OrderTooLargeError
from src.utils.logger import setup_logger

logger = setup_logger("core.group_library")

LIBRARY_MAX_ORDER = 15


@dataclass(frozen=True)
class LibraryGroup:
    """群库条目"""
    name: str
    semigroup: FiniteSemigroup

    @property
    def order(self) -> int:
        return self.semigroup.order


def _from_rows(rows: Sequence[Sequence[int]]) -> FiniteSemigroup:
    return FiniteSemigroup(len(rows), tuple(tuple(r) for r in rows))


def cyclic_group(n: int) -> FiniteSemigroup:
    """循环群 C_n，元素 i 表示 a^i"""
    return _from_rows([[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(G: FiniteSemigroup, H: FiniteSemigroup) -> FiniteSemigroup:
    """直积，(g, h) 编号为 g·|H| + h"""
    m = H.order
    size = G.order * m
    rows = []
    for a in range(size):
        g1, h1 = divmod(a, m)
        rows.append([G.table[g1][b // m] * m + H.table[h1][b % m] for b in range(size)])
    return _from_rows(rows)


def semidirect_cyclic(n: int, m: int, r: int) -> FiniteSemigroup:
    """C_n ⋊ C_m，生成元 b 以 a ↦ a^r 作用；要求 r^m ≡ 1 (mod n)"""
    if pow(r, m, n) != 1 % n:
        raise ValueError(f"{r}^{m} is not 1 modulo {n}")
    size = n * m
    rows = []
    for x in range(size):
        b1, a1 = divmod(x, n)
        twist = pow(r, b1, n)
        row = []
        for y in range(size):
            b2, a2 = divmod(y, n)
            row.append(((b1 + b2) % m) * n + (a1 + twist * a2) % n)
        rows.append(row)
    return _from_rows(rows)


def dihedral_group(n: int) -> FiniteSemigroup:
    """二面体群，阶 2n"""
    return semidirect_cyclic(n, 2, n - 1)


def dicyclic_group(m: int) -> FiniteSemigroup:
    """双循环群 Dic_m，阶 4m；m = 2 为四元数群 Q8"""
    half = 2 * m
    size = 2 * half

    def mul(x: int, y: int) -> int:
        j1, k1 = divmod(x, half)
        j2, k2 = divmod(y, half)
        if j1 == 0:
            return j2 * half + (k1 + k2) % half
        if j2 == 0:
            return half + (k1 - k2) % half
        return (k1 - k2 + m) % half

    return _from_rows([[mul(x, y) for y in range(size)] for x in range(size)])


def permutation_group_table(group: PermutationGroup) -> FiniteSemigroup:
    """置换群的 Cayley 表；sympy 的 p*q 先作用 p，与右作用一致"""
    elements: List[Permutation] = sorted(group.generate(), key=lambda p: p.array_form)
    index = {tuple(p.array_form): i for i, p in enumerate(elements)}
    rows = [[index[tuple((p * q).array_form)] for q in elements] for p in elements]
    return _from_rows(rows)


def symmetric_group(n: int) -> FiniteSemigroup:
    return permutation_group_table(SymmetricGroup(n))


def alternating_group(n: int) -> FiniteSemigroup:
    return permutation_group_table(AlternatingGroup(n))


def _cyclic_products(*ns: int) -> FiniteSemigroup:
    result = cyclic_group(ns[0])
    for n in ns[1:]:
        result = direct_product(result, cyclic_group(n))
    return result


_SMALL_GROUPS: Dict[int, List[Tuple[str, Callable[[], FiniteSemigroup]]]] = {
    1: [("C1", lambda: cyclic_group(1))],
    2: [("C2", lambda: cyclic_group(2))],
    3: [("C3", lambda: cyclic_group(3))],
    4: [("C4", lambda: cyclic_group(4)),
        ("C2xC2", lambda: _cyclic_products(2, 2))],
    5: [("C5", lambda: cyclic_group(5))],
    6: [("C6", lambda: cyclic_group(6)),
        ("S3", lambda: dihedral_group(3))],
    7: [("C7", lambda: cyclic_group(7))],
    8: [("C8", lambda: cyclic_group(8)),
        ("C4xC2", lambda: _cyclic_products(4, 2)),
        ("C2xC2xC2", lambda: _cyclic_products(2, 2, 2)),
        ("D4", lambda: dihedral_group(4)),
        ("Q8", lambda: dicyclic_group(2))],
    9: [("C9", lambda: cyclic_group(9)),
        ("C3xC3", lambda: _cyclic_products(3, 3))],
    10: [("C10", lambda: cyclic_group(10)),
         ("D5", lambda: dihedral_group(5))],
    11: [("C11", lambda: cyclic_group(11))],
    12: [("C12", lambda: cyclic_group(12)),
         ("C6xC2", lambda: _cyclic_products(6, 2)),
         ("D6", lambda: dihedral_group(6)),
         ("A4", lambda: alternating_group(4)),
         ("Dic3", lambda: dicyclic_group(3))],
    13: [("C13", lambda: cyclic_group(13))],
    14: [("C14", lambda: cyclic_group(14)),
         ("D7", lambda: dihedral_group(7))],
    15: [("C15", lambda: cyclic_group(15))],
}

_EXTENDED_GROUPS: List[Tuple[str, Callable[[], FiniteSemigroup]]] = [
    ("D8", lambda: dihedral_group(8)),
    ("Q16", lambda: dicyclic_group(4)),
    ("C2xQ8", lambda: direct_product(cyclic_group(2), dicyclic_group(2))),
    ("D9", lambda: dihedral_group(9)),
    ("C3xS3", lambda: direct_product(cyclic_group(3), dihedral_group(3))),
    ("Dic5", lambda: dicyclic_group(5)),
    ("F20", lambda: semidirect_cyclic(5, 4, 2)),
    ("C7:C3", lambda: semidirect_cyclic(7, 3, 2)),
    ("S4", lambda: symmetric_group(4)),
    ("C3:C8", lambda: semidirect_cyclic(3, 8, 2)),
    ("D12", lambda: dihedral_group(12)),
    ("A4xC2", lambda: direct_product(alternating_group(4), cyclic_group(2))),
]


def small_groups(order: int) -> List[LibraryGroup]:
    """给定阶数的全部群（同构意义下）"""
    if order > LIBRARY_MAX_ORDER:
        raise OrderTooLargeError(
            f"group library is complete up to order {LIBRARY_MAX_ORDER}, requested {order}"
        )
    if order < 1:
        return []
    groups = [LibraryGroup(name, build()) for name, build in _SMALL_GROUPS[order]]
    logger.debug(f"Built {len(groups)} groups of order {order}")
    return groups


def groups_up_to(max_order: int) -> List[LibraryGroup]:
    groups: List[LibraryGroup] = []
    for order in range(1, max_order + 1):
        groups.extend(small_groups(order))
    return groups


def extended_groups() -> List[LibraryGroup]:
    """16–24 阶的补充样本（不保证完整）"""
    return [LibraryGroup(name, build()) for name, build in _EXTENDED_GROUPS]


def group_by_name(name: str) -> LibraryGroup:
    for entries in _SMALL_GROUPS.values():
        for entry_name, build in entries:
            if entry_name == name:
                return LibraryGroup(entry_name, build())
    for entry_name, build in _EXTENDED_GROUPS:
        if entry_name == name:
            return LibraryGroup(entry_name, build())
    raise KeyError(f"Unknown library group: {name}")
