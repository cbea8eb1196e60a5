"""
有序生成
按行优先逐格填表，增量检查结合律并剔除非规范的部分表；
输出恰为每个同构类的字典序最小表
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from src.core.semigroup import FiniteSemigroup, find_associativity_violation
from src.enumeration.canonical import CanonicalTable, brute_force_canonical
from src.utils.exceptions import OrderTooLargeError
from src.utils.logger import setup_logger

logger = setup_logger("enumeration.generator")

UNSET = -1
NAIVE_MAX_ORDER = 4
LITERAL_MAX_ORDER = 3

Grid = List[List[int]]
PermPair = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class GeneratorOptions:
    """与同构无关、对前缀单调的剪枝条件"""
    latin: bool = False       # 每行每列无重复值（有限可消半群即群）
    idempotent: bool = False  # 对角线 x·x = x（带）


def _consistent(t: Grid, n: int, a: int, b: int) -> bool:
    """新填入的格 (a, b) 在四种位置上参与的、已完全确定的三元组均满足结合律"""
    v = t[a][b]
    row_a, row_b, row_v = t[a], t[b], t[v]

    # (a·b)·z = a·(b·z)
    for z in range(n):
        left, bz = row_v[z], row_b[z]
        if left < 0 or bz < 0:
            continue
        right = row_a[bz]
        if right >= 0 and right != left:
            return False

    # x·(a·b) = (x·a)·b
    for x in range(n):
        right, xa = t[x][v], t[x][a]
        if right < 0 or xa < 0:
            continue
        left = t[xa][b]
        if left >= 0 and left != right:
            return False

    # (x·y)·b = x·(y·b)，其中 x·y = a
    for x in range(n):
        row_x = t[x]
        for y in range(n):
            if row_x[y] != a:
                continue
            yb = t[y][b]
            if yb < 0:
                continue
            right = row_x[yb]
            if right >= 0 and right != v:
                return False

    # a·(y·z) = (a·y)·z，其中 y·z = b
    for y in range(n):
        ay = row_a[y]
        if ay < 0:
            continue
        row_y, row_ay = t[y], t[ay]
        for z in range(n):
            if row_y[z] != b:
                continue
            left = row_ay[z]
            if left >= 0 and left != v:
                return False
    return True


def _allowed(t: Grid, n: int, a: int, b: int, v: int, options: GeneratorOptions) -> bool:
    if options.idempotent and a == b and v != a:
        return False
    if options.latin:
        if v in t[a][:b]:
            return False
        if any(t[x][b] == v for x in range(a)):
            return False
    return True


def _beaten(t: Grid, n: int, filled: int, perms: Sequence[PermPair]) -> bool:
    """是否存在重新编号使已确定前缀字典序更小"""
    for pi, pinv in perms:
        for q in range(filled):
            r, c = divmod(q, n)
            source = t[pinv[r]][pinv[c]]
            if source < 0:
                break
            image = pi[source]
            original = t[r][c]
            if image < original:
                return True
            if image > original:
                break
    return False


def _relabelings(n: int) -> List[PermPair]:
    perms = []
    for pi in permutations(range(n)):
        if all(v == i for i, v in enumerate(pi)):
            continue
        pinv = [0] * n
        for x, v in enumerate(pi):
            pinv[v] = x
        perms.append((tuple(pi), tuple(pinv)))
    return perms


def _fill(t: Grid, n: int, pos: int, perms: Sequence[PermPair],
          options: GeneratorOptions) -> Iterator[Tuple[int, ...]]:
    if pos == n * n:
        yield tuple(v for row in t for v in row)
        return
    a, b = divmod(pos, n)
    for v in range(n):
        if not _allowed(t, n, a, b, v, options):
            continue
        t[a][b] = v
        if _consistent(t, n, a, b) and not _beaten(t, n, pos + 1, perms):
            yield from _fill(t, n, pos + 1, perms, options)
    t[a][b] = UNSET


def _generate_branch(n: int, first: int, options: GeneratorOptions) -> List[Tuple[int, ...]]:
    """工作进程入口：固定 0·0 = first 的分支"""
    t: Grid = [[UNSET] * n for _ in range(n)]
    if not _allowed(t, n, 0, 0, first, options):
        return []
    t[0][0] = first
    perms = _relabelings(n)
    if not _consistent(t, n, 0, 0) or _beaten(t, n, 1, perms):
        return []
    return list(_fill(t, n, 1, perms, options))


def generate_order(n: int, options: Optional[GeneratorOptions] = None,
                   workers: int = 1) -> List[CanonicalTable]:
    """n 阶半群（同构意义下）的规范表，按字典序"""
    options = options or GeneratorOptions()
    if workers > 1 and n > 2:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_generate_branch, [n] * n, range(n), [options] * n))
    else:
        parts = [_generate_branch(n, first, options) for first in range(n)]
    tables = [CanonicalTable.from_cells(n, cells) for part in parts for cells in part]
    logger.info(f"Order {n}: {len(tables)} tables (latin={options.latin}, idempotent={options.idempotent})")
    return tables


def _labeled_semigroups(n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """全部带标号的 n 阶半群"""
    if n <= LITERAL_MAX_ORDER:
        for flat in product(range(n), repeat=n * n):
            rows = tuple(flat[i * n:(i + 1) * n] for i in range(n))
            if find_associativity_violation(rows) is None:
                yield rows
        return

    t: Grid = [[UNSET] * n for _ in range(n)]

    def fill(pos: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if pos == n * n:
            yield tuple(tuple(row) for row in t)
            return
        a, b = divmod(pos, n)
        for v in range(n):
            t[a][b] = v
            if _consistent(t, n, a, b):
                yield from fill(pos + 1)
        t[a][b] = UNSET

    yield from fill(0)


def naive_classes(n: int) -> Set[CanonicalTable]:
    """独立参照：带标号穷举后按 n! 遍历去重"""
    if n > NAIVE_MAX_ORDER:
        raise OrderTooLargeError(f"naive oracle is limited to order {NAIVE_MAX_ORDER}, requested {n}")
    classes: Set[CanonicalTable] = set()
    labeled = 0
    for rows in _labeled_semigroups(n):
        labeled += 1
        classes.add(brute_force_canonical(FiniteSemigroup(n, rows)))
    logger.info(f"Naive oracle order {n}: {labeled} labeled, {len(classes)} classes")
    return classes
