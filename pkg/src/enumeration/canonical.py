"""
规范形
同构类的代表：所有 n! 种重新编号下按行优先展开的字典序最小乘法表
"""
import hashlib
from dataclasses import dataclass, field
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from src.core.semigroup import FiniteSemigroup, index_and_period


def table_digest(order: int, cells: Sequence[int]) -> str:
    payload = f"{order}:" + ",".join(str(v) for v in cells)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class CanonicalTable:
    """规范乘法表；两个半群同构当且仅当规范表逐字节相同"""
    order: int
    cells: Tuple[int, ...]
    digest: str
    labeling: Optional[Tuple[int, ...]] = field(default=None, compare=False, hash=False)

    @classmethod
    def from_cells(cls, order: int, cells: Sequence[int],
                   labeling: Optional[Sequence[int]] = None) -> "CanonicalTable":
        cells = tuple(int(v) for v in cells)
        return cls(order, cells, table_digest(order, cells),
                   tuple(labeling) if labeling is not None else None)

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.order
        return tuple(self.cells[i * n:(i + 1) * n] for i in range(n))

    def to_semigroup(self) -> FiniteSemigroup:
        return FiniteSemigroup(self.order, self.rows)


def _relabeled_cells(table: Sequence[Sequence[int]], pi: Sequence[int], pinv: Sequence[int]) -> List[int]:
    n = len(table)
    return [pi[table[pinv[r]][pinv[c]]] for r in range(n) for c in range(n)]


def brute_force_canonical(S: FiniteSemigroup) -> CanonicalTable:
    """遍历全部 n! 种编号；仅用作小阶数的独立参照"""
    n = S.order
    best: Optional[List[int]] = None
    best_pi: Optional[Tuple[int, ...]] = None
    for pi in permutations(range(n)):
        pinv = [0] * n
        for x, v in enumerate(pi):
            pinv[v] = x
        cells = _relabeled_cells(S.table, pi, pinv)
        if best is None or cells < best:
            best, best_pi = cells, pi
    return CanonicalTable.from_cells(n, best, best_pi)


class _CanonicalSearch:
    """分支定界：按行优先逐格确定新编号，只保留使当前格取最小值的候选"""

    def __init__(self, table: Sequence[Sequence[int]], candidate_order: Sequence[int]):
        self.table = table
        self.n = len(table)
        self.candidate_order = list(candidate_order)
        self.cur = [0] * (self.n * self.n)
        self.best: Optional[List[int]] = None
        self.best_labeling: Optional[List[int]] = None

    def _compare_prefix(self, length: int) -> int:
        """cur[:length] 与 best[:length] 比较：-1 更小，0 相等，1 更大"""
        if self.best is None:
            return -1
        cur, best = self.cur, self.best
        for q in range(length):
            if cur[q] != best[q]:
                return -1 if cur[q] < best[q] else 1
        return 0

    def _write(self, p: int, value: int, tied: bool) -> Optional[bool]:
        """写入一格；返回新的 tied 状态，None 表示已劣于当前最优"""
        self.cur[p] = value
        if tied:
            b = self.best[p]
            if value > b:
                return None
            if value < b:
                return False
        return tied

    def _record(self, old2new: List[int]) -> None:
        self.best = list(self.cur)
        self.best_labeling = list(old2new)

    def run(self) -> None:
        n = self.n
        self._visit(0, 0, [-1] * n, [-1] * n, False)

    def _visit(self, p: int, k: int, new2old: List[int], old2new: List[int], tied: bool) -> None:
        n, T = self.n, self.table
        total = n * n
        while p < total:
            i, j = divmod(p, n)
            if i >= k or j >= k:
                break
            prod = T[new2old[i]][new2old[j]]
            v = old2new[prod]
            if v == -1:
                v = k
                new2old[k] = prod
                old2new[prod] = k
                k += 1
            state = self._write(p, v, tied)
            if state is None:
                return
            tied = state
            p += 1

        if p == total:
            if not tied:
                self._record(old2new)
            return

        i, j = divmod(p, n)
        unlabeled = [x for x in self.candidate_order if old2new[x] == -1]

        if i < k and j == k:
            # 行余下部分与未编号元素的排列无关时整段写入
            row = T[new2old[i]]
            tail: Optional[List[int]] = None
            if all(row[x] == x for x in unlabeled):
                tail = list(range(j, n))
            else:
                c = row[unlabeled[0]]
                if old2new[c] != -1 and all(row[x] == c for x in unlabeled):
                    tail = [old2new[c]] * (n - j)
            if tail is not None:
                for offset, value in enumerate(tail):
                    state = self._write(p + offset, value, tied)
                    if state is None:
                        return
                    tied = state
                self._visit(p + n - j, k, new2old, old2new, tied)
                return

        scored = []
        for x in unlabeled:
            r = x if i == k else new2old[i]
            c = x if j == k else new2old[j]
            prod = T[r][c]
            if prod == x:
                value = k
            elif old2new[prod] != -1:
                value = old2new[prod]
            else:
                value = k + 1
            scored.append((value, x, prod))
        best_value = min(value for value, _, _ in scored)

        for value, x, prod in scored:
            if value != best_value:
                continue
            self.cur[p] = value
            # 兄弟分支可能已更新最优表，重新比较前缀
            relation = self._compare_prefix(p + 1)
            if relation > 0:
                continue
            branch_new2old = list(new2old)
            branch_old2new = list(old2new)
            branch_new2old[k] = x
            branch_old2new[x] = k
            next_k = k + 1
            if value == k + 1:
                branch_new2old[next_k] = prod
                branch_old2new[prod] = next_k
                next_k += 1
            self._visit(p + 1, next_k, branch_new2old, branch_old2new, relation == 0)


def _candidate_order(S: FiniteSemigroup) -> List[int]:
    # 幂等元优先，其次按指数与周期
    T = S.table
    return sorted(
        S.elements,
        key=lambda x: (T[x][x] != x,) + index_and_period(S, x) + (x,),
    )


def canonical_form(S: FiniteSemigroup) -> CanonicalTable:
    """精确的字典序最小规范表，附带旧编号到新编号的映射"""
    search = _CanonicalSearch(S.table, _candidate_order(S))
    search.run()
    return CanonicalTable.from_cells(S.order, search.best, search.best_labeling)


def canonical_semigroup(S: FiniteSemigroup) -> FiniteSemigroup:
    return canonical_form(S).to_semigroup()
