"""
有限半群
Cayley 表表示、结合律校验与基本谓词（幂等元、逆元、自然偏序、消去律）
"""
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.utils.exceptions import (
    IndexOutOfRangeError,
    NotAssociativeError,
    NotInverseError,
    NotInverseOrCompletelyRegularError,
)

ElementId = int

# 超过该阶数时改用按行预计算的向量化检查
DIRECT_ASSOCIATIVITY_LIMIT = 16


def _validate_shape(n: int, rows: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    if n < 1:
        raise IndexOutOfRangeError(f"order must be positive, got {n}")
    if len(rows) != n:
        raise IndexOutOfRangeError(f"expected {n} rows, got {len(rows)}")
    table = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise IndexOutOfRangeError(f"row {i + 1} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise IndexOutOfRangeError(
                    f"entry {i + 1}·{j + 1} = {v + 1} is outside 1..{n}"
                )
        table.append(tuple(int(v) for v in row))
    return tuple(table)


def associativity_violation_direct(table: Sequence[Sequence[int]]) -> Optional[Tuple[int, int, int]]:
    """三重循环检查，返回字典序最小的违例三元组"""
    n = len(table)
    for x in range(n):
        row_x = table[x]
        for y in range(n):
            xy = row_x[y]
            row_xy = table[xy]
            row_y = table[y]
            for z in range(n):
                if row_xy[z] != row_x[row_y[z]]:
                    return (x, y, z)
    return None


def associativity_violation_light(table: Sequence[Sequence[int]]) -> Optional[Tuple[int, int, int]]:
    """Light 式检查：对每个中间元 y 比较 (x·y)·z 与 x·(y·z) 两张表"""
    arr = np.asarray(table, dtype=np.int64)
    best: Optional[Tuple[int, int, int]] = None
    for y in range(arr.shape[0]):
        left = arr[arr[:, y], :]       # [x, z] -> (x·y)·z
        right = arr[:, arr[y, :]]      # [x, z] -> x·(y·z)
        bad = np.argwhere(left != right)
        if bad.size:
            x, z = (int(v) for v in bad[0])
            if best is None or (x, y, z) < best:
                best = (x, y, z)
    return best


def find_associativity_violation(table: Sequence[Sequence[int]]) -> Optional[Tuple[int, int, int]]:
    """按阶数选择检查路径"""
    if len(table) <= DIRECT_ASSOCIATIVITY_LIMIT:
        return associativity_violation_direct(table)
    return associativity_violation_light(table)


@dataclass(frozen=True)
class FiniteSemigroup:
    """有限半群（构造时校验结合律）"""
    order: int
    table: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        table = _validate_shape(self.order, self.table)
        object.__setattr__(self, "table", table)
        if self.labels is not None:
            if len(self.labels) != self.order:
                raise IndexOutOfRangeError(
                    f"expected {self.order} labels, got {len(self.labels)}"
                )
            object.__setattr__(self, "labels", tuple(self.labels))
        violation = find_associativity_violation(table)
        if violation is not None:
            raise NotAssociativeError(violation)

    def __hash__(self) -> int:
        return hash((self.order, self.table))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.order == other.order and self.table == other.table

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, x: ElementId, y: ElementId) -> ElementId:
        return self.table[x][y]

    def product(self, *xs: ElementId) -> ElementId:
        """左结合连乘"""
        result = xs[0]
        for x in xs[1:]:
            result = self.table[result][x]
        return result

    def label(self, x: ElementId) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x + 1)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def relabel(self, images: Sequence[int]) -> "FiniteSemigroup":
        """按双射 x -> images[x] 重新编号"""
        n = self.order
        if sorted(images) != list(range(n)):
            raise IndexOutOfRangeError("relabeling must be a bijection")
        rows = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                rows[images[x]][images[y]] = images[self.table[x][y]]
        labels = None
        if self.labels is not None:
            new_labels: List[str] = [""] * n
            for x in range(n):
                new_labels[images[x]] = self.labels[x]
            labels = tuple(new_labels)
        return FiniteSemigroup(n, tuple(tuple(r) for r in rows), labels)

    def restrict(self, subset: Sequence[ElementId]) -> "FiniteSemigroup":
        """限制到封闭子集上，按给定顺序重新编号"""
        new_to_old = list(subset)
        old_to_new = {x: i for i, x in enumerate(new_to_old)}
        rows = []
        for a in new_to_old:
            row = []
            for b in new_to_old:
                p = self.table[a][b]
                if p not in old_to_new:
                    raise IndexOutOfRangeError(
                        f"subset is not closed: {self.label(a)}·{self.label(b)} = {self.label(p)}"
                    )
                row.append(old_to_new[p])
            rows.append(tuple(row))
        labels = tuple(self.label(x) for x in new_to_old) if self.labels is not None else None
        return FiniteSemigroup(len(new_to_old), tuple(rows), labels)


def build_semigroup(n: int, table: Sequence[Sequence[int]],
                    labels: Optional[Sequence[str]] = None) -> FiniteSemigroup:
    """由 0 基 Cayley 表构造并校验半群"""
    rows = _validate_shape(n, table)
    return FiniteSemigroup(n, rows, tuple(labels) if labels is not None else None)


@dataclass(frozen=True)
class UnaryMap:
    """半群上的一元映射"""
    parent: FiniteSemigroup
    images: Tuple[ElementId, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if len(images) != self.parent.order:
            raise IndexOutOfRangeError(
                f"map has {len(images)} images, expected {self.parent.order}"
            )
        for v in images:
            if not 0 <= v < self.parent.order:
                raise IndexOutOfRangeError(f"image {v + 1} is outside 1..{self.parent.order}")
        object.__setattr__(self, "images", images)

    def __call__(self, x: ElementId) -> ElementId:
        return self.images[x]

    def __iter__(self) -> Iterator[ElementId]:
        return iter(self.images)

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def then(self, other: "UnaryMap") -> "UnaryMap":
        """右作用复合：先 self 后 other"""
        return UnaryMap(self.parent, tuple(other.images[v] for v in self.images))

    def power(self, k: int) -> "UnaryMap":
        result = tuple(range(self.parent.order))
        for _ in range(k):
            result = tuple(self.images[v] for v in result)
        return UnaryMap(self.parent, result)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))


@dataclass(frozen=True)
class NaturalOrder:
    """逆半群上的自然偏序：b ≤ a 当且仅当 b = b·b⁻¹·a（即 b = e·a，e 幂等）"""
    parent: FiniteSemigroup
    pairs: FrozenSet[Tuple[ElementId, ElementId]]

    def leq(self, b: ElementId, a: ElementId) -> bool:
        return (b, a) in self.pairs

    def restricted_to(self, subset: Sequence[ElementId]) -> FrozenSet[Tuple[ElementId, ElementId]]:
        members = set(subset)
        return frozenset((b, a) for b, a in self.pairs if b in members and a in members)


def is_commutative(S: FiniteSemigroup) -> bool:
    arr = S.array
    return bool((arr == arr.T).all())


def idempotents(S: FiniteSemigroup) -> FrozenSet[ElementId]:
    return frozenset(x for x in S.elements if S.table[x][x] == x)


def is_band(S: FiniteSemigroup) -> bool:
    return len(idempotents(S)) == S.order


def idempotents_commute(S: FiniteSemigroup) -> bool:
    es = sorted(idempotents(S))
    return all(S.table[e][f] == S.table[f][e] for e in es for f in es)


def is_regular(S: FiniteSemigroup) -> bool:
    T = S.table
    return all(any(T[T[x][y]][x] == x for y in S.elements) for x in S.elements)


def is_inverse_semigroup(S: FiniteSemigroup) -> bool:
    return is_regular(S) and idempotents_commute(S)


def index_and_period(S: FiniteSemigroup, x: ElementId) -> Tuple[int, int]:
    """单元素生成的循环子半群的指数与周期：x^(m+r) = x^m"""
    seen = {x: 1}
    power, k = x, 1
    while True:
        power = S.table[power][x]
        k += 1
        if power in seen:
            m = seen[power]
            return m, k - m
        seen[power] = k


def power(S: FiniteSemigroup, x: ElementId, k: int) -> ElementId:
    """x^k，k ≥ 1"""
    result = x
    for _ in range(k - 1):
        result = S.table[result][x]
    return result


def _group_inverse(S: FiniteSemigroup, x: ElementId) -> Optional[ElementId]:
    # x 位于子群中当且仅当指数为 1，此时 x⁻¹ = x^(2r-1)
    m, r = index_and_period(S, x)
    if m != 1:
        return None
    return power(S, x, 2 * r - 1)


def _inverse_candidates(S: FiniteSemigroup, x: ElementId) -> List[ElementId]:
    T = S.table
    return [y for y in S.elements if T[T[x][y]][x] == x and T[T[y][x]][y] == y]


def inversion_map(S: FiniteSemigroup) -> UnaryMap:
    """逆半群的唯一逆元映射；完全正则半群取 H 类中的群逆元"""
    if is_inverse_semigroup(S):
        images = []
        for x in S.elements:
            candidates = _inverse_candidates(S, x)
            if len(candidates) != 1:
                raise NotInverseError(f"element {S.label(x)} has {len(candidates)} inverses")
            images.append(candidates[0])
        return UnaryMap(S, tuple(images))

    images = []
    for x in S.elements:
        inv = _group_inverse(S, x)
        if inv is None:
            raise NotInverseOrCompletelyRegularError(
                f"element {S.label(x)} lies in no subgroup and the semigroup is not inverse"
            )
        images.append(inv)
    return UnaryMap(S, tuple(images))


def natural_partial_order(S: FiniteSemigroup) -> NaturalOrder:
    if not is_inverse_semigroup(S):
        raise NotInverseError("natural partial order requires an inverse semigroup")
    inv = inversion_map(S)
    T = S.table
    pairs = frozenset(
        (b, a)
        for a in S.elements
        for b in S.elements
        if T[T[b][inv(b)]][a] == b
    )
    return NaturalOrder(S, pairs)


def is_left_cancellative(S: FiniteSemigroup) -> bool:
    # xa = xb ⇒ a = b：每一行都是置换
    return all(len(set(row)) == S.order for row in S.table)


def is_right_cancellative(S: FiniteSemigroup) -> bool:
    arr = S.array
    return all(len(set(arr[:, j].tolist())) == S.order for j in S.elements)


def is_cancellative(S: FiniteSemigroup) -> bool:
    return is_left_cancellative(S) and is_right_cancellative(S)
