"""
态射
自同构群搜索、不动点分析、ψ 映射与正则对合搜索
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.core.semigroup import (
    ElementId,
    FiniteSemigroup,
    UnaryMap,
    idempotents,
    index_and_period,
    inversion_map,
)
from src.core.structure import green_relations
from src.utils.exceptions import IndexOutOfRangeError, NotAutomorphismError
from src.utils.logger import setup_logger

logger = setup_logger("core.morphisms")

Fingerprint = Tuple[bool, int, int, int]
Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Automorphism:
    """自同构 α（右作用 xα），带阶与不动点集"""
    parent: FiniteSemigroup
    perm: UnaryMap

    def __call__(self, x: ElementId) -> ElementId:
        return self.perm(x)

    @property
    def images(self) -> Tuple[ElementId, ...]:
        return self.perm.images

    @cached_property
    def order(self) -> int:
        k, current = 1, self.perm
        while not current.is_identity():
            current = current.then(self.perm)
            k += 1
        return k

    @cached_property
    def fixed(self) -> FrozenSet[ElementId]:
        return frozenset(x for x in self.parent.elements if self.perm(x) == x)

    def is_identity(self) -> bool:
        return self.perm.is_identity()

    def then(self, other: "Automorphism") -> "Automorphism":
        """αβ：先 α 后 β"""
        return Automorphism(self.parent, self.perm.then(other.perm))

    def power(self, k: int) -> "Automorphism":
        return Automorphism(self.parent, self.perm.power(k))

    def inverse(self) -> "Automorphism":
        images = [0] * self.parent.order
        for x, v in enumerate(self.images):
            images[v] = x
        return Automorphism(self.parent, UnaryMap(self.parent, tuple(images)))

    def to_text(self) -> str:
        """一行 1 基像"""
        return " ".join(str(v + 1) for v in self.images)


@dataclass(frozen=True)
class PsiMap:
    """ψ：x ↦ x⁻¹·(xα)"""
    parent: FiniteSemigroup
    source: Automorphism
    map: UnaryMap

    def __call__(self, x: ElementId) -> ElementId:
        return self.map(x)

    def is_injective(self) -> bool:
        return self.map.is_bijective()


@dataclass(frozen=True)
class Involution:
    """正则对合 x ↦ x'：(xy)' = y'x'，x'' = x，x = xx'x"""
    parent: FiniteSemigroup
    map: UnaryMap

    def __call__(self, x: ElementId) -> ElementId:
        return self.map(x)


def _as_images(S: FiniteSemigroup, perm) -> np.ndarray:
    images = perm.images if isinstance(perm, (UnaryMap, Automorphism)) else perm
    arr = np.asarray(images, dtype=np.int64)
    if arr.shape != (S.order,) or (arr < 0).any() or (arr >= S.order).any():
        raise IndexOutOfRangeError(f"map must list {S.order} images in range")
    return arr


def is_automorphism(S: FiniteSemigroup, perm) -> bool:
    p = _as_images(S, perm)
    if len(set(p.tolist())) != S.order:
        return False
    arr = S.array
    return bool(np.array_equal(p[arr], arr[np.ix_(p, p)]))


def is_antiautomorphism(S: FiniteSemigroup, perm) -> bool:
    p = _as_images(S, perm)
    if len(set(p.tolist())) != S.order:
        return False
    arr = S.array
    return bool(np.array_equal(p[arr], arr[np.ix_(p, p)].T))


def make_automorphism(S: FiniteSemigroup, images: Sequence[int]) -> Automorphism:
    """由 0 基像列表构造并校验自同构"""
    if not is_automorphism(S, images):
        raise NotAutomorphismError(
            "map " + " ".join(str(v + 1) for v in images) + " is not an automorphism"
        )
    return Automorphism(S, UnaryMap(S, tuple(images)))


def identity_automorphism(S: FiniteSemigroup) -> Automorphism:
    return Automorphism(S, UnaryMap(S, tuple(S.elements)))


def element_fingerprints(S: FiniteSemigroup) -> List[Fingerprint]:
    """自同构不变量：(是否幂等, |H 类|, 指数, 周期)"""
    green = green_relations(S)
    es = idempotents(S)
    return [
        (x in es, len(green.h_class(x))) + index_and_period(S, x)
        for x in S.elements
    ]


class _SearchState:
    """回溯状态：部分映射、已用像、已赋值元素"""

    __slots__ = ("mapping", "used", "assigned")

    def __init__(self, n: int):
        self.mapping = [-1] * n
        self.used = [False] * n
        self.assigned: List[int] = []

    def copy(self) -> "_SearchState":
        state = _SearchState.__new__(_SearchState)
        state.mapping = list(self.mapping)
        state.used = list(self.used)
        state.assigned = list(self.assigned)
        return state


def _propagate_hom(table: Table, fps: Sequence[Fingerprint], state: _SearchState,
                   a: int, b: int) -> bool:
    """赋值 a ↦ b 并沿乘法传播：(x·c)α = (xα)·(cα)"""
    mapping, used, assigned = state.mapping, state.used, state.assigned
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if mapping[x] != -1:
            if mapping[x] != y:
                return False
            continue
        if used[y] or fps[x] != fps[y]:
            return False
        mapping[x] = y
        used[y] = True
        assigned.append(x)
        for c in assigned:
            mc = mapping[c]
            stack.append((table[x][c], table[y][mc]))
            stack.append((table[c][x], table[mc][y]))
    return True


def _search_hom(table: Table, fps: Sequence[Fingerprint], state: _SearchState) -> Iterator[Tuple[int, ...]]:
    try:
        a = state.mapping.index(-1)
    except ValueError:
        yield tuple(state.mapping)
        return
    for b in range(len(table)):
        if state.used[b] or fps[a] != fps[b]:
            continue
        branch = state.copy()
        if _propagate_hom(table, fps, branch, a, b):
            yield from _search_hom(table, fps, branch)


def _automorphisms_from_branch(table: Table, fps: Sequence[Fingerprint], b: int) -> List[Tuple[int, ...]]:
    """工作进程入口：固定 0 ↦ b 的分支"""
    state = _SearchState(len(table))
    if not _propagate_hom(table, fps, state, 0, b):
        return []
    return list(_search_hom(table, fps, state))


def automorphism_group(S: FiniteSemigroup, workers: int = 1) -> List[Automorphism]:
    """全部自同构，按像数组字典序排列（恒等映射在首位）"""
    table = S.table
    fps = element_fingerprints(S)
    if workers > 1 and S.order > 1:
        branches = [b for b in S.elements if fps[b] == fps[0]]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_automorphisms_from_branch,
                             [table] * len(branches), [fps] * len(branches), branches)
            found = [images for part in parts for images in part]
    else:
        found = list(_search_hom(table, fps, _SearchState(S.order)))
    found.sort()
    logger.debug(f"Order {S.order}: {len(found)} automorphisms")
    return [Automorphism(S, UnaryMap(S, images)) for images in found]


def psi_map(S: FiniteSemigroup, alpha: Automorphism, inverse: Optional[UnaryMap] = None) -> PsiMap:
    """xψ = x⁻¹·(xα)；完全正则非逆半群取 H 类中的群逆元"""
    inv = inverse or inversion_map(S)
    T = S.table
    images = tuple(T[inv(x)][alpha(x)] for x in S.elements)
    return PsiMap(S, alpha, UnaryMap(S, images))


def is_psi_injective(S: FiniteSemigroup, alpha: Automorphism) -> bool:
    return psi_map(S, alpha).is_injective()


def is_idempotent_fixing(S: FiniteSemigroup, alpha: Automorphism) -> bool:
    return alpha.fixed == idempotents(S)


def _propagate_involution(table: Table, state: _SearchState, a: int, b: int) -> bool:
    """赋值 a' = b（同时 b' = a）并沿 (xc)' = c'x' 传播"""
    mapping, assigned = state.mapping, state.assigned
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if mapping[x] != -1:
            if mapping[x] != y:
                return False
            continue
        if table[table[x][y]][x] != x or table[table[y][x]][y] != y:
            return False
        mapping[x] = y
        assigned.append(x)
        stack.append((y, x))
        for c in assigned:
            mc = mapping[c]
            stack.append((table[x][c], table[mc][y]))
            stack.append((table[c][x], table[y][mc]))
    return True


def _search_involution(table: Table, state: _SearchState) -> Iterator[Tuple[int, ...]]:
    try:
        a = state.mapping.index(-1)
    except ValueError:
        yield tuple(state.mapping)
        return
    for b in range(len(table)):
        if state.mapping[b] != -1:
            continue
        branch = state.copy()
        if _propagate_involution(table, branch, a, b):
            yield from _search_involution(table, branch)


def find_involutions(S: FiniteSemigroup) -> List[Involution]:
    """满足三条正则对合公理的全部一元运算，按像数组字典序"""
    found = sorted(_search_involution(S.table, _SearchState(S.order)))
    logger.debug(f"Order {S.order}: {len(found)} regular involutions")
    return [Involution(S, UnaryMap(S, images)) for images in found]


def is_regular_involution(S: FiniteSemigroup, images: Sequence[int]) -> bool:
    """直接核对三条公理"""
    T = S.table
    f = list(images)
    return (
        all(f[f[x]] == x for x in S.elements)
        and all(T[T[x][f[x]]][x] == x for x in S.elements)
        and all(f[T[x][y]] == T[f[y]][f[x]] for x in S.elements for y in S.elements)
    )
