"""
结构理论
Green 关系、极大子群、Clifford 半群识别与群的强半格分解
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.core.semigroup import (
    ElementId,
    FiniteSemigroup,
    UnaryMap,
    idempotents,
    inversion_map,
    is_inverse_semigroup,
    natural_partial_order,
)
from src.utils.exceptions import NotCliffordError

Partition = Tuple[FrozenSet[ElementId], ...]


def _partition_by(keys: Sequence[Any]) -> Partition:
    groups: Dict[Any, List[ElementId]] = {}
    for x, key in enumerate(keys):
        groups.setdefault(key, []).append(x)
    return tuple(sorted((frozenset(v) for v in groups.values()), key=min))


@dataclass(frozen=True)
class GreenPartition:
    """Green 关系 R、L、H、D 的等价类"""
    parent: FiniteSemigroup
    r_classes: Partition
    l_classes: Partition
    h_classes: Partition
    d_classes: Partition

    def _lookup(self, classes: Partition, x: ElementId) -> FrozenSet[ElementId]:
        for cls in classes:
            if x in cls:
                return cls
        raise KeyError(x)

    def r_class(self, x: ElementId) -> FrozenSet[ElementId]:
        return self._lookup(self.r_classes, x)

    def l_class(self, x: ElementId) -> FrozenSet[ElementId]:
        return self._lookup(self.l_classes, x)

    def h_class(self, x: ElementId) -> FrozenSet[ElementId]:
        return self._lookup(self.h_classes, x)

    def d_class(self, x: ElementId) -> FrozenSet[ElementId]:
        return self._lookup(self.d_classes, x)

    def sizes(self) -> Dict[str, List[int]]:
        return {
            "R": [len(c) for c in self.r_classes],
            "L": [len(c) for c in self.l_classes],
            "H": [len(c) for c in self.h_classes],
            "D": [len(c) for c in self.d_classes],
        }


def green_relations(S: FiniteSemigroup) -> GreenPartition:
    """按主右理想 xS¹ 与主左理想 S¹x 比较求 R、L；H 取交，D 取并的传递闭包"""
    T = S.table
    right_ideals = [frozenset(T[x]) | {x} for x in S.elements]
    left_ideals = [frozenset(T[y][x] for y in S.elements) | {x} for x in S.elements]
    r_classes = _partition_by(right_ideals)
    l_classes = _partition_by(left_ideals)
    h_classes = _partition_by(list(zip(right_ideals, left_ideals)))

    parent = list(S.elements)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for cls in r_classes + l_classes:
        first = min(cls)
        for x in cls:
            union(first, x)
    d_classes = _partition_by([find(x) for x in S.elements])
    return GreenPartition(S, r_classes, l_classes, h_classes, d_classes)


def is_completely_regular(S: FiniteSemigroup, green: Optional[GreenPartition] = None) -> bool:
    """每个 H 类都含幂等元"""
    green = green or green_relations(S)
    es = idempotents(S)
    return all(cls & es for cls in green.h_classes)


def is_clifford(S: FiniteSemigroup) -> bool:
    if not is_inverse_semigroup(S):
        return False
    inv = inversion_map(S)
    T = S.table
    return all(T[x][inv(x)] == T[inv(x)][x] for x in S.elements)


@dataclass(frozen=True)
class MaximalSubgroup:
    """以幂等元 e 为单位元的极大子群 H_e"""
    parent: FiniteSemigroup
    identity: ElementId
    elements: Tuple[ElementId, ...]

    @cached_property
    def table(self) -> FiniteSemigroup:
        """限制到 H_e 上的群表（按 elements 顺序重新编号）"""
        return self.parent.restrict(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def inverse(self, g: ElementId) -> ElementId:
        T = self.parent.table
        for h in self.elements:
            if T[g][h] == self.identity and T[h][g] == self.identity:
                return h
        raise KeyError(g)


def maximal_subgroups(S: FiniteSemigroup, green: Optional[GreenPartition] = None) -> List[MaximalSubgroup]:
    green = green or green_relations(S)
    return [
        MaximalSubgroup(S, e, tuple(sorted(green.h_class(e))))
        for e in sorted(idempotents(S))
    ]


@dataclass(frozen=True)
class CliffordDecomposition:
    """群的强半格：半格 E(S)、极大子群 G_β 与连接同态 φ_{β,γ}: g ↦ e_γ·g"""
    parent: FiniteSemigroup
    semilattice: FrozenSet[Tuple[ElementId, ElementId]]
    groups: Dict[ElementId, MaximalSubgroup]
    linking: Dict[Tuple[ElementId, ElementId], Dict[ElementId, ElementId]]

    @property
    def indices(self) -> List[ElementId]:
        return sorted(self.groups)

    def below(self, gamma: ElementId, beta: ElementId) -> bool:
        """γ ≤ β"""
        return (gamma, beta) in self.semilattice

    def meet(self, beta: ElementId, gamma: ElementId) -> ElementId:
        return self.parent.table[beta][gamma]

    def group_of(self, x: ElementId) -> ElementId:
        for beta, group in self.groups.items():
            if x in group.elements:
                return beta
        raise KeyError(x)

    def link(self, beta: ElementId, gamma: ElementId, g: ElementId) -> ElementId:
        return self.linking[(beta, gamma)][g]

    def reconstruct_product(self, g: ElementId, h: ElementId) -> ElementId:
        """g ∈ G_β，h ∈ G_γ：g·h = (g φ_{β,βγ})·(h φ_{γ,βγ})"""
        beta, gamma = self.group_of(g), self.group_of(h)
        delta = self.meet(beta, gamma)
        return self.parent.table[self.link(beta, delta, g)][self.link(gamma, delta, h)]

    def invariant_problems(self) -> List[str]:
        """逐条核对分解的不变量，返回不成立的描述"""
        S = self.parent
        T = S.table
        problems: List[str] = []

        covered = sorted(x for g in self.groups.values() for x in g.elements)
        if covered != list(S.elements):
            problems.append("maximal subgroups do not partition the semigroup")

        for beta in self.indices:
            if any(self.link(beta, beta, g) != g for g in self.groups[beta].elements):
                problems.append(f"φ({S.label(beta)},{S.label(beta)}) is not the identity")

        for (beta, gamma), phi in self.linking.items():
            for g in self.groups[beta].elements:
                for h in self.groups[beta].elements:
                    if phi[T[g][h]] != T[phi[g]][phi[h]]:
                        problems.append(
                            f"φ({S.label(beta)},{S.label(gamma)}) is not a homomorphism"
                        )
                        break
                else:
                    continue
                break
            for delta in self.indices:
                if (gamma, delta) in self.linking:
                    composite = all(
                        self.link(gamma, delta, phi[g]) == self.link(beta, delta, g)
                        for g in self.groups[beta].elements
                    )
                    if not composite:
                        problems.append(
                            f"φ({S.label(beta)},{S.label(gamma)})∘φ({S.label(gamma)},"
                            f"{S.label(delta)}) != φ({S.label(beta)},{S.label(delta)})"
                        )

        for g in S.elements:
            for h in S.elements:
                if self.reconstruct_product(g, h) != T[g][h]:
                    problems.append(
                        f"reconstructed product {S.label(g)}·{S.label(h)} differs from the table"
                    )
        return problems

    def to_dict(self) -> Dict[str, Any]:
        """JSON 报告使用的 1 基表示"""
        S = self.parent
        return {
            "idempotents": [S.label(e) for e in self.indices],
            "semilattice": sorted([S.label(g), S.label(b)] for g, b in self.semilattice),
            "groups": {
                S.label(beta): [S.label(x) for x in group.elements]
                for beta, group in sorted(self.groups.items())
            },
            "linking_maps": [
                {
                    "from": S.label(beta),
                    "to": S.label(gamma),
                    "map": {S.label(g): S.label(v) for g, v in sorted(phi.items())},
                }
                for (beta, gamma), phi in sorted(self.linking.items())
            ],
        }


def clifford_decomposition(S: FiniteSemigroup) -> CliffordDecomposition:
    if not is_clifford(S):
        raise NotCliffordError("semigroup is not a Clifford semigroup")
    green = green_relations(S)
    groups = {g.identity: g for g in maximal_subgroups(S, green)}
    es = sorted(groups)
    semilattice = natural_partial_order(S).restricted_to(es)
    T = S.table
    linking: Dict[Tuple[ElementId, ElementId], Dict[ElementId, ElementId]] = {}
    for beta in es:
        for gamma in es:
            if (gamma, beta) in semilattice:
                linking[(beta, gamma)] = {g: T[gamma][g] for g in groups[beta].elements}
    return CliffordDecomposition(S, semilattice, groups, linking)


def class_images_are_classes(classes: Partition, images: UnaryMap) -> bool:
    """映射把每个等价类映为某个等价类"""
    as_set = set(classes)
    return all(frozenset(images(x) for x in cls) in as_set for cls in classes)
