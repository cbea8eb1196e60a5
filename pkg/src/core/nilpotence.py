"""
幂零性
有限群的下中心列判定、Sylow 正规性独立判定，以及 Clifford 半群按极大子群的归约
"""
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, List, Optional, Set, Tuple, Union

from sympy import factorint

from src.core.semigroup import ElementId, FiniteSemigroup, index_and_period
from src.core.structure import MaximalSubgroup, clifford_decomposition
from src.utils.exceptions import NotAGroupError
from src.utils.logger import setup_logger

logger = setup_logger("core.nilpotence")


def find_identity(S: FiniteSemigroup) -> Optional[ElementId]:
    T = S.table
    for e in S.elements:
        if all(T[e][x] == x and T[x][e] == x for x in S.elements):
            return e
    return None


def is_group(S: FiniteSemigroup) -> bool:
    """存在单位元且每个元素可逆"""
    e = find_identity(S)
    if e is None:
        return False
    T = S.table
    return all(any(T[x][y] == e and T[y][x] == e for y in S.elements) for x in S.elements)


@dataclass(frozen=True)
class GroupTable:
    """满足群公理的乘法表"""
    semigroup: FiniteSemigroup
    identity: ElementId

    @property
    def order(self) -> int:
        return self.semigroup.order

    @cached_property
    def inverses(self) -> Tuple[ElementId, ...]:
        T = self.semigroup.table
        return tuple(
            next(y for y in self.semigroup.elements if T[x][y] == self.identity)
            for x in self.semigroup.elements
        )

    def element_order(self, x: ElementId) -> int:
        return index_and_period(self.semigroup, x)[1]

    def commutator(self, g: ElementId, h: ElementId) -> ElementId:
        """[g,h] = g⁻¹h⁻¹gh"""
        inv = self.inverses
        return self.semigroup.product(inv[g], inv[h], g, h)

    def generated_subgroup(self, generators: Set[ElementId]) -> FrozenSet[ElementId]:
        """有限群中乘法闭包即子群"""
        T = self.semigroup.table
        closed = set(generators) | {self.identity}
        frontier = list(closed)
        while frontier:
            new = []
            for x in frontier:
                for g in generators:
                    p = T[x][g]
                    if p not in closed:
                        closed.add(p)
                        new.append(p)
            frontier = new
        return frozenset(closed)


def as_group(G: Union[FiniteSemigroup, MaximalSubgroup, GroupTable]) -> GroupTable:
    if isinstance(G, GroupTable):
        return G
    S = G.table if isinstance(G, MaximalSubgroup) else G
    if not is_group(S):
        raise NotAGroupError("table does not satisfy the group axioms")
    return GroupTable(S, find_identity(S))


@dataclass(frozen=True)
class CentralSeries:
    """下中心列 γ_1 ⊇ γ_2 ⊇ …"""
    terms: Tuple[FrozenSet[ElementId], ...]
    terminates: bool
    nilpotency_class: Optional[int]


def lower_central_series(G) -> CentralSeries:
    """γ_{i+1} = ⟨[g, h] : g ∈ G, h ∈ γ_i⟩，直到稳定"""
    group = as_group(G)
    whole = frozenset(group.semigroup.elements)
    terms: List[FrozenSet[ElementId]] = [whole]
    while True:
        current = terms[-1]
        commutators = {group.commutator(g, h) for g in whole for h in current}
        following = group.generated_subgroup(commutators)
        if following == current:
            break
        terms.append(following)
    terminates = terms[-1] == frozenset({group.identity})
    nilpotency_class = len(terms) - 1 if terminates else None
    return CentralSeries(tuple(terms), terminates, nilpotency_class)


def is_nilpotent_group(G) -> bool:
    return lower_central_series(G).terminates


def nilpotency_class(G) -> Optional[int]:
    return lower_central_series(G).nilpotency_class


def is_nilpotent_by_sylow(G) -> bool:
    """独立判定：每个 Sylow 子群正规，等价于 p-元素恰有 p^a 个"""
    group = as_group(G)
    orders = [group.element_order(x) for x in group.semigroup.elements]
    for p, a in factorint(group.order).items():
        p_elements = sum(1 for k in orders if set(factorint(k)) <= {p})
        if p_elements != p ** a:
            return False
    return True


def is_nilpotent_clifford(S: FiniteSemigroup) -> bool:
    """Clifford 半群幂零当且仅当每个极大子群 G_β 幂零"""
    decomposition = clifford_decomposition(S)
    for beta, group in sorted(decomposition.groups.items()):
        if not is_nilpotent_group(group):
            logger.debug(f"Maximal subgroup at {S.label(beta)} is not nilpotent")
            return False
    return True
