"""
基础检查
定义 (S, α) 级别的命题检查接口、子句结果与按半群缓存的派生数据
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional

from src.core.divisibility import SquaringAnalysis, analyze_squaring
from src.core.morphisms import Automorphism, PsiMap, psi_map
from src.core.nilpotence import find_identity, is_group
from src.core.semigroup import (
    FiniteSemigroup,
    UnaryMap,
    idempotents,
    inversion_map,
    is_cancellative,
    is_commutative,
    is_inverse_semigroup,
)
from src.core.structure import GreenPartition, green_relations, is_clifford, is_completely_regular
from src.utils.config import CorpusFilter, StatementConfig, StatementKind
from src.utils.exceptions import NotInverseOrCompletelyRegularError
from src.utils.logger import setup_logger

# 假设不成立时统一使用的子句名
HYPOTHESIS = "hypothesis"


class ClauseStatus(str, Enum):
    """子句状态：跳过（假设不成立）与通过分开计数"""
    PASS = "pass"
    SKIP = "skip"
    VIOLATION = "violation"


@dataclass
class ClauseResult:
    """单个子句的结果，witnesses 为 0 基元素"""
    clause: str
    status: ClauseStatus
    witnesses: List[int] = field(default_factory=list)

    @classmethod
    def skip(cls, clause: str = HYPOTHESIS) -> "ClauseResult":
        return cls(clause, ClauseStatus.SKIP)

    @classmethod
    def judge(cls, clause: str, witnesses: List[int]) -> "ClauseResult":
        """无反例即通过"""
        if witnesses:
            return cls(clause, ClauseStatus.VIOLATION, list(witnesses))
        return cls(clause, ClauseStatus.PASS)

    @property
    def is_violation(self) -> bool:
        return self.status == ClauseStatus.VIOLATION

    def to_dict(self) -> Dict:
        return {"clause": self.clause, "status": self.status.value, "witnesses": self.witnesses}


class SemigroupContext:
    """同一半群的全部自同构共享的派生数据"""

    def __init__(self, S: FiniteSemigroup):
        self.S = S

    @cached_property
    def idempotents(self) -> FrozenSet[int]:
        return idempotents(self.S)

    @cached_property
    def is_inverse(self) -> bool:
        return is_inverse_semigroup(self.S)

    @cached_property
    def green(self) -> GreenPartition:
        return green_relations(self.S)

    @cached_property
    def is_completely_regular(self) -> bool:
        return is_completely_regular(self.S, self.green)

    @cached_property
    def is_clifford(self) -> bool:
        return is_clifford(self.S)

    @cached_property
    def is_group(self) -> bool:
        return is_group(self.S)

    @cached_property
    def identity(self) -> Optional[int]:
        return find_identity(self.S)

    @cached_property
    def is_cancellative(self) -> bool:
        return is_cancellative(self.S)

    @cached_property
    def is_commutative(self) -> bool:
        return is_commutative(self.S)

    @cached_property
    def inversion(self) -> Optional[UnaryMap]:
        """逆半群或完全正则半群上的逆元映射，其余为 None"""
        try:
            return inversion_map(self.S)
        except NotInverseOrCompletelyRegularError:
            return None

    @cached_property
    def squaring(self) -> SquaringAnalysis:
        return analyze_squaring(self.S)

    def psi(self, alpha: Automorphism) -> PsiMap:
        return psi_map(self.S, alpha, self.inversion)

    def non_commuting_pairs(self) -> List[int]:
        T = self.S.table
        for x in self.S.elements:
            for y in self.S.elements:
                if T[x][y] != T[y][x]:
                    return [x, y]
        return []


def is_involutory(alpha: Automorphism) -> bool:
    """α² = 1（包括恒等）"""
    return alpha.order <= 2


def fixes_exactly_idempotents(ctx: SemigroupContext, alpha: Automorphism) -> bool:
    return alpha.fixed == ctx.idempotents


class BaseCheck(ABC):
    """命题检查基类"""

    def __init__(self, config: StatementConfig):
        self.config = config
        self.logger = setup_logger(f"verify.{config.statement_id}")

    @property
    def statement_id(self) -> str:
        return self.config.statement_id

    @property
    def kind(self) -> StatementKind:
        return self.config.kind

    @property
    def corpus_filter(self) -> CorpusFilter:
        return self.config.corpus_filter

    def applies_to(self, ctx: SemigroupContext) -> bool:
        """实例过滤；默认要求逆半群"""
        return ctx.is_inverse

    @abstractmethod
    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        """检查一个 (S, α)；假设不成立时返回单个跳过结果"""
        pass

    def check(self, S: FiniteSemigroup, alpha: Automorphism) -> List[ClauseResult]:
        return self.check_pair(SemigroupContext(S), alpha)
