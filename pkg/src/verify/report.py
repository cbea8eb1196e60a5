"""
验证报告
TheoremReport 与可回放的 CounterexampleRecord（pydantic 模型，JSON 序列化）
"""
from typing import List, Set

from pydantic import BaseModel, Field, model_validator

from src.core.morphisms import Automorphism
from src.core.semigroup import FiniteSemigroup
from src.utils.config import StatementConfig
from src.verify.base_check import ClauseResult, ClauseStatus


class CounterexampleRecord(BaseModel):
    """一次违例；重新运行同名检查应复现同一子句与见证元素"""
    statement: str = Field(..., description="命题编号")
    table: List[List[int]] = Field(..., description="规范乘法表，1 基")
    alpha: List[int] = Field(..., description="自同构的像，1 基")
    clause: str = Field(..., description="失败的子句")
    witnesses: List[int] = Field(default_factory=list, description="见证元素，1 基")

    def sort_key(self):
        return (self.table, self.alpha, self.clause, self.witnesses)


class TheoremReport(BaseModel):
    """单个命题在一个语料上的汇总"""
    statement: str
    kind: str
    description: str = ""
    semigroups: int = Field(0, ge=0, description="参与检查的半群个数")
    checked: int = Field(0, ge=0, description="检查过的 (S, α) 对数")
    satisfied_hypotheses: int = Field(0, ge=0)
    skipped: int = Field(0, ge=0)
    violations: List[CounterexampleRecord] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    passed: bool = True

    @model_validator(mode="after")
    def _passed_matches_violations(self) -> "TheoremReport":
        if self.passed != (not self.violations):
            raise ValueError("passed flag must be set exactly when there are no violations")
        if self.satisfied_hypotheses + self.skipped != self.checked:
            raise ValueError("satisfied and skipped counts must add up to checked")
        return self

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


def make_record(statement_id: str, S: FiniteSemigroup, alpha_images: List[int],
                result: ClauseResult) -> CounterexampleRecord:
    return CounterexampleRecord(
        statement=statement_id,
        table=[[v + 1 for v in row] for row in S.table],
        alpha=[v + 1 for v in alpha_images],
        clause=result.clause,
        witnesses=[w + 1 for w in result.witnesses],
    )


class ReportBuilder:
    """逐对累积结果，最后生成确定性的报告"""

    def __init__(self, config: StatementConfig):
        self.config = config
        self.semigroups = 0
        self.checked = 0
        self.satisfied = 0
        self.skipped = 0
        self.violations: List[CounterexampleRecord] = []
        self._satisfying: Set[int] = set()
        self._noncommutative: Set[int] = set()

    def add_semigroup(self) -> int:
        self.semigroups += 1
        return self.semigroups

    def add_pair(self, S: FiniteSemigroup, alpha: Automorphism, results: List[ClauseResult],
                 commutative: bool, instance: int) -> None:
        self.add_images(S, list(alpha.images), results, commutative, instance)

    def add_images(self, S: FiniteSemigroup, alpha_images: List[int], results: List[ClauseResult],
                   commutative: bool, instance: int) -> None:
        self.checked += 1
        if all(r.status == ClauseStatus.SKIP for r in results):
            self.skipped += 1
            return
        self.satisfied += 1
        self._satisfying.add(instance)
        if not commutative:
            self._noncommutative.add(instance)
        for result in results:
            if result.is_violation:
                self.violations.append(make_record(self.config.statement_id, S, alpha_images, result))

    def build(self) -> TheoremReport:
        notes = []
        if self._satisfying:
            notes.append(
                f"{len(self._noncommutative)} of {len(self._satisfying)} hypothesis-satisfying "
                f"semigroups are non-commutative"
            )
        violations = sorted(self.violations, key=CounterexampleRecord.sort_key)
        return TheoremReport(
            statement=self.config.statement_id,
            kind=self.config.kind.value,
            description=self.config.description,
            semigroups=self.semigroups,
            checked=self.checked,
            satisfied_hypotheses=self.satisfied,
            skipped=self.skipped,
            violations=violations,
            notes=notes,
            passed=not violations,
        )
