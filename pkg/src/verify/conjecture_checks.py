"""
猜想检查
有限阶 α 下 ψ 单射是否迫使 Fix(α) = E(S)，以及完全正则情形的对合结论
"""
from typing import List

from src.core.morphisms import Automorphism
from src.verify.base_check import (
    BaseCheck,
    ClauseResult,
    SemigroupContext,
    fixes_exactly_idempotents,
    is_involutory,
)


class Conjecture32Check(BaseCheck):
    """ψ 单射 ⇒ Fix(α) = E(S)"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not ctx.psi(alpha).is_injective():
            return [ClauseResult.skip()]
        difference = sorted(alpha.fixed ^ ctx.idempotents)
        return [ClauseResult.judge("fixed-equals-idempotents", difference)]


class Conjecture33Check(BaseCheck):
    """唯一 2-可除完全正则、α² = 1、Fix(α) = E(S) ⇒ xα = x⁻¹（不断言交换性）"""

    def applies_to(self, ctx: SemigroupContext) -> bool:
        return ctx.is_completely_regular

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not (ctx.squaring.bijective and is_involutory(alpha) and fixes_exactly_idempotents(ctx, alpha)):
            return [ClauseResult.skip()]
        inv = ctx.inversion
        bad = [x for x in ctx.S.elements if alpha(x) != inv(x)]
        return [ClauseResult.judge("alpha-is-inversion", bad[:1])]
