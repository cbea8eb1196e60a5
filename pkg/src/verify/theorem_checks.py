"""
定理检查
素数阶幂等元固定自同构、对合定理（半群与群两个版本）、无不动点自同构的群论结论，
以及可消半群问题
"""
from typing import List

from sympy import isprime

from src.core.morphisms import Automorphism
from src.core.nilpotence import is_nilpotent_clifford, is_nilpotent_group, nilpotency_class
from src.core.semigroup import FiniteSemigroup
from src.core.structure import clifford_decomposition
from src.utils.config import config_manager
from src.utils.exceptions import NotAGroupError
from src.verify.base_check import (
    BaseCheck,
    ClauseResult,
    SemigroupContext,
    fixes_exactly_idempotents,
    is_involutory,
)


def _inversion_clause(ctx: SemigroupContext, alpha: Automorphism) -> ClauseResult:
    inv = ctx.inversion
    bad = [x for x in ctx.S.elements if alpha(x) != inv(x)]
    return ClauseResult.judge("alpha-is-inversion", bad[:1])


def _commutative_clause(ctx: SemigroupContext, name: str = "commutative") -> ClauseResult:
    return ClauseResult.judge(name, ctx.non_commuting_pairs())


def _fixed_point_free(ctx: SemigroupContext, alpha: Automorphism) -> bool:
    return alpha.fixed == frozenset({ctx.identity})


class MainTheorem1Check(BaseCheck):
    """α 阶为素数且 Fix(α) = E(S) ⇒ S 为幂零 Clifford 半群"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not (isprime(alpha.order) and fixes_exactly_idempotents(ctx, alpha)):
            return [ClauseResult.skip()]
        S, T, inv = ctx.S, ctx.S.table, ctx.inversion
        results = [
            ClauseResult.judge("waypoint-units-commute", [
                x for x in S.elements if T[inv(x)][x] != T[x][inv(x)]
            ][:1]),
            ClauseResult.judge("clifford", [] if ctx.is_clifford else [0]),
        ]
        if not ctx.is_clifford:
            return results

        results.append(ClauseResult.judge("nilpotent", [] if is_nilpotent_clifford(S) else [0]))
        decomposition = clifford_decomposition(S)
        strays = [
            beta for beta, group in sorted(decomposition.groups.items())
            if {alpha(g) for g in group.elements} != set(group.elements)
        ]
        results.append(ClauseResult.judge("alpha-preserves-each-group", strays))
        return results


class MainTheorem2Check(BaseCheck):
    """唯一 2-可除、α² = 1、Fix(α) = E(S) ⇒ xα = x⁻¹ 且 S 交换"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not (ctx.squaring.bijective and is_involutory(alpha) and fixes_exactly_idempotents(ctx, alpha)):
            return [ClauseResult.skip()]
        return [_inversion_clause(ctx, alpha), _commutative_clause(ctx)]


class GroupCheck(BaseCheck):
    """群论命题的公共前提"""

    def applies_to(self, ctx: SemigroupContext) -> bool:
        return ctx.is_group

    def check(self, S: FiniteSemigroup, alpha: Automorphism) -> List[ClauseResult]:
        ctx = SemigroupContext(S)
        if not ctx.is_group:
            raise NotAGroupError(f"{self.statement_id} requires a group")
        return self.check_pair(ctx, alpha)


class NeumannInvolutionCheck(GroupCheck):
    """唯一 2-可除群、α² = 1、Fix(α) = {e} ⇒ xα = x⁻¹ 且 G 交换"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not (ctx.squaring.bijective and is_involutory(alpha) and _fixed_point_free(ctx, alpha)):
            return [ClauseResult.skip()]
        return [_inversion_clause(ctx, alpha), _commutative_clause(ctx, "abelian")]


class ThompsonCheck(GroupCheck):
    """素数阶无不动点自同构 ⇒ G 幂零"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not (isprime(alpha.order) and _fixed_point_free(ctx, alpha)):
            return [ClauseResult.skip()]
        return [ClauseResult.judge("nilpotent", [] if is_nilpotent_group(ctx.S) else [ctx.identity])]


class NeumannOrder3Check(GroupCheck):
    """α³ = 1、α ≠ 1 且无不动点 ⇒ G 幂零且类 ≤ 2"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not (alpha.order == 3 and _fixed_point_free(ctx, alpha)):
            return [ClauseResult.skip()]
        klass = nilpotency_class(ctx.S)
        ok = klass is not None and klass <= 2
        return [ClauseResult.judge("class-at-most-2", [] if ok else [ctx.identity])]


class NeumannFixedPointFreeInvolutionCheck(GroupCheck):
    """2 阶无不动点自同构 ⇒ |G| 为奇数且 G 交换"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not (alpha.order == 2 and _fixed_point_free(ctx, alpha)):
            return [ClauseResult.skip()]
        return [
            ClauseResult.judge("odd-order", [] if ctx.S.order % 2 == 1 else [ctx.identity]),
            _commutative_clause(ctx, "abelian"),
        ]


class CancellativeProblemCheck(BaseCheck):
    """有限可消半群：先确认是群，再套用群版本的对合定理"""

    def __init__(self, config):
        super().__init__(config)
        self._neumann = NeumannInvolutionCheck(config)

    def applies_to(self, ctx: SemigroupContext) -> bool:
        return ctx.is_cancellative

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not ctx.is_group:
            return [ClauseResult.judge("cancellative-is-group", [0])]
        results = [ClauseResult.judge("cancellative-is-group", [])]
        results.extend(self._neumann.check_pair(ctx, alpha))
        return results


def check_thm_main1(S: FiniteSemigroup, alpha: Automorphism) -> List[ClauseResult]:
    return MainTheorem1Check(config_manager.get_statement_config("thm12")).check(S, alpha)


def check_thm_main2(S: FiniteSemigroup, alpha: Automorphism) -> List[ClauseResult]:
    return MainTheorem2Check(config_manager.get_statement_config("thm14")).check(S, alpha)


def check_thm_neumann(G: FiniteSemigroup, alpha: Automorphism) -> List[ClauseResult]:
    return NeumannInvolutionCheck(config_manager.get_statement_config("thm13")).check(G, alpha)
