"""
恒等式检查
ψ 映射引理的两个方向、证明中的恒等式以及自同构与求逆的交换性
"""
from typing import Dict, List

from src.core.divisibility import inv_sqrt
from src.core.morphisms import Automorphism
from src.core.semigroup import FiniteSemigroup
from src.utils.config import config_manager
from src.verify.base_check import (
    BaseCheck,
    ClauseResult,
    SemigroupContext,
    fixes_exactly_idempotents,
    is_involutory,
)


def _psi_collision(images) -> List[int]:
    seen: Dict[int, int] = {}
    for x, v in enumerate(images):
        if v in seen:
            return [seen[v], x]
        seen[v] = x
    return []


class Lemma21aCheck(BaseCheck):
    """Fix(α) = E(S) ⇒ ψ 单射"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not fixes_exactly_idempotents(ctx, alpha):
            return [ClauseResult.skip()]
        psi = ctx.psi(alpha)
        return [ClauseResult.judge("psi-injective", _psi_collision(psi.map.images))]


class Lemma21bCheck(BaseCheck):
    """ψ 单射 ⇒ Fix(α) ⊆ E(S)"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        psi = ctx.psi(alpha)
        if not psi.is_injective():
            return [ClauseResult.skip()]
        outside = sorted(alpha.fixed - ctx.idempotents)
        return [ClauseResult.judge("fixed-points-idempotent", outside)]


class PsiAlphaCheck(BaseCheck):
    """α² = 1 ⇒ (xψ)α = (xψ)⁻¹"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not is_involutory(alpha):
            return [ClauseResult.skip()]
        psi = ctx.psi(alpha)
        inv = ctx.inversion
        bad = [x for x in ctx.S.elements if alpha(psi(x)) != inv(psi(x))]
        return [ClauseResult.judge("psi-alpha-is-inverse", bad[:1])]


class AlmostInversionCheck(BaseCheck):
    """唯一 2-可除、α² = 1、Fix(α) = E(S) ⇒ (xψ)^{-1/2} = x"""

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        if not (ctx.squaring.bijective and is_involutory(alpha) and fixes_exactly_idempotents(ctx, alpha)):
            return [ClauseResult.skip()]
        psi = ctx.psi(alpha)
        bad = [
            x for x in ctx.S.elements
            if inv_sqrt(ctx.S, psi(x), ctx.squaring, ctx.inversion) != x
        ]
        return [ClauseResult.judge("inverse-root-of-psi", bad[:1])]


class ProofIdentitiesCheck(BaseCheck):
    """(yψ)(yψ)⁻¹ 与 (yψ)⁻¹(yψ) 的两条计算链，外加 (xψ)α 与 (xψ)^{-1/2} 两式

    一般形式对所有 (S, α) 成立：
      (yψ)(yψ)⁻¹ = y⁻¹·(yy⁻¹)α·y，(yψ)⁻¹(yψ) = (yα)⁻¹·yy⁻¹·(yα)；
    Fix(α) = E(S) 时进一步化简为 y⁻¹y 与 (y⁻¹y)α。
    """

    def __init__(self, config):
        super().__init__(config)
        self._psi_alpha = PsiAlphaCheck(config)
        self._almost = AlmostInversionCheck(config)

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        S, T, inv = ctx.S, ctx.S.table, ctx.inversion
        psi = ctx.psi(alpha)

        def right_unit(y: int) -> int:
            return T[psi(y)][inv(psi(y))]

        def left_unit(y: int) -> int:
            return T[inv(psi(y))][psi(y)]

        results = [
            ClauseResult.judge("psi-right-unit-general", [
                y for y in S.elements
                if right_unit(y) != S.product(inv(y), alpha(T[y][inv(y)]), y)
            ][:1]),
            ClauseResult.judge("psi-left-unit-general", [
                y for y in S.elements
                if left_unit(y) != S.product(inv(alpha(y)), T[y][inv(y)], alpha(y))
            ][:1]),
        ]
        if fixes_exactly_idempotents(ctx, alpha):
            results.append(ClauseResult.judge("psi-right-unit", [
                y for y in S.elements if right_unit(y) != T[inv(y)][y]
            ][:1]))
            results.append(ClauseResult.judge("psi-left-unit", [
                y for y in S.elements if left_unit(y) != alpha(T[inv(y)][y])
            ][:1]))
        else:
            results.append(ClauseResult.skip("psi-units-under-fixed-idempotents"))

        results.extend(self._psi_alpha.check_pair(ctx, alpha))
        results.extend(self._almost.check_pair(ctx, alpha))
        return results


class AutInversionCheck(BaseCheck):
    """(x⁻¹)α = (xα)⁻¹"""

    def applies_to(self, ctx: SemigroupContext) -> bool:
        return ctx.inversion is not None

    def check_pair(self, ctx: SemigroupContext, alpha: Automorphism) -> List[ClauseResult]:
        inv = ctx.inversion
        bad = [x for x in ctx.S.elements if alpha(inv(x)) != inv(alpha(x))]
        return [ClauseResult.judge("commutes-with-inversion", bad[:1])]


def check_lemma21(S: FiniteSemigroup, alpha: Automorphism) -> Dict[str, ClauseResult]:
    """两个方向分别给出结果"""
    ctx = SemigroupContext(S)
    return {
        "lemma21a": Lemma21aCheck(config_manager.get_statement_config("lemma21a")).check_pair(ctx, alpha)[0],
        "lemma21b": Lemma21bCheck(config_manager.get_statement_config("lemma21b")).check_pair(ctx, alpha)[0],
    }


def check_proof_identities(S: FiniteSemigroup, alpha: Automorphism) -> List[ClauseResult]:
    check = ProofIdentitiesCheck(config_manager.get_statement_config("proof12-identities"))
    return check.check(S, alpha)
