"""
反例画廊
四元带 B4 上的正则对合，以及左零带上对合结论成立而交换性不成立的实例
"""
from typing import List, Tuple

from src.core.catalog import BAND_B4_INVOLUTION, band_b4, left_zero_band
from src.core.morphisms import (
    Involution,
    find_involutions,
    identity_automorphism,
    is_automorphism,
    is_regular_involution,
)
from src.core.semigroup import FiniteSemigroup, UnaryMap, is_band
from src.utils.config import StatementKind
from src.utils.logger import setup_logger
from src.verify.base_check import ClauseResult, SemigroupContext
from src.verify.check_factory import CheckFactory
from src.verify.report import TheoremReport, make_record

logger = setup_logger("verify.gallery")

GALLERY_STATEMENT = "gallery"
LEFT_ZERO_ORDERS = (2, 3, 4)

Assertion = Tuple[FiniteSemigroup, List[int], ClauseResult]


def gallery_band_B4() -> Tuple[FiniteSemigroup, Involution]:
    S = band_b4()
    return S, Involution(S, UnaryMap(S, BAND_B4_INVOLUTION))


def _b4_assertions() -> List[Assertion]:
    S, involution = gallery_band_B4()
    identity = list(identity_automorphism(S).images)
    images = list(involution.map.images)
    T = S.table
    differs = [x for x in S.elements if x != involution(x)]
    commuting_failure = [
        [x, y] for x in S.elements for y in S.elements if T[x][y] != T[y][x]
    ]
    found = [list(inv.map.images) for inv in find_involutions(S)]
    return [
        (S, identity, ClauseResult.judge("b4-involution-axioms",
                                         [] if is_regular_involution(S, images) else [0])),
        (S, identity, ClauseResult.judge("b4-involution-found-by-search",
                                         [] if images in found else [0])),
        (S, identity, ClauseResult.judge("b4-band", [] if is_band(S) else [0])),
        (S, identity, ClauseResult.judge("b4-identity-is-automorphism",
                                         [] if is_automorphism(S, identity) else [0])),
        # 需要存在 xα ≠ x'，因此空见证表示失败
        (S, identity, ClauseResult.judge("b4-alpha-differs-from-involution",
                                         [] if differs and differs[0] == 0 else [0])),
        (S, identity, ClauseResult.judge("b4-non-commutative",
                                         [] if commuting_failure and commuting_failure[0] == [0, 1] else [0])),
    ]


def _left_zero_assertions(n: int) -> List[Assertion]:
    S = left_zero_band(n)
    ctx = SemigroupContext(S)
    alpha = identity_automorphism(S)
    identity = list(alpha.images)
    conj33 = CheckFactory.get_check("conj33")
    results = conj33.check_pair(ctx, alpha)
    hypotheses_hold = bool(results) and results[0].clause != "hypothesis"
    conclusion = [r for r in results if r.is_violation]
    return [
        (S, identity, ClauseResult.judge(f"L{n}-conj33-hypotheses", [] if hypotheses_hold else [0])),
        (S, identity, ClauseResult.judge(f"L{n}-alpha-is-inverse", conclusion[0].witnesses if conclusion else [])),
        (S, identity, ClauseResult.judge(f"L{n}-non-commutative", [] if not ctx.is_commutative else [0])),
    ]


def _all_assertions() -> List[Assertion]:
    assertions = _b4_assertions()
    for n in LEFT_ZERO_ORDERS:
        assertions.extend(_left_zero_assertions(n))
    return assertions


def recheck_gallery(S: FiniteSemigroup) -> List[ClauseResult]:
    """重新计算画廊中关于 S 的全部断言，供回放使用"""
    return [result for T, _, result in _all_assertions() if T == S]


def gallery_checks() -> TheoremReport:
    assertions = _all_assertions()

    violations = [
        make_record(GALLERY_STATEMENT, S, images, result)
        for S, images, result in assertions if result.is_violation
    ]
    for record in violations:
        logger.error(f"Gallery assertion failed: {record.clause}")
    semigroups = {S for S, _, _ in assertions}
    return TheoremReport(
        statement=GALLERY_STATEMENT,
        kind=StatementKind.GALLERY.value,
        description="band B4 with its regular involution; left-zero bands",
        semigroups=len(semigroups),
        checked=len(assertions),
        satisfied_hypotheses=len(assertions),
        skipped=0,
        violations=violations,
        notes=[result.clause for _, _, result in assertions],
        passed=not violations,
    )
