"""
唯一 2-可除性
平方映射分析与平方根 x^{1/2}、x^{-1/2}
"""
from dataclasses import dataclass
from typing import Optional

from src.core.semigroup import ElementId, FiniteSemigroup, UnaryMap, inversion_map
from src.utils.exceptions import InvariantViolationError, NotUniquely2DivisibleError


@dataclass(frozen=True)
class SquaringAnalysis:
    """平方映射 x ↦ x²；为双射时附带平方根表"""
    parent: FiniteSemigroup
    squares: UnaryMap
    bijective: bool
    roots: Optional[UnaryMap] = None

    def root(self, x: ElementId) -> ElementId:
        if self.roots is None:
            raise NotUniquely2DivisibleError("squaring map is not a bijection")
        return self.roots(x)


def analyze_squaring(S: FiniteSemigroup) -> SquaringAnalysis:
    T = S.table
    squares = UnaryMap(S, tuple(T[x][x] for x in S.elements))
    if not squares.is_bijective():
        return SquaringAnalysis(S, squares, False)
    roots = [0] * S.order
    for x, sq in enumerate(squares.images):
        roots[sq] = x
    return SquaringAnalysis(S, squares, True, UnaryMap(S, tuple(roots)))


def sqrt(S: FiniteSemigroup, x: ElementId, analysis: Optional[SquaringAnalysis] = None) -> ElementId:
    """唯一平方根 x^{1/2}"""
    analysis = analysis or analyze_squaring(S)
    return analysis.root(x)


def inv_sqrt(S: FiniteSemigroup, x: ElementId, analysis: Optional[SquaringAnalysis] = None,
             inverse: Optional[UnaryMap] = None) -> ElementId:
    """x^{-1/2}：分别按 (x^{1/2})⁻¹ 与 (x⁻¹)^{1/2} 计算并要求两者一致"""
    analysis = analysis or analyze_squaring(S)
    inv = inverse or inversion_map(S)
    via_root = inv(analysis.root(x))
    via_inverse = analysis.root(inv(x))
    if via_root != via_inverse:
        raise InvariantViolationError(
            f"(x^(1/2))⁻¹ = {S.label(via_root)} but (x⁻¹)^(1/2) = {S.label(via_inverse)} "
            f"at x = {S.label(x)}"
        )
    return via_root
