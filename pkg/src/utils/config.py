"""
配置管理
运行配置、语料过滤器、阶数上限与可验证命题目录
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from src.utils.exceptions import ConfigurationError, OrderTooLargeError


class CorpusFilter(str, Enum):
    """语料过滤器"""
    ALL = "all"
    INVERSE = "inverse"
    COMPLETELY_REGULAR = "cr"
    CLIFFORD = "clifford"
    BAND = "band"
    GROUP = "group"
    CANCELLATIVE = "cancellative"


class StatementKind(str, Enum):
    """命题类别：定理类违例是实现错误，猜想类违例是候选反例"""
    THEOREM = "theorem"
    CONJECTURE = "conjecture"
    PROBLEM = "problem"
    GALLERY = "gallery"


# 默认阶数上限（超过需显式 --force-large）
DEFAULT_ORDER_CAPS: Dict[CorpusFilter, int] = {
    CorpusFilter.ALL: 6,
    CorpusFilter.INVERSE: 6,
    CorpusFilter.GROUP: 15,
    CorpusFilter.COMPLETELY_REGULAR: 5,
    CorpusFilter.CLIFFORD: 5,
    CorpusFilter.BAND: 5,
    CorpusFilter.CANCELLATIVE: 5,
}

# 群库覆盖的最大阶数，强制参数也不能越过
GROUP_HARD_LIMIT = 15


def order_cap(corpus_filter: CorpusFilter) -> int:
    """获取过滤器的默认阶数上限"""
    return DEFAULT_ORDER_CAPS[corpus_filter]


def check_order_cap(max_order: int, corpus_filter: CorpusFilter, force_large: bool = False) -> bool:
    """检查阶数上限；返回 True 表示使用了越限覆盖"""
    if max_order < 1:
        raise ConfigurationError(f"max_order must be at least 1, got {max_order}")
    if corpus_filter == CorpusFilter.GROUP and max_order > GROUP_HARD_LIMIT:
        raise OrderTooLargeError(
            f"group corpus is available up to order {GROUP_HARD_LIMIT}, requested {max_order}"
        )
    cap = order_cap(corpus_filter)
    if max_order <= cap:
        return False
    if not force_large:
        raise OrderTooLargeError(
            f"max order {max_order} exceeds the default cap {cap} for filter "
            f"'{corpus_filter.value}'; pass --force-large to override"
        )
    return True


@dataclass
class RunConfig:
    """一次命令行运行的配置"""
    command: str
    max_order: int = 4
    corpus_filter: Optional[CorpusFilter] = None
    input_paths: List[str] = field(default_factory=list)
    output_path: Optional[str] = None
    workers: int = 1
    force_large: bool = False
    overridden_caps: bool = False

    def __post_init__(self):
        if not self.command:
            raise ConfigurationError("Command is required")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be at least 1, got {self.workers}")
        if self.corpus_filter is not None:
            self.overridden_caps = check_order_cap(
                self.max_order, self.corpus_filter, self.force_large
            )


@dataclass(frozen=True)
class StatementConfig:
    """可验证命题配置"""
    statement_id: str
    description: str
    kind: StatementKind
    corpus_filter: CorpusFilter


class ConfigManager:
    """配置管理器"""

    def __init__(self):
        self.statements = self._load_default_statements()

    def _load_default_statements(self) -> Dict[str, StatementConfig]:
        """加载默认命题目录"""
        entries = [
            ("lemma21a", "Fix(α) = E(S) implies ψ injective",
             StatementKind.THEOREM, CorpusFilter.INVERSE),
            ("lemma21b", "ψ injective implies Fix(α) ⊆ E(S)",
             StatementKind.THEOREM, CorpusFilter.INVERSE),
            ("thm11", "fixed-point-free automorphism of prime order forces a nilpotent group",
             StatementKind.THEOREM, CorpusFilter.GROUP),
            ("thm12", "prime-order idempotent-fixing automorphism forces a nilpotent Clifford semigroup",
             StatementKind.THEOREM, CorpusFilter.INVERSE),
            ("thm13", "uniquely 2-divisible group with fixed-point-free involutory automorphism: xα = x⁻¹",
             StatementKind.THEOREM, CorpusFilter.GROUP),
            ("thm14", "uniquely 2-divisible inverse semigroup, α² = 1, Fix(α) = E(S): xα = x⁻¹ and commutative",
             StatementKind.THEOREM, CorpusFilter.INVERSE),
            ("neumann-order3", "fixed-point-free automorphism with α³ = 1 forces nilpotence class ≤ 2",
             StatementKind.THEOREM, CorpusFilter.GROUP),
            ("neumann-fpf2", "fixed-point-free automorphism of order 2 forces odd order and commutativity",
             StatementKind.THEOREM, CorpusFilter.GROUP),
            ("eq-psialpha", "α² = 1 implies (xψ)α = (xψ)⁻¹",
             StatementKind.THEOREM, CorpusFilter.INVERSE),
            ("eq-almost", "(xψ)^(-1/2) = x under the hypotheses of the involutory theorem",
             StatementKind.THEOREM, CorpusFilter.INVERSE),
            ("proof12-identities", "the (yψ)(yψ)⁻¹ and (yψ)⁻¹(yψ) computations",
             StatementKind.THEOREM, CorpusFilter.INVERSE),
            ("aut-inversion", "automorphisms commute with inversion",
             StatementKind.THEOREM, CorpusFilter.INVERSE),
            ("conj32", "finite-order α with ψ injective has Fix(α) = E(S)",
             StatementKind.CONJECTURE, CorpusFilter.INVERSE),
            ("conj33", "uniquely 2-divisible completely regular, α² = 1, Fix(α) = E(S): xα = x⁻¹",
             StatementKind.CONJECTURE, CorpusFilter.COMPLETELY_REGULAR),
            ("problem-cancellative", "involutory theorem for finite cancellative semigroups",
             StatementKind.PROBLEM, CorpusFilter.CANCELLATIVE),
        ]
        return {
            sid: StatementConfig(sid, desc, kind, flt)
            for sid, desc, kind, flt in entries
        }

    def get_statement_config(self, statement_id: str) -> Optional[StatementConfig]:
        """获取命题配置"""
        return self.statements.get(statement_id)

    def get_all_statements(self) -> Dict[str, StatementConfig]:
        """获取全部命题配置"""
        return self.statements

    def expand_aliases(self, names: List[str]) -> List[str]:
        """展开命题别名，保持首次出现的顺序"""
        aliases = {
            "lemma21": ["lemma21a", "lemma21b"],
            "proof12": ["proof12-identities", "eq-psialpha", "eq-almost"],
            "theorems": [s for s, c in self.statements.items()
                         if c.kind in (StatementKind.THEOREM, StatementKind.PROBLEM)],
            "conjectures": [s for s, c in self.statements.items()
                            if c.kind == StatementKind.CONJECTURE],
            "all": list(self.statements),
        }
        expanded: List[str] = []
        for name in names:
            for sid in aliases.get(name, [name]):
                if sid not in expanded:
                    expanded.append(sid)
        return expanded


config_manager = ConfigManager()
