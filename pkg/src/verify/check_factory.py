"""
检查工厂
按命题编号创建并缓存检查实例
"""
from typing import Dict, List, Type

from src.utils.config import config_manager
from src.utils.exceptions import UnknownStatementError
from src.utils.logger import setup_logger
from src.verify.base_check import BaseCheck
from src.verify.conjecture_checks import Conjecture32Check, Conjecture33Check
from src.verify.identity_checks import (
    AlmostInversionCheck,
    AutInversionCheck,
    Lemma21aCheck,
    Lemma21bCheck,
    ProofIdentitiesCheck,
    PsiAlphaCheck,
)
from src.verify.theorem_checks import (
    CancellativeProblemCheck,
    MainTheorem1Check,
    MainTheorem2Check,
    NeumannFixedPointFreeInvolutionCheck,
    NeumannInvolutionCheck,
    NeumannOrder3Check,
    ThompsonCheck,
)

logger = setup_logger("verify.check_factory")


class CheckFactory:
    """检查工厂"""

    _check_classes: Dict[str, Type[BaseCheck]] = {
        "lemma21a": Lemma21aCheck,
        "lemma21b": Lemma21bCheck,
        "thm11": ThompsonCheck,
        "thm12": MainTheorem1Check,
        "thm13": NeumannInvolutionCheck,
        "thm14": MainTheorem2Check,
        "neumann-order3": NeumannOrder3Check,
        "neumann-fpf2": NeumannFixedPointFreeInvolutionCheck,
        "eq-psialpha": PsiAlphaCheck,
        "eq-almost": AlmostInversionCheck,
        "proof12-identities": ProofIdentitiesCheck,
        "aut-inversion": AutInversionCheck,
        "conj32": Conjecture32Check,
        "conj33": Conjecture33Check,
        "problem-cancellative": CancellativeProblemCheck,
    }

    _checks: Dict[str, BaseCheck] = {}

    @classmethod
    def register(cls, statement_id: str, check_class: Type[BaseCheck]) -> None:
        """注册检查类"""
        cls._check_classes[statement_id] = check_class
        cls._checks.pop(statement_id, None)
        logger.info(f"Registered check for statement: {statement_id}")

    @classmethod
    def get_check(cls, statement_id: str) -> BaseCheck:
        """获取检查实例"""
        if statement_id not in cls._checks:
            check_class = cls._check_classes.get(statement_id)
            config = config_manager.get_statement_config(statement_id)
            if check_class is None or config is None:
                raise UnknownStatementError(
                    f"Unknown statement '{statement_id}'; known: {', '.join(cls.get_supported_statements())}"
                )
            cls._checks[statement_id] = check_class(config)
        return cls._checks[statement_id]

    @classmethod
    def get_supported_statements(cls) -> List[str]:
        return list(cls._check_classes)

    @classmethod
    def resolve(cls, names: List[str]) -> List[BaseCheck]:
        """展开别名并创建检查"""
        return [cls.get_check(sid) for sid in config_manager.expand_aliases(names)]
