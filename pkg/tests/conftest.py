"""
测试公共夹具
"""
import os

# 测试中不写日志文件
os.environ["LOG_FILE"] = ""

import pytest  # noqa: E402

from src.core.catalog import (  # noqa: E402
    adjoin_zero,
    band_b4,
    brandt_b2,
    chain_semilattice,
    left_zero_band,
)
from src.core.group_library import cyclic_group, symmetric_group  # noqa: E402
from src.core.partialperm import monoid_In  # noqa: E402
from src.utils.config import (  # noqa: E402
    CorpusFilter,
    StatementConfig,
    StatementKind,
    config_manager,
)
from src.verify.base_check import BaseCheck, ClauseResult, SemigroupContext  # noqa: E402
from src.verify.check_factory import CheckFactory  # noqa: E402

# 按 1 基文本给出的 B4 表
B4_TEXT = "4\n1 3 3 1\n4 2 2 4\n1 3 3 1\n4 2 2 4\n"

# B2 的下标：0 = 零元，1 = (1,1)，2 = (1,2)，3 = (2,1)，4 = (2,2)
B2_SWAP = (0, 4, 3, 2, 1)

# I2 的下标：0 = ∅，1 = [1↦1]，2 = [1↦2]，3 = [2↦1]，4 = [2↦2]，5 = id，6 = (1 2)
I2_PARTIAL_IDENTITIES = {0, 1, 4, 5}


@pytest.fixture
def b4():
    return band_b4()


@pytest.fixture
def b2():
    return brandt_b2()


@pytest.fixture
def c3():
    return cyclic_group(3)


@pytest.fixture
def c3_zero():
    return adjoin_zero(cyclic_group(3))


@pytest.fixture
def s3_zero():
    return adjoin_zero(symmetric_group(3))


@pytest.fixture
def i2():
    return monoid_In(2)


@pytest.fixture
def chain2():
    return chain_semilattice(2)


@pytest.fixture
def l2():
    return left_zero_band(2)


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    """把默认输出目录指向临时目录"""
    monkeypatch.setenv("ISEMLAB_OUTPUT_DIR", str(tmp_path))
    return tmp_path


class AlwaysFailingCheck(BaseCheck):
    """在每个 (S, α) 上都给出违例的检查"""

    def applies_to(self, ctx: SemigroupContext) -> bool:
        return True

    def check_pair(self, ctx: SemigroupContext, alpha):
        return [ClauseResult.judge("always-fails", [0])]


@pytest.fixture
def fake_statement(monkeypatch):
    """注册一个总是失败的命题，返回注册函数"""
    monkeypatch.setattr(CheckFactory, "_checks", {})

    def register(statement_id: str, kind: StatementKind) -> str:
        config = StatementConfig(statement_id, "always fails", kind, CorpusFilter.ALL)
        monkeypatch.setitem(config_manager.statements, statement_id, config)
        monkeypatch.setitem(CheckFactory._check_classes, statement_id, AlwaysFailingCheck)
        return statement_id

    return register
