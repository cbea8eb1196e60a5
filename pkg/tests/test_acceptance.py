"""
语料规模的命题验证测试（较慢，可用 -m "not slow" 跳过）
"""
import pytest

from src.core.catalog import left_zero_band
from src.enumeration.canonical import canonical_form
from src.enumeration.corpus import enumerate_semigroups
from src.utils.config import CorpusFilter
from src.verify.runner import has_theorem_violation, run_conjecture33, run_statements

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def order_five_reports():
    reports = run_statements(["lemma21", "theorems", "conj32"], 5)
    return {report.statement: report for report in reports}


class TestOrderFiveInverseCorpus:
    @pytest.mark.parametrize("statement", ["lemma21a", "lemma21b"])
    def test_lemma_both_directions(self, order_five_reports, statement):
        report = order_five_reports[statement]
        assert report.passed
        assert report.violations == []
        assert report.satisfied_hypotheses > 0

    def test_prime_order_theorem_is_not_vacuous(self, order_five_reports):
        report = order_five_reports["thm12"]
        assert report.passed
        assert report.satisfied_hypotheses > 0

    @pytest.mark.parametrize("statement", ["proof12-identities", "eq-psialpha", "eq-almost", "thm14"])
    def test_identities_and_involutory_theorem(self, order_five_reports, statement):
        assert order_five_reports[statement].passed

    def test_no_theorem_violations(self, order_five_reports):
        assert not has_theorem_violation(list(order_five_reports.values()))

    def test_finite_order_conjecture_has_no_counterexample(self, order_five_reports):
        report = order_five_reports["conj32"]
        assert report.violations == []
        assert report.satisfied_hypotheses > 0


class TestGroupCorpus:
    def test_involutory_statements_up_to_order_fifteen(self):
        reports = run_statements(["thm13", "thm14"], 15, corpus_filter=CorpusFilter.GROUP)
        assert [r.statement for r in reports] == ["thm13", "thm14"]
        for report in reports:
            assert report.passed, report.violations[:1]
            assert report.satisfied_hypotheses > 0
        # 每个阶都有群
        assert reports[0].semigroups >= 15


class TestCompletelyRegularCorpus:
    def test_involutory_conjecture_up_to_order_four(self):
        corpus = enumerate_semigroups(4, CorpusFilter.COMPLETELY_REGULAR)
        report = run_conjecture33(corpus)
        assert report.passed
        assert report.satisfied_hypotheses > 0

        digests = {entry.digest for entry in corpus.entries}
        for n in (2, 3):
            assert canonical_form(left_zero_band(n)).digest in digests
