"""
验证运行器与报告测试
"""
import pytest

from src.core.catalog import BAND_B4_INVOLUTION, band_b4
from src.core.group_library import cyclic_group
from src.enumeration.corpus import corpus_from_semigroups, count_pairs, enumerate_semigroups
from src.utils.config import CorpusFilter, StatementKind
from src.verify.check_factory import CheckFactory
from src.verify.base_check import ClauseResult, ClauseStatus
from src.verify.gallery import GALLERY_STATEMENT, gallery_band_B4, gallery_checks
from src.verify.report import CounterexampleRecord, TheoremReport, make_record
from src.verify.runner import (
    conjecture_counterexamples,
    has_theorem_violation,
    replay_record,
    run_conjecture32,
    run_conjecture33,
    run_on_corpus,
    run_problem_cancellative,
    run_statement_on_corpus,
    run_statements,
)


class TestReportCounts:
    def test_lemma_on_cyclic_group(self, c3):
        report = run_statement_on_corpus("lemma21a", corpus_from_semigroups([c3]))
        assert report.semigroups == 1
        assert report.checked == 2
        assert report.satisfied_hypotheses == 1
        assert report.skipped == 1
        assert report.passed
        assert report.notes == ["0 of 1 hypothesis-satisfying semigroups are non-commutative"]

    def test_inapplicable_semigroups_are_not_counted(self, l2):
        report = run_statement_on_corpus("lemma21a", corpus_from_semigroups([l2]))
        assert report.semigroups == 0
        assert report.checked == 0
        assert report.notes == []

    def test_report_validation(self):
        with pytest.raises(ValueError):
            TheoremReport(statement="x", kind="theorem", checked=2, satisfied_hypotheses=1, skipped=0)
        with pytest.raises(ValueError):
            TheoremReport(statement="x", kind="theorem", passed=False)


class TestDeterminism:
    def test_workers_do_not_change_reports(self):
        serial = run_statements(["lemma21", "conj32"], 3)
        parallel = run_statements(["lemma21", "conj32"], 3, workers=2)
        assert [r.model_dump() for r in serial] == [r.model_dump() for r in parallel]

    def test_report_order_follows_expansion(self):
        reports = run_statements(["proof12"], 2)
        assert [r.statement for r in reports] == ["proof12-identities", "eq-psialpha", "eq-almost"]

    def test_progress_callback(self):
        calls = []
        corpus = enumerate_semigroups(3, CorpusFilter.INVERSE)
        run_on_corpus([CheckFactory.get_check("lemma21a")], corpus,
                      progress=lambda done, total: calls.append((done, total)))
        assert calls[-1] == (len(corpus), len(corpus))
        assert [done for done, _ in calls] == list(range(1, len(corpus) + 1))


class TestCounterexamples:
    def test_conjecture_violations_become_records(self, fake_statement):
        sid = fake_statement("fake-conjecture", StatementKind.CONJECTURE)
        reports = run_statements([sid], 2)
        report = reports[0]
        assert not report.passed
        assert len(report.violations) == count_pairs(enumerate_semigroups(2))
        assert not has_theorem_violation(reports)

        records = conjecture_counterexamples(reports)
        assert records == report.violations
        assert records == sorted(records, key=CounterexampleRecord.sort_key)
        assert records[0].witnesses == [1]

    def test_replay_reproduces(self, fake_statement):
        sid = fake_statement("fake-conjecture", StatementKind.CONJECTURE)
        record = run_statements([sid], 2)[0].violations[-1]
        restored = CounterexampleRecord.model_validate_json(record.model_dump_json())
        outcome = replay_record(restored)
        assert outcome.reproduced
        assert outcome.results[0].clause == "always-fails"

    def test_replay_with_other_witness_is_not_reproduced(self, fake_statement):
        sid = fake_statement("fake-conjecture", StatementKind.CONJECTURE)
        record = run_statements([sid], 1)[0].violations[0]
        altered = record.model_copy(update={"witnesses": [2]})
        assert not replay_record(altered).reproduced

    def test_theorem_violation_fails_the_run(self, fake_statement):
        sid = fake_statement("fake-theorem", StatementKind.THEOREM)
        assert has_theorem_violation(run_statements([sid], 1))


class TestGallery:
    def test_all_assertions_hold(self):
        report = gallery_checks()
        assert report.passed
        assert report.kind == StatementKind.GALLERY.value
        assert len(report.notes) == 15
        assert report.semigroups == 4
        assert "b4-involution-axioms" in report.notes
        assert "L3-non-commutative" in report.notes

    def test_band_with_involution(self):
        S, involution = gallery_band_B4()
        assert S == band_b4()
        assert involution.map.images == BAND_B4_INVOLUTION
        assert involution(0) == 1

    def test_gallery_record_replays(self, b4):
        record = make_record(GALLERY_STATEMENT, b4, list(b4.elements), ClauseResult.judge("b4-band", [0]))
        outcome = replay_record(CounterexampleRecord.model_validate_json(record.model_dump_json()))
        # 断言在 B4 上成立，因此记录不会复现
        assert not outcome.reproduced
        clauses = {r.clause: r.status for r in outcome.results}
        assert clauses["b4-band"] == ClauseStatus.PASS
        assert "b4-involution-axioms" in clauses
        assert not any(c.startswith("L") for c in clauses)

    def test_left_zero_gallery_record_replays(self, l2):
        record = make_record(GALLERY_STATEMENT, l2, [0, 1], ClauseResult.judge("L2-non-commutative", [0]))
        outcome = replay_record(record)
        assert not outcome.reproduced
        assert [r.clause for r in outcome.results] == [
            "L2-conj33-hypotheses", "L2-alpha-is-inverse", "L2-non-commutative",
        ]


class TestStatementRunners:
    def test_conjecture32_over_inverse_corpus(self):
        report = run_conjecture32(enumerate_semigroups(4, CorpusFilter.INVERSE))
        assert report.passed
        assert report.satisfied_hypotheses > 0

    def test_conjecture32_on_cyclic_group(self, c3):
        report = run_conjecture32(corpus_from_semigroups([c3]))
        assert (report.checked, report.satisfied_hypotheses) == (2, 1)
        assert report.passed

    def test_conjecture32_on_chain(self, chain2):
        report = run_conjecture32(corpus_from_semigroups([chain2]))
        assert (report.checked, report.satisfied_hypotheses) == (1, 1)

    def test_conjecture33_on_left_zero_band(self, l2):
        report = run_conjecture33(corpus_from_semigroups([l2]))
        assert report.passed
        assert report.satisfied_hypotheses == 1
        assert report.notes == ["1 of 1 hypothesis-satisfying semigroups are non-commutative"]

    def test_conjecture33_skips_even_group(self):
        report = run_conjecture33(corpus_from_semigroups([cyclic_group(2)]))
        assert report.checked == 1
        assert report.skipped == 1

    def test_cancellative_problem(self):
        report = run_problem_cancellative(enumerate_semigroups(4, CorpusFilter.CANCELLATIVE))
        assert report.passed
        assert report.semigroups == 5
        assert report.kind == StatementKind.PROBLEM.value
