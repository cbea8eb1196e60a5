"""
命题检查测试
"""
import pytest

from src.core.group_library import cyclic_group, group_by_name
from src.core.morphisms import automorphism_group, identity_automorphism, make_automorphism
from src.enumeration.corpus import corpus_from_semigroups, enumerate_semigroups
from src.utils.config import CorpusFilter, StatementKind, config_manager
from src.utils.exceptions import NotAGroupError, UnknownStatementError
from src.verify.base_check import HYPOTHESIS, ClauseStatus, SemigroupContext
from src.verify.check_factory import CheckFactory
from src.verify.identity_checks import check_lemma21, check_proof_identities
from src.verify.runner import run_on_corpus
from src.verify.theorem_checks import check_thm_main1, check_thm_main2, check_thm_neumann

from tests.conftest import B2_SWAP


def statuses(results):
    return {r.clause: r.status for r in results}


def inversion(S):
    return make_automorphism(S, [SemigroupContext(S).inversion(x) for x in S.elements])


class TestLemma21:
    def test_identity_on_group_skips_both(self, c3):
        results = check_lemma21(c3, identity_automorphism(c3))
        assert results["lemma21a"].status == ClauseStatus.SKIP
        assert results["lemma21b"].status == ClauseStatus.SKIP

    def test_inversion_on_group(self, c3):
        results = check_lemma21(c3, inversion(c3))
        assert results["lemma21a"].clause == "psi-injective"
        assert results["lemma21a"].status == ClauseStatus.PASS
        assert results["lemma21b"].status == ClauseStatus.PASS

    def test_semilattice(self, chain2):
        results = check_lemma21(chain2, identity_automorphism(chain2))
        assert all(r.status == ClauseStatus.PASS for r in results.values())

    def test_brandt_swap(self, b2):
        results = check_lemma21(b2, make_automorphism(b2, list(B2_SWAP)))
        assert all(r.clause == HYPOTHESIS for r in results.values())


class TestProofIdentities:
    def test_brandt_swap_checks_general_forms_only(self, b2):
        results = check_proof_identities(b2, make_automorphism(b2, list(B2_SWAP)))
        found = statuses(results)
        assert found["psi-right-unit-general"] == ClauseStatus.PASS
        assert found["psi-left-unit-general"] == ClauseStatus.PASS
        assert found["psi-units-under-fixed-idempotents"] == ClauseStatus.SKIP
        assert found["psi-alpha-is-inverse"] == ClauseStatus.PASS
        assert not any(r.is_violation for r in results)

    def test_group_with_zero(self, c3_zero):
        results = check_proof_identities(c3_zero, make_automorphism(c3_zero, [0, 2, 1, 3]))
        found = statuses(results)
        assert found["psi-right-unit"] == ClauseStatus.PASS
        assert found["psi-left-unit"] == ClauseStatus.PASS
        assert found["inverse-root-of-psi"] == ClauseStatus.PASS


class TestMainTheorems:
    def test_prime_order_idempotent_fixing(self, c3_zero):
        results = check_thm_main1(c3_zero, make_automorphism(c3_zero, [0, 2, 1, 3]))
        assert [r.clause for r in results] == [
            "waypoint-units-commute", "clifford", "nilpotent", "alpha-preserves-each-group",
        ]
        assert all(r.status == ClauseStatus.PASS for r in results)

    def test_identity_is_not_of_prime_order(self, c3):
        assert check_thm_main1(c3, identity_automorphism(c3))[0].clause == HYPOTHESIS

    def test_involutory_theorem_on_odd_group(self, c3):
        results = check_thm_main2(c3, inversion(c3))
        assert statuses(results) == {
            "alpha-is-inversion": ClauseStatus.PASS,
            "commutative": ClauseStatus.PASS,
        }

    def test_involutory_theorem_needs_unique_roots(self):
        S = cyclic_group(4)
        assert check_thm_main2(S, inversion(S))[0].status == ClauseStatus.SKIP


class TestGroupStatements:
    def test_neumann_on_c5(self):
        S = cyclic_group(5)
        results = check_thm_neumann(S, inversion(S))
        assert statuses(results) == {"alpha-is-inversion": ClauseStatus.PASS, "abelian": ClauseStatus.PASS}

    def test_neumann_requires_group(self, chain2):
        with pytest.raises(NotAGroupError):
            check_thm_neumann(chain2, identity_automorphism(chain2))

    def test_thompson(self):
        S = cyclic_group(5)
        thompson = CheckFactory.get_check("thm11")
        assert thompson.check(S, inversion(S))[0].status == ClauseStatus.PASS
        # 4 阶不是素数
        assert thompson.check(S, make_automorphism(S, [0, 2, 4, 1, 3]))[0].clause == HYPOTHESIS

    def test_fixed_point_free_involution(self, c3):
        check = CheckFactory.get_check("neumann-fpf2")
        assert statuses(check.check(c3, inversion(c3))) == {
            "odd-order": ClauseStatus.PASS,
            "abelian": ClauseStatus.PASS,
        }
        # C4 中 2 是非平凡不动点
        S = cyclic_group(4)
        assert check.check(S, inversion(S))[0].clause == HYPOTHESIS

    def test_order_three_on_klein_group(self):
        S = group_by_name("C2xC2").semigroup
        alpha = next(a for a in automorphism_group(S) if a.order == 3)
        results = CheckFactory.get_check("neumann-order3").check(S, alpha)
        assert statuses(results) == {"class-at-most-2": ClauseStatus.PASS}

    def test_cancellative_problem(self, c3):
        results = CheckFactory.get_check("problem-cancellative").check(c3, inversion(c3))
        assert statuses(results) == {
            "cancellative-is-group": ClauseStatus.PASS,
            "alpha-is-inversion": ClauseStatus.PASS,
            "abelian": ClauseStatus.PASS,
        }


class TestConjectures:
    def test_conj32_on_group(self, c3):
        check = CheckFactory.get_check("conj32")
        assert check.check(c3, inversion(c3))[0].status == ClauseStatus.PASS

    def test_conj33_on_left_zero_band(self, l2):
        check = CheckFactory.get_check("conj33")
        results = check.check(l2, identity_automorphism(l2))
        assert statuses(results) == {"alpha-is-inversion": ClauseStatus.PASS}


class TestCheckFactory:
    def test_every_configured_statement_has_a_check(self):
        for sid in config_manager.get_all_statements():
            check = CheckFactory.get_check(sid)
            assert check.statement_id == sid
            assert check is CheckFactory.get_check(sid)

    def test_unknown_statement(self):
        with pytest.raises(UnknownStatementError, match="no-such"):
            CheckFactory.get_check("no-such")

    def test_resolve_expands_aliases(self):
        ids = [c.statement_id for c in CheckFactory.resolve(["lemma21", "lemma21a"])]
        assert ids == ["lemma21a", "lemma21b"]


class TestTheoremsOverCorpora:
    @pytest.mark.parametrize("corpus_filter", [CorpusFilter.INVERSE, CorpusFilter.GROUP])
    def test_no_theorem_violations(self, corpus_filter):
        checks = [
            c for c in CheckFactory.resolve(["theorems"])
            if c.kind == StatementKind.THEOREM and c.corpus_filter == corpus_filter
        ]
        corpus = enumerate_semigroups(4, corpus_filter)
        for report in run_on_corpus(checks, corpus):
            assert report.passed, report.violations[:1]
            assert report.checked == report.satisfied_hypotheses + report.skipped

    def test_automorphisms_commute_with_inversion_on_samples(self, b2, i2, c3_zero, l2):
        corpus = corpus_from_semigroups([b2, i2, c3_zero, l2])
        report = run_on_corpus([CheckFactory.get_check("aut-inversion")], corpus)[0]
        assert report.semigroups == 4
        assert report.passed
