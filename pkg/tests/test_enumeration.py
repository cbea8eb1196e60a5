"""
规范形、有序生成与语料测试
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.catalog import (
    adjoin_zero,
    band_b4,
    brandt_b2,
    chain_semilattice,
    left_zero_band,
)
from src.core.group_library import cyclic_group, small_groups, symmetric_group
from src.core.partialperm import monoid_In
from src.enumeration.canonical import (
    CanonicalTable,
    brute_force_canonical,
    canonical_form,
    canonical_semigroup,
)
from src.enumeration.corpus import (
    ORDERLY_GROUP_LIMIT,
    corpus_from_semigroups,
    corpus_pairs,
    count_pairs,
    enumerate_semigroups,
    naive_corpus,
)
from src.enumeration.generator import GeneratorOptions, generate_order, naive_classes
from src.formats.corpus_format import write_corpus
from src.utils.config import CorpusFilter
from src.utils.exceptions import OrderTooLargeError

SEMIGROUP_COUNTS = {1: 1, 2: 5, 3: 24, 4: 188}
INVERSE_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16}

SAMPLES = [
    band_b4(),
    brandt_b2(),
    monoid_In(2),
    adjoin_zero(cyclic_group(3)),
    adjoin_zero(symmetric_group(3)),
    left_zero_band(3),
    chain_semilattice(4),
]


def stripped(entries):
    return {CanonicalTable.from_cells(e.order, e.cells) for e in entries}


class TestCanonicalForm:
    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_relabeling_invariance(self, data):
        S = data.draw(st.sampled_from(SAMPLES))
        images = data.draw(st.permutations(list(S.elements)))
        assert canonical_form(S.relabel(images)) == canonical_form(S)

    @pytest.mark.parametrize("S", SAMPLES[:4] + [left_zero_band(3)])
    def test_matches_brute_force(self, S):
        assert canonical_form(S).cells == brute_force_canonical(S).cells

    @pytest.mark.parametrize("S", SAMPLES)
    def test_labeling_reproduces_table(self, S):
        canon = canonical_form(S)
        assert S.relabel(canon.labeling).table == canon.rows
        assert canonical_semigroup(S).table == canon.rows

    def test_non_isomorphic_tables_differ(self):
        assert canonical_form(left_zero_band(2)) != canonical_form(chain_semilattice(2))

    def test_digest_excludes_labeling(self, c3):
        canon = canonical_form(c3)
        assert canon == CanonicalTable.from_cells(canon.order, canon.cells)
        assert hash(canon) == hash(CanonicalTable.from_cells(canon.order, canon.cells))


class TestOrderlyGeneration:
    @pytest.mark.parametrize("n", sorted(SEMIGROUP_COUNTS))
    def test_counts(self, n):
        assert len(generate_order(n)) == SEMIGROUP_COUNTS[n]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_naive_oracle(self, n):
        assert set(generate_order(n)) == naive_classes(n)

    def test_output_is_canonical_and_sorted(self):
        tables = generate_order(3)
        assert [t.cells for t in tables] == sorted(t.cells for t in tables)
        for t in tables:
            assert canonical_form(t.to_semigroup()).cells == t.cells

    def test_parallel_branches(self):
        assert generate_order(3, workers=2) == generate_order(3)

    def test_latin_option_gives_groups(self):
        assert len(generate_order(4, GeneratorOptions(latin=True))) == 2

    def test_naive_oracle_limit(self):
        with pytest.raises(OrderTooLargeError):
            naive_classes(5)


class TestCorpus:
    def test_inverse_counts(self):
        corpus = enumerate_semigroups(4, CorpusFilter.INVERSE)
        assert corpus.counts_by_order() == INVERSE_COUNTS
        assert corpus.duplicate_digests() == []

    @pytest.mark.parametrize("corpus_filter", list(CorpusFilter))
    def test_filters_match_naive_oracle(self, corpus_filter):
        corpus = enumerate_semigroups(3, corpus_filter)
        assert stripped(corpus.entries) == naive_corpus(3, corpus_filter)

    @pytest.mark.parametrize("corpus_filter", [CorpusFilter.INVERSE, CorpusFilter.GROUP, CorpusFilter.CLIFFORD])
    def test_order_four_matches_naive_oracle(self, corpus_filter):
        corpus = enumerate_semigroups(4, corpus_filter)
        assert stripped(corpus.entries) == naive_corpus(4, corpus_filter)
        assert len(corpus) == len(corpus.entries)

    @pytest.mark.parametrize("corpus_filter", [CorpusFilter.ALL, CorpusFilter.INVERSE])
    def test_corpus_file_is_reproducible(self, tmp_path, corpus_filter):
        paths = []
        for run, workers in enumerate([1, 1, 2]):
            path = tmp_path / f"corpus-{run}.txt"
            write_corpus(str(path), enumerate_semigroups(4, corpus_filter, workers=workers))
            paths.append(path)
        contents = {path.read_bytes() for path in paths}
        assert len(contents) == 1

    @pytest.mark.parametrize("corpus_filter", [CorpusFilter.BAND, CorpusFilter.CANCELLATIVE])
    def test_pruned_filters_at_order_four(self, corpus_filter):
        corpus = enumerate_semigroups(4, corpus_filter)
        expected = {e for e in naive_corpus(4, CorpusFilter.ALL) if e.order == 4}
        predicate_corpus = corpus_from_semigroups([e.to_semigroup() for e in expected], corpus_filter)
        assert stripped(e for e in corpus.entries if e.order == 4) == stripped(predicate_corpus.entries)

    def test_groups_from_library(self):
        corpus = enumerate_semigroups(7, CorpusFilter.GROUP)
        assert corpus.counts_by_order() == {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1}
        small = [e for e in corpus.entries if e.order <= ORDERLY_GROUP_LIMIT]
        library = corpus_from_semigroups(
            [g.semigroup for n in range(1, ORDERLY_GROUP_LIMIT + 1) for g in small_groups(n)],
            CorpusFilter.GROUP,
        )
        assert stripped(small) == stripped(library.entries)

    def test_caps(self):
        with pytest.raises(OrderTooLargeError):
            enumerate_semigroups(7, CorpusFilter.ALL)
        with pytest.raises(OrderTooLargeError):
            enumerate_semigroups(16, CorpusFilter.GROUP, force_large=True)

    def test_from_semigroups_deduplicates(self, c3, chain2):
        relabeled = c3.relabel([2, 0, 1])
        corpus = corpus_from_semigroups([c3, relabeled, chain2])
        assert len(corpus) == 2
        assert corpus.max_order == 3

    def test_pairs(self, c3):
        corpus = corpus_from_semigroups([c3])
        pairs = list(corpus_pairs(corpus))
        assert len(pairs) == count_pairs(corpus) == 2
        assert pairs[0][1].is_identity()
