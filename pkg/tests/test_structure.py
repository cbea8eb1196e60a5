"""
Green 关系与 Clifford 分解测试
"""
import pytest

from src.core.group_library import cyclic_group
from src.core.morphisms import automorphism_group, make_automorphism
from src.core.structure import (
    class_images_are_classes,
    clifford_decomposition,
    green_relations,
    is_clifford,
    is_completely_regular,
    maximal_subgroups,
)
from src.enumeration.corpus import enumerate_semigroups
from src.utils.config import CorpusFilter
from src.utils.exceptions import NotCliffordError


class TestGreenRelations:
    def test_group_has_one_h_class(self, c3):
        assert green_relations(c3).h_classes == (frozenset({0, 1, 2}),)

    def test_chain(self, chain2):
        assert green_relations(chain2).h_classes == (frozenset({0}), frozenset({1}))

    def test_brandt(self, b2):
        green = green_relations(b2)
        assert green.h_classes == tuple(frozenset({x}) for x in range(5))
        assert green.r_classes == (frozenset({0}), frozenset({1, 2}), frozenset({3, 4}))
        assert green.l_classes == (frozenset({0}), frozenset({1, 3}), frozenset({2, 4}))
        assert green.d_classes == (frozenset({0}), frozenset({1, 2, 3, 4}))
        assert green.sizes()["D"] == [1, 4]

    @pytest.mark.parametrize("name", ["b2", "i2", "b4", "c3_zero"])
    def test_automorphisms_permute_classes(self, name, request):
        S = request.getfixturevalue(name)
        green = green_relations(S)
        for alpha in automorphism_group(S):
            for classes in (green.r_classes, green.l_classes, green.h_classes, green.d_classes):
                assert class_images_are_classes(classes, alpha.perm)


class TestRecognition:
    def test_group_with_zero_is_clifford(self, c3_zero):
        assert is_clifford(c3_zero)

    def test_brandt_is_not_clifford(self, b2):
        assert not is_clifford(b2)

    def test_left_zero_band(self, l2):
        assert is_completely_regular(l2)
        assert not is_clifford(l2)

    def test_brandt_is_not_completely_regular(self, b2):
        assert not is_completely_regular(b2)

    def test_maximal_subgroups(self, c3_zero):
        groups = maximal_subgroups(c3_zero)
        assert [g.identity for g in groups] == [0, 3]
        assert groups[0].elements == (0, 1, 2)
        assert groups[0].inverse(1) == 2
        assert groups[0].table.order == 3


class TestCliffordDecomposition:
    def test_group_with_zero(self, c3_zero):
        decomposition = clifford_decomposition(c3_zero)
        assert decomposition.indices == [0, 3]
        assert decomposition.below(3, 0)
        assert not decomposition.below(0, 3)
        assert decomposition.groups[0].elements == (0, 1, 2)
        assert decomposition.groups[3].elements == (3,)
        assert decomposition.linking[(0, 3)] == {0: 3, 1: 3, 2: 3}
        assert decomposition.invariant_problems() == []

    def test_group(self):
        decomposition = clifford_decomposition(cyclic_group(4))
        assert decomposition.indices == [0]
        assert decomposition.semilattice == frozenset({(0, 0)})

    def test_chain(self, chain2):
        decomposition = clifford_decomposition(chain2)
        assert all(g.order == 1 for g in decomposition.groups.values())
        assert decomposition.link(1, 0, 1) == 0

    def test_not_clifford(self, b2):
        with pytest.raises(NotCliffordError):
            clifford_decomposition(b2)

    def test_to_dict_uses_labels(self, c3_zero):
        data = clifford_decomposition(c3_zero).to_dict()
        assert data["idempotents"] == ["1", "4"]
        assert data["groups"]["1"] == ["1", "2", "3"]
        assert data["linking_maps"][1] == {"from": "1", "to": "4", "map": {"1": "4", "2": "4", "3": "4"}}

    def test_reconstruction_over_corpus(self):
        corpus = enumerate_semigroups(4, CorpusFilter.CLIFFORD)
        assert len(corpus) > 0
        for S in corpus.semigroups():
            assert clifford_decomposition(S).invariant_problems() == []

    def test_idempotent_fixing_automorphism_preserves_groups(self, c3_zero):
        alpha = make_automorphism(c3_zero, [0, 2, 1, 3])
        decomposition = clifford_decomposition(c3_zero)
        for group in decomposition.groups.values():
            assert {alpha(g) for g in group.elements} == set(group.elements)
