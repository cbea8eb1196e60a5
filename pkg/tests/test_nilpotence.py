"""
幂零性与群库测试
"""
import pytest

from src.core.catalog import trivial_semigroup
from src.core.group_library import (
    LIBRARY_MAX_ORDER,
    cyclic_group,
    extended_groups,
    group_by_name,
    groups_up_to,
    small_groups,
    symmetric_group,
)
from src.core.nilpotence import (
    as_group,
    find_identity,
    is_group,
    is_nilpotent_by_sylow,
    is_nilpotent_clifford,
    is_nilpotent_group,
    lower_central_series,
    nilpotency_class,
)
from src.core.structure import maximal_subgroups
from src.enumeration.canonical import canonical_form
from src.utils.exceptions import NotAGroupError, OrderTooLargeError

GROUP_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
                9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1}


class TestGroupLibrary:
    @pytest.mark.parametrize("order", sorted(GROUP_COUNTS))
    def test_counts_and_distinctness(self, order):
        groups = small_groups(order)
        assert len(groups) == GROUP_COUNTS[order]
        for g in groups:
            assert g.order == order
            assert is_group(g.semigroup)
        assert len({canonical_form(g.semigroup).digest for g in groups}) == len(groups)

    def test_beyond_library(self):
        with pytest.raises(OrderTooLargeError):
            small_groups(LIBRARY_MAX_ORDER + 1)

    def test_extended_groups_are_groups(self):
        for g in extended_groups():
            assert 16 <= g.order <= 24
            assert is_group(g.semigroup)

    def test_lookup(self):
        assert group_by_name("Q8").order == 8
        assert group_by_name("S4").order == 24
        with pytest.raises(KeyError):
            group_by_name("M11")


class TestLowerCentralSeries:
    @pytest.mark.parametrize("name,klass", [
        ("C1", 0), ("C3", 1), ("C2xC2", 1), ("D4", 2), ("Q8", 2),
        ("S3", None), ("A4", None), ("Dic3", None), ("D5", None),
        ("D8", 3), ("Q16", 3), ("C2xQ8", 2), ("S4", None), ("F20", None),
    ])
    def test_classes(self, name, klass):
        assert nilpotency_class(group_by_name(name).semigroup) == klass

    def test_series_terms(self):
        series = lower_central_series(symmetric_group(3))
        assert not series.terminates
        assert [len(t) for t in series.terms] == [6, 3]

    def test_sylow_oracle_agrees(self):
        for g in groups_up_to(LIBRARY_MAX_ORDER) + extended_groups():
            assert is_nilpotent_by_sylow(g.semigroup) == is_nilpotent_group(g.semigroup), g.name

    def test_not_a_group(self, chain2):
        with pytest.raises(NotAGroupError):
            lower_central_series(chain2)


class TestGroupTable:
    def test_maximal_subgroup(self, c3_zero):
        group = as_group(maximal_subgroups(c3_zero)[0])
        assert group.order == 3
        assert group.inverses == (0, 2, 1)

    def test_commutator_in_abelian_group(self):
        group = as_group(cyclic_group(4))
        assert all(group.commutator(g, h) == 0 for g in range(4) for h in range(4))
        assert group.element_order(1) == 4
        assert group.generated_subgroup({2}) == frozenset({0, 2})

    def test_identity(self, b4):
        assert find_identity(trivial_semigroup()) == 0
        assert find_identity(b4) is None


class TestClifford:
    def test_abelian_groups_with_zero(self, c3_zero):
        assert is_nilpotent_clifford(c3_zero)

    def test_symmetric_group_with_zero(self, s3_zero):
        assert not is_nilpotent_clifford(s3_zero)

    def test_semilattice(self, chain2):
        assert is_nilpotent_clifford(chain2)
