"""
部分置换与对称逆幺半群测试
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.partialperm import (
    UNDEFINED,
    PartialPerm,
    compose,
    invert,
    is_partial_identity,
    monoid_elements,
    monoid_In,
    subsemigroups_up_to_order,
)
from src.core.semigroup import idempotents, is_inverse_semigroup
from src.utils.exceptions import DegreeMismatchError, DegreeTooLargeError, TableParseError


def pp(degree, mapping):
    return PartialPerm.from_mapping(degree, mapping)


@st.composite
def partial_perms(draw, degree=3):
    images = draw(st.permutations(range(degree)))
    keep = draw(st.lists(st.booleans(), min_size=degree, max_size=degree))
    return PartialPerm(degree, tuple(v if k else UNDEFINED for v, k in zip(images, keep)))


class TestCompose:
    def test_follow_the_point(self):
        assert compose(pp(2, {1: 2}), pp(2, {2: 1})) == PartialPerm.partial_identity(2, [1])

    def test_regularity(self):
        f = pp(2, {1: 2, 2: 1})
        assert f * invert(f) * f == f

    def test_empty_absorbs(self):
        g = pp(2, {1: 2, 2: 1})
        assert PartialPerm.empty(2) * g == PartialPerm.empty(2)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            compose(pp(2, {1: 1}), pp(3, {1: 1}))

    @settings(max_examples=100, deadline=None)
    @given(partial_perms(), partial_perms(), partial_perms())
    def test_associative(self, f, g, h):
        assert (f * g) * h == f * (g * h)

    @settings(max_examples=100, deadline=None)
    @given(partial_perms())
    def test_inverse_laws(self, f):
        g = invert(f)
        assert invert(g) == f
        assert f * g * f == f
        assert is_partial_identity(f * g)


class TestPartialPerm:
    def test_invert(self):
        assert invert(pp(2, {1: 2})) == pp(2, {2: 1})
        f = pp(3, {1: 3, 2: 1})
        assert invert(invert(f)) == f

    def test_partial_identity(self):
        assert is_partial_identity(PartialPerm.partial_identity(2, [1, 2]))
        assert not is_partial_identity(pp(2, {1: 2}))

    def test_not_injective(self):
        with pytest.raises(DegreeMismatchError):
            PartialPerm(2, (0, 0))

    def test_domain_image_rank(self):
        f = pp(3, {1: 3, 2: 1})
        assert f.domain == frozenset({0, 1})
        assert f.image == frozenset({2, 0})
        assert f.rank == 2
        assert f.restrict([0]) == pp(3, {1: 3})

    def test_text_form(self):
        f = pp(2, {1: 2})
        assert f.to_text() == "2; 2 0"
        assert PartialPerm.from_text("2; 2 0") == f
        assert f.short_label() == "20"

    @pytest.mark.parametrize("text", ["2 2 0", "2; 2", "x; 1 2"])
    def test_bad_text(self, text):
        with pytest.raises(TableParseError):
            PartialPerm.from_text(text)


class TestMonoid:
    @pytest.mark.parametrize("n,size", [(1, 2), (2, 7), (3, 34)])
    def test_sizes(self, n, size):
        assert monoid_In(n).order == size

    @pytest.mark.parametrize("n", [0, 5])
    def test_refused_degrees(self, n):
        with pytest.raises(DegreeTooLargeError):
            monoid_In(n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_inverse_with_partial_identity_idempotents(self, n):
        S = monoid_In(n)
        elements = monoid_elements(n)
        assert is_inverse_semigroup(S)
        es = idempotents(S)
        assert len(es) == 2 ** n
        assert es == frozenset(i for i, f in enumerate(elements) if is_partial_identity(f))

    def test_labels(self, i2):
        assert i2.labels == ("00", "10", "20", "01", "02", "12", "21")


class TestSubsemigroups:
    def test_degree_one(self):
        assert len(subsemigroups_up_to_order(1, 2, dedupe=False)) == 3
        # {∅} 与 {id} 同构
        assert len(subsemigroups_up_to_order(1, 2)) == 2

    def test_singletons_are_idempotent(self):
        singles = subsemigroups_up_to_order(2, 1, dedupe=False)
        assert len(singles) == 4
        assert all(S.order == 1 for S in singles)

    def test_all_inverse(self):
        for S in subsemigroups_up_to_order(2, 4):
            assert is_inverse_semigroup(S)
            assert S.order <= 4

    def test_limits(self):
        with pytest.raises(DegreeTooLargeError):
            subsemigroups_up_to_order(4, 2)
        with pytest.raises(DegreeTooLargeError):
            subsemigroups_up_to_order(2, 9)
