import pytest

from skewbrace.brace import is_right_ideal, is_strong_left_ideal, is_trivial_brace, product_set, star_span, sum_set
from skewbrace.catalog import canonical_form, enumerate_braces
from skewbrace.errors import OrderTooLarge, PremiseViolated
from skewbrace.groups import is_isomorphic_groups
from skewbrace.library import named_group
from skewbrace.theorems import (
    counterexample_audit,
    example_pairs,
    example_shape_check,
    load_example24,
    search_example24,
)

A1 = (0, 14, 15)
A2 = (0, 1, 2, 4, 19, 21, 22, 23)


@pytest.fixture(scope="module")
def B24():
    return load_example24()


def test_stored_example_shape(B24):
    assert B24.n == 24
    assert is_isomorphic_groups(B24.add, named_group("C2xC2xS3"))
    assert is_isomorphic_groups(B24.mul, named_group("C2xA4"))
    example_shape_check(B24, A1, A2)


def test_stored_example_pair(B24):
    assert [(p.members, q.members) for p, q in example_pairs(B24)] == [(A1, A2)]
    assert is_strong_left_ideal(B24, A1)
    assert sum_set(B24, A1, A2).is_full() and product_set(B24, A1, A2).is_full()


def test_stored_example_star_square_not_trivial(B24):
    assert counterexample_audit(B24, A1, A2, shape=True)
    BB = star_span(B24, range(24), range(24))
    assert not is_trivial_brace(B24, BB)


def test_A1_is_not_a_right_ideal(B24):
    assert not is_right_ideal(B24, A1)


def test_shape_check_rejects_small_brace(braces8):
    with pytest.raises(PremiseViolated):
        example_shape_check(braces8[-1], [0], [0])


def test_order24_gated():
    with pytest.raises(OrderTooLarge):
        enumerate_braces(named_group("C2xC2xS3"))


def test_search_finds_exactly_the_stored_brace(B24):
    hits = search_example24()
    assert len(hits) == 1
    B, pairs = hits[0]
    assert canonical_form(B) == canonical_form(B24)
    assert [(p.members, q.members) for p, q in pairs] == [(A1, A2)]
