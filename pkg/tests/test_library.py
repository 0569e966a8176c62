import itertools

import pytest

from skewbrace.errors import OrderTooLarge
from skewbrace.groups import automorphisms, center, derived_subgroup, group_from_table, is_abelian, is_isomorphic_groups
from skewbrace.library import GROUP_COUNTS, MAX_COMPLETE_ORDER, NAMED, groups_of_order, named_group


@pytest.mark.parametrize("n", range(1, MAX_COMPLETE_ORDER + 1))
def test_one_group_per_class(n):
    groups = groups_of_order(n)
    assert len(groups) == GROUP_COUNTS[n]
    for (_, G), (_, H) in itertools.combinations(groups, 2):
        assert not is_isomorphic_groups(G, H)


@pytest.mark.parametrize("name", sorted(NAMED))
def test_named_tables_are_groups(name):
    G = named_group(name)
    group_from_table(G.op)
    assert G.id == 0


@pytest.mark.parametrize(
    "name, aut, centre, derived",
    [
        ("S3", 6, 1, 3),
        ("D8", 8, 2, 2),
        ("Q8", 24, 2, 2),
        ("A4", 24, 1, 4),
        ("Dic12", 12, 2, 3),
        ("C2xC2xC2", 168, 8, 1),
        ("Pauli", 48, 4, 2),
    ],
)
def test_known_invariants(name, aut, centre, derived):
    G = named_group(name)
    assert len(automorphisms(G)) == aut
    assert len(center(G)) == centre
    assert len(derived_subgroup(G)) == derived


def test_example_groups():
    G, H = named_group("C2xC2xS3"), named_group("C2xA4")
    assert G.n == H.n == 24
    assert not is_abelian(G) and not is_abelian(H)
    assert not is_isomorphic_groups(G, H)


def test_unknown_and_large():
    with pytest.raises(KeyError):
        named_group("C99")
    with pytest.raises(OrderTooLarge):
        groups_of_order(24)
