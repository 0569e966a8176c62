import itertools

import pytest
from hypothesis import given, settings, strategies as st

from skewbrace.errors import NoIdentity, NoInverse, NotASubgroup, NotAssociative, NotLatinSquare, OrderTooLarge
from skewbrace.groups import (
    ElementSet,
    Holomorph,
    automorphisms,
    center,
    centralizer,
    commutator_subgroup,
    enumerate_groups_bruteforce,
    group_from_table,
    holomorph,
    regular_lambda_maps,
    is_abelian,
    is_normal,
    is_subgroup,
    all_subgroups,
    normal_closure,
    regular_subgroups,
    relabel,
    subgroup_generated,
)
from skewbrace.library import cyclic, direct_product, named_group, symmetric


def z(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


S3 = symmetric(3)
Z4 = cyclic(4)


def test_singleton_table():
    G = group_from_table([[0]])
    assert G.n == 1 and G.id == 0 and G.inv == (0,)


def test_z4_inverses():
    G = group_from_table(z(4))
    assert G.inv[1] == 3 and G.id == 0


def test_not_latin():
    t = z(4)
    t[1][1] = 1
    with pytest.raises(NotLatinSquare):
        group_from_table(t)


def test_no_identity():
    # x*y = x+y+1 mod 3 is a group with identity 2, so shift it to lose the identity
    t = [[(i - j) % 3 for j in range(3)] for i in range(3)]
    with pytest.raises((NoIdentity, NotAssociative)):
        group_from_table(t)


def test_not_associative():
    # a Latin square with identity 0 that is not a group
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises((NotAssociative, NoInverse)):
        group_from_table(t)


def test_identity_relabeled_to_zero():
    # Z/3 written with identity 2
    t = [[(i + j + 1) % 3 for j in range(3)] for i in range(3)]
    G = group_from_table(t)
    assert G.id in range(3)
    assert G.op[G.id] == tuple(range(3))


def test_subgroup_generated_examples():
    assert subgroup_generated(Z4, []) == Z4.set([0])
    assert subgroup_generated(Z4, [2]) == Z4.set([0, 2])
    three_cycle = next(x for x in range(6) if S3.orders[x] == 3)
    assert len(subgroup_generated(S3, [three_cycle])) == 3


def test_commutator_examples():
    for G in (Z4, cyclic(6), named_group("C2xC2")):
        assert commutator_subgroup(G, range(G.n), range(G.n)) == G.set([0])
    D = commutator_subgroup(S3, range(6), range(6))
    brute = {S3.commutator(a, b) for a in range(6) for b in range(6)}
    assert D == S3.set(brute) and len(D) == 3
    assert commutator_subgroup(S3, [0], range(6)) == S3.set([0])


def test_normal_closure_examples():
    assert normal_closure(S3, [0]) == S3.set([0])
    t = next(x for x in range(6) if S3.orders[x] == 2)
    assert normal_closure(S3, [t]).is_full()
    assert normal_closure(Z4, [2]) == subgroup_generated(Z4, [2])


def test_centre_and_centralizer():
    assert center(Z4).is_full()
    assert centralizer(S3, [0]).is_full()
    assert center(S3) == S3.set([0])
    assert is_abelian(Z4) and not is_abelian(S3)


def test_is_normal_requires_subgroup():
    with pytest.raises(NotASubgroup):
        is_normal(S3, [0, 1, 2])
    with pytest.raises(NotASubgroup):
        is_normal(S3, [1])


def test_automorphism_counts():
    assert len(automorphisms(cyclic(1))) == 1
    assert len(automorphisms(Z4)) == 2
    assert len(automorphisms(named_group("C2xC2"))) == 6
    assert len(automorphisms(S3)) == 6
    assert len(automorphisms(named_group("C2xC2xC2"))) == 168


@pytest.mark.parametrize("name", ["C4", "C2xC2", "S3", "D8", "Q8", "A4"])
def test_automorphisms_preserve_table(name):
    G = named_group(name)
    for phi in automorphisms(G):
        assert all(phi[G.op[a][b]] == G.op[phi[a]][phi[b]] for a in range(G.n) for b in range(G.n))


def test_holomorph_sizes():
    assert holomorph(cyclic(1)).order == 1
    assert holomorph(cyclic(3)).order == 6
    assert holomorph(Z4).order == 8
    H = holomorph(S3)
    group_from_table(H.group.op)


def test_regular_subgroups_small():
    assert len(regular_subgroups(holomorph(cyclic(1)))) == 1
    H2 = holomorph(cyclic(2))
    R = regular_subgroups(H2)
    assert len(R) == 1 and len(R[0]) == 2


def _labeled_mul_tables(add):
    """Every multiplication table making ``add`` a skew brace, by brute force."""
    from skewbrace.brace import brace_validate
    from skewbrace.errors import BraceError

    n = add.n
    out = []
    for rows in itertools.product(itertools.permutations(range(n)), repeat=n - 1):
        mul = [list(range(n))] + [list(r) for r in rows]
        if any(mul[i][0] != i for i in range(n)):
            continue
        try:
            brace_validate(add.op, mul)
        except BraceError:
            continue
        out.append(mul)
    return out


@pytest.mark.parametrize("name", ["C4", "C2xC2", "C3"])
def test_regular_subgroup_count_matches_labeled_braces(name):
    G = named_group(name)
    assert len(regular_subgroups(holomorph(G))) == len(_labeled_mul_tables(G))


@pytest.mark.parametrize("name", ["C4", "C2xC2", "S3", "D8", "Q8"])
def test_regular_subgroups_are_regular(name):
    G = named_group(name)
    H = holomorph(G)
    for R in regular_subgroups(H):
        assert len(R) == G.n
        assert is_subgroup(H.group, R)
        orbit = sorted(H.act(r, 0) for r in R)
        assert orbit == list(range(G.n))


@pytest.mark.parametrize("name", ["C2xC2", "S3", "C2xC2xC2", "Q8", "A4", "Dic12"])
def test_pruned_search_meets_every_conjugacy_class(name):
    H = holomorph(named_group(name))
    full = set(regular_lambda_maps(H))
    reps = set(regular_lambda_maps(H, up_to_conjugacy=True))
    assert reps <= full
    reached = {H.conjugate_lambda(a, lam) for lam in reps for a in range(H.m)}
    assert reached == full


def test_compose_and_conjugate_rows():
    H = holomorph(named_group("C2xC2xC2"))
    for a in (0, 5, 100):
        pa = H.auts[a]
        for b in (0, 7, 33):
            pb = H.auts[b]
            assert H.auts[int(H.compose_row(a)[b])] == tuple(pa[x] for x in pb)
            inv = [0] * len(pa)
            for x, y in enumerate(pa):
                inv[y] = x
            assert H.auts[int(H.conjugates(a)[b])] == tuple(pa[pb[inv[x]]] for x in range(len(pa)))


def test_bruteforce_group_tables():
    counts = [len(enumerate_groups_bruteforce(n)) for n in range(1, 7)]
    # labeled tables with identity 0: sum over groups of (n-1)!/|Aut|
    assert counts == [1, 1, 1, 4, 6, 80]
    with pytest.raises(OrderTooLarge):
        enumerate_groups_bruteforce(7)


def test_bruteforce_tables_are_groups():
    for n in range(1, 7):
        for G in enumerate_groups_bruteforce(n):
            group_from_table(G.op)


@st.composite
def group_and_subset(draw):
    name = draw(st.sampled_from(["C6", "S3", "D8", "Q8", "A4", "C2xC6", "D10"]))
    G = named_group(name)
    X = draw(st.sets(st.integers(0, G.n - 1), max_size=4))
    return G, sorted(X)


@given(group_and_subset())
@settings(max_examples=60, deadline=None)
def test_subgroup_generated_idempotent_monotone(gx):
    G, X = gx
    S = subgroup_generated(G, X)
    assert subgroup_generated(G, S) == S
    assert is_subgroup(G, S)
    for extra in range(G.n):
        assert S <= subgroup_generated(G, X + [extra])


@given(group_and_subset())
@settings(max_examples=60, deadline=None)
def test_normal_closure_contains_generated(gx):
    G, X = gx
    N = normal_closure(G, X)
    assert subgroup_generated(G, X) <= N
    assert is_normal(G, N)
    if is_abelian(G):
        assert N == subgroup_generated(G, X)


@given(st.sampled_from(["S3", "D8", "Q8", "A4"]), st.permutations(range(1, 4)))
@settings(max_examples=20, deadline=None)
def test_relabel_is_group(name, tail):
    G = named_group(name)
    perm = list(range(G.n))
    perm[1:4] = tail
    H = relabel(G, perm)
    group_from_table(H.op)


def test_all_subgroups_s3():
    subs = all_subgroups(S3)
    assert [len(s) for s in subs] == [1, 2, 2, 2, 3, 6]


def test_element_set_basics():
    s = ElementSet.of([2, 0], 4)
    assert s.members == (0, 2) and str(s) == "{0,2}"
    assert 2 in s and 1 not in s
    assert s <= ElementSet.full(4) and not ElementSet.full(4) <= s
    assert (s & ElementSet.of([2, 3], 4)).members == (2,)


def test_direct_product_is_group():
    G = direct_product(cyclic(2), S3)
    assert G.n == 12 and not is_abelian(G)
    assert isinstance(holomorph(cyclic(2)), Holomorph)
