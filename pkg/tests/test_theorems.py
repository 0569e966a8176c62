import pytest

from skewbrace.brace import (
    is_left_ideal,
    is_strong_left_ideal,
    is_subbrace,
    product_set,
    star_span,
    sum_set,
    trivial_brace,
)
from skewbrace.errors import NotAFactorisation, NotASubbrace, PremiseViolated
from skewbrace.library import named_group
from skewbrace.theorems import (
    counterexample_audit,
    enumerate_subbraces,
    enumerate_subbraces_bruteforce,
    find_factorisations,
    is_factorised_subbrace,
    lemma_sum_product_check,
    star_ideals_check,
    theorem_2_check,
    theorem_3_check,
    theorem_3_premises,
    theorem_A_check,
    theorem_A_premises,
    tsang_premises,
    tsang_theorem_check,
)


def test_subbraces_trivial_Z4():
    B = trivial_brace(named_group("C4"))
    assert [S.members for S in enumerate_subbraces(B)] == [(0,), (0, 2), (0, 1, 2, 3)]


def test_subbraces_match_bruteforce(braces8):
    for B in braces8:
        assert enumerate_subbraces(B) == enumerate_subbraces_bruteforce(B)


def test_bruteforce_subbraces_capped():
    with pytest.raises(ValueError):
        enumerate_subbraces_bruteforce(trivial_brace(named_group("C3xC3")))


def literal_factorisations(B):
    subs = enumerate_subbraces_bruteforce(B)
    out = set()
    for A1 in subs:
        for A2 in subs:
            s = {B.add.op[a][b] for a in A1 for b in A2} == set(range(B.n))
            p = {B.mul.op[a][b] for a in A1 for b in A2} == set(range(B.n))
            if s or p:
                out.add((A1.members, A2.members, s, p))
    return out


def test_find_factorisations_literal_oracle(braces8):
    for B in braces8:
        got = {(r.A1.members, r.A2.members, r.sum_holds, r.product_holds) for r in find_factorisations(B)}
        assert got == literal_factorisations(B)


def test_sum_factorisation_iff_product_factorisation(cat12):
    for B in cat12.braces():
        for r in find_factorisations(B):
            assert r.sum_holds == r.product_holds


def test_sum_and_product_have_equal_size(braces8):
    for B in braces8:
        subs = enumerate_subbraces(B)
        for A1 in subs:
            for A2 in subs:
                size = len(A1) * len(A2) // len(set(A1) & set(A2))
                assert len(sum_set(B, A1, A2)) == len(product_set(B, A1, A2)) == size


def test_find_factorisations_constraints():
    B = trivial_brace(named_group("C2xC2"))
    reps = find_factorisations(B, {"A1_trivial": True}, brace_id="x")
    assert reps and all(r.brace_id == "x" for r in reps)
    assert find_factorisations(B, lambda r: len(r.A1) == 1) == [
        r for r in find_factorisations(B) if len(r.A1) == 1
    ]


def test_is_factorised_subbrace_examples():
    B = trivial_brace(named_group("C2xC2"))
    A1, A2 = [0, 1], [0, 2]
    assert is_factorised_subbrace(B, [0], A1, A2)
    assert is_factorised_subbrace(B, [0, 1], A1, A2)
    assert not is_factorised_subbrace(B, [0, 3], A1, A2)
    assert is_factorised_subbrace(B, range(4), A1, A2)
    with pytest.raises(NotAFactorisation):
        is_factorised_subbrace(B, [0], A1, A1)
    with pytest.raises(NotASubbrace):
        is_factorised_subbrace(B, [0, 1, 2], A1, A2)


def test_lemma_A2_left_ideal_set_equality(braces8):
    for B in braces8:
        subs = enumerate_subbraces(B)
        for A2 in subs:
            if not is_left_ideal(B, A2):
                continue
            for A1 in subs:
                assert lemma_sum_product_check(B, A1, A2, left="A2")


def test_lemma_A1_left_ideal_factorisation_form(braces8):
    # the set equality fails for some pairs, the factorisation form never does
    witnesses = 0
    for B in braces8:
        subs = enumerate_subbraces(B)
        for A1 in subs:
            if not is_left_ideal(B, A1):
                continue
            for A2 in subs:
                assert lemma_sum_product_check(B, A1, A2, left="A1")
                if sum_set(B, A1, A2) != product_set(B, A1, A2):
                    witnesses += 1
    assert witnesses > 0


def test_lemma_premises():
    B = trivial_brace(named_group("C2"))
    with pytest.raises(ValueError):
        lemma_sum_product_check(B, [0], [0], left="B")


def test_theorem_A_exhaustive(braces8):
    count = 0
    for B in braces8:
        for r in find_factorisations(B):
            if theorem_A_premises(r):
                out = theorem_A_check(B, r.A1, r.A2)
                assert all(out.conclusions.values()), out
                count += 1
    assert count > 0


def test_theorem_A_premise_violation():
    # the whole of S3 is not an abelian factor
    B = trivial_brace(named_group("S3"))
    with pytest.raises(PremiseViolated):
        theorem_A_check(B, range(6), [0])


def test_theorem_A_trivial_S3():
    B = trivial_brace(named_group("S3"))
    out = theorem_A_check(B, [0, 3, 4], [0, 1])
    assert all(out.conclusions.values())


def test_tsang_theorem(braces8):
    for B in braces8:
        for r in find_factorisations(B):
            if tsang_premises(r):
                assert tsang_theorem_check(B, r.A1, r.A2)


def test_theorem_2(braces8):
    seen = 0
    for B in braces8:
        if B.n < 2:
            continue
        for r in find_factorisations(B):
            res = theorem_2_check(B, r.A1, r.A2)
            assert res.ok(), (B, r.A1, r.A2, res)
            seen += res.fix is not None
    assert seen > 0


def test_theorem_2_requires_factorisation():
    B = trivial_brace(named_group("C2xC2"))
    with pytest.raises(PremiseViolated):
        theorem_2_check(B, [0, 1], [0, 1])


def test_theorem_3(braces8):
    for B in braces8:
        for r in find_factorisations(B):
            if theorem_3_premises(r):
                res = theorem_3_check(B, r.A1, r.A2)
                assert len(res.brace_witness) > 1 and len(res.group_witness) > 1
                for W in (res.brace_witness, res.group_witness):
                    assert is_strong_left_ideal(B, W)
                    assert set(W) <= set(r.A1) or set(W) <= set(r.A2)


def test_theorem_3_zero_brace():
    B = trivial_brace(named_group("C1"))
    with pytest.raises(PremiseViolated):
        theorem_3_check(B, [0], [0])


def test_star_ideals(braces8):
    for B in braces8:
        for r in find_factorisations(B):
            if r.sum_holds and r.product_holds and r.premises["A1_trivial"] and r.premises["A2_trivial"]:
                assert star_ideals_check(B, r.A1, r.A2)


def test_counterexample_audit_false_under_ideal_hypothesis(cat12):
    # with A1 an ideal the stronger hypotheses force B*B to be a trivial brace
    for B in cat12.braces():
        for r in find_factorisations(B):
            p = r.premises
            if p["A1_strong_left"] and p["A1_right"] and p["A2_right"] and p["A1_abelian"] and p["A2_abelian"]:
                assert not counterexample_audit(B, r.A1, r.A2)


def test_counterexample_audit_premise_names():
    B = trivial_brace(named_group("C2xC2"))
    with pytest.raises(PremiseViolated, match="B = A1 \\+ A2"):
        counterexample_audit(B, [0, 1], [0, 1])
    with pytest.raises(PremiseViolated, match="order"):
        counterexample_audit(B, [0, 1], [0, 2], shape=True)


def test_star_span_of_trivial_is_zero():
    B = trivial_brace(named_group("S3"))
    assert star_span(B, range(6), range(6)).members == (0,)
    assert is_subbrace(B, [0])
