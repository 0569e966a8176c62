"""Finite skew (left) braces and their ideal theory.

A skew brace is a carrier with two group tables ``add`` and ``mul`` that
share the identity 0 and satisfy ``a(b+c) = ab - a + ac``.  Everything here
works on explicit tables; subsets are :class:`~skewbrace.groups.ElementSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AddNotGroup,
    BraceLawViolated,
    GroupTableError,
    MulNotGroup,
    NotAnIdeal,
    NotASubbrace,
    SharedIdentityViolated,
)
from .groups import (
    ElementSet,
    FiniteGroup,
    _closure,
    all_subgroups,
    center,
    commutator_subgroup,
    group_from_table,
    is_abelian,
    is_subgroup,
    isomorphisms,
    normal_closure,
    relabel,
    swap_to_zero,
)


@dataclass(frozen=True)
class SkewBrace:
    add: FiniteGroup
    mul: FiniteGroup

    @property
    def n(self) -> int:
        return self.add.n

    @property
    def carrier(self) -> ElementSet:
        return ElementSet.full(self.n)

    def set(self, elements: Iterable[int]) -> ElementSet:
        return ElementSet.of(elements, self.n)

    @cached_property
    def lam(self) -> tuple[tuple[int, ...], ...]:
        """``lam[a][b] = -a + ab``."""
        A, M, neg = self.add.op, self.mul.op, self.add.inv
        return tuple(tuple(A[neg[a]][M[a][b]] for b in range(self.n)) for a in range(self.n))

    @cached_property
    def star(self) -> tuple[tuple[int, ...], ...]:
        """``star[a][b] = -a + ab - b``."""
        A, neg, L = self.add.op, self.add.inv, self.lam
        return tuple(tuple(A[L[a][b]][neg[b]] for b in range(self.n)) for a in range(self.n))

    def sub(self, a: int, b: int) -> int:
        """``a - b`` in the additive group."""
        return self.add.op[a][self.add.inv[b]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewBrace):
            return NotImplemented
        return self.add.op == other.add.op and self.mul.op == other.mul.op

    def __hash__(self) -> int:
        return hash((self.add.op, self.mul.op))


def first_brace_law_violation(add: FiniteGroup, mul: FiniteGroup) -> tuple[int, int, int] | None:
    A = np.asarray(add.op, dtype=np.int64)
    M = np.asarray(mul.op, dtype=np.int64)
    neg = np.asarray(add.inv, dtype=np.int64)
    n = add.n
    idx = np.arange(n)
    lhs = M[idx[:, None, None], A[None, :, :]]
    t = A[M, neg[:, None]]  # ab - a
    rhs = A[t[:, :, None], M[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        return a, b, c
    return None


def brace_validate(add_table: Sequence[Sequence[int]], mul_table: Sequence[Sequence[int]]) -> SkewBrace:
    """Validate a pair of tables as a skew brace.

    If both groups share an identity other than 0, the carrier is relabeled
    by swapping that element with 0.
    """
    try:
        add = group_from_table(add_table)
    except GroupTableError as e:
        raise AddNotGroup(e) from e
    try:
        mul = group_from_table(mul_table)
    except GroupTableError as e:
        raise MulNotGroup(e) from e
    if add.n != mul.n:
        raise ValueError(f"tables of different sizes: {add.n} and {mul.n}")
    if add.id != mul.id:
        raise SharedIdentityViolated(add.id, mul.id)
    if add.id != 0:
        perm = swap_to_zero(add.n, add.id)
        add, mul = relabel(add, perm), relabel(mul, perm)
    triple = first_brace_law_violation(add, mul)
    if triple is not None:
        raise BraceLawViolated(*triple)
    return SkewBrace(add, mul)


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    return brace_validate(G.op, G.op)


def lam(B: SkewBrace, a: int, b: int) -> int:
    return B.lam[a][b]


def star(B: SkewBrace, a: int, b: int) -> int:
    return B.star[a][b]


def opposite(B: SkewBrace) -> SkewBrace:
    n = B.n
    transposed = [[B.add.op[j][i] for j in range(n)] for i in range(n)]
    out = brace_validate(transposed, B.mul.op)
    assert out.n == n, "opposite of a skew brace must be a skew brace"
    return out


def star_span(B: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> ElementSet:
    """Additive subgroup generated by ``{x * y : x in X, y in Y}``."""
    S = B.star
    Y = list(Y)
    return B.set(_closure(B.add, {S[x][y] for x in X for y in Y}))


# -- predicates ---------------------------------------------------------------


def is_subbrace(B: SkewBrace, S: Iterable[int]) -> bool:
    s = set(S)
    return is_subgroup(B.add, s) and is_subgroup(B.mul, s)


def _stars_inside(B: SkewBrace, X: Iterable[int], Y: Iterable[int], s: set[int]) -> bool:
    St = B.star
    Y = list(Y)
    return all(St[x][y] in s for x in X for y in Y)


def is_left_ideal(B: SkewBrace, S: Iterable[int]) -> bool:
    s = set(S)
    # s is an additive subgroup, so the span of the stars lies in s iff the stars do
    return is_subbrace(B, s) and _stars_inside(B, range(B.n), s, s)


def is_right_ideal(B: SkewBrace, S: Iterable[int]) -> bool:
    s = set(S)
    return is_subbrace(B, s) and _stars_inside(B, s, range(B.n), s)


def _additively_normal(B: SkewBrace, s: set[int]) -> bool:
    return all(B.add.conjugate(g, x) in s for g in range(B.n) for x in s)


def is_strong_left_ideal(B: SkewBrace, S: Iterable[int]) -> bool:
    s = set(S)
    return is_left_ideal(B, s) and _additively_normal(B, s)


def is_ideal(B: SkewBrace, S: Iterable[int]) -> bool:
    s = set(S)
    return is_strong_left_ideal(B, s) and _stars_inside(B, s, range(B.n), s)


def _require_subbrace(B: SkewBrace, S) -> set[int]:
    s = set(S)
    if not is_subbrace(B, s):
        raise NotASubbrace(f"{sorted(s)} is not a subbrace")
    return s


def is_trivial_brace(B: SkewBrace, S: Iterable[int] | None = None) -> bool:
    s = set(range(B.n)) if S is None else _require_subbrace(B, S)
    return _stars_inside(B, s, s, {0})


def is_abelian_brace(B: SkewBrace, S: Iterable[int] | None = None) -> bool:
    s = set(range(B.n)) if S is None else _require_subbrace(B, S)
    return _stars_inside(B, s, s, {0}) and is_abelian(B.add, s)


@dataclass(frozen=True)
class SubbraceHandle:
    """A subbrace together with its ideal-theoretic flags, all computed up front."""

    elements: ElementSet
    is_subbrace: bool
    is_left_ideal: bool
    is_right_ideal: bool
    is_strong_left_ideal: bool
    is_ideal: bool
    is_trivial: bool | None
    is_abelian: bool | None

    @classmethod
    def of(cls, B: SkewBrace, S: Iterable[int]) -> SubbraceHandle:
        elements = S if isinstance(S, ElementSet) else B.set(S)
        s = set(elements)
        sub = is_subbrace(B, s)
        if not sub:
            return cls(elements, False, False, False, False, False, None, None)
        left = _stars_inside(B, range(B.n), s, s)
        right = _stars_inside(B, s, range(B.n), s)
        strong = left and _additively_normal(B, s)
        trivial = _stars_inside(B, s, s, {0})
        return cls(
            elements,
            True,
            left,
            right,
            strong,
            strong and right,
            trivial,
            trivial and is_abelian(B.add, s),
        )


# -- distinguished subsets ---------------------------------------------------------


def fix(B: SkewBrace) -> ElementSet:
    L = B.lam
    return B.set(a for a in range(B.n) if all(L[b][a] == a for b in range(B.n)))


def ker_lambda(B: SkewBrace) -> ElementSet:
    L = B.lam
    return B.set(a for a in range(B.n) if all(L[a][b] == b for b in range(B.n)))


def soc(B: SkewBrace) -> ElementSet:
    return ker_lambda(B) & center(B.add)


def centre(B: SkewBrace) -> ElementSet:
    return soc(B) & center(B.mul)


def mul_commutator(B: SkewBrace) -> ElementSet:
    """``[B, B]`` taken in the multiplicative group."""
    return commutator_subgroup(B.mul, range(B.n), range(B.n))


def add_commutator(B: SkewBrace) -> ElementSet:
    return commutator_subgroup(B.add, range(B.n), range(B.n))


# -- ideal closure and the commutator ideal ----------------------------------------

_CLOSURE_STEPS = ("subgroup", "normal", "left", "right")


def ideal_closure(B: SkewBrace, X: Iterable[int], steps: Sequence[str] = _CLOSURE_STEPS) -> ElementSet:
    """Smallest ideal containing ``X``.

    Applies additive subgroup generation, additive normal closure and
    absorption of ``B * S`` and ``S * B`` round-robin, in the order given by
    ``steps``, until nothing changes.
    """
    full = range(B.n)
    ops = {
        "subgroup": lambda s: _closure(B.add, s),
        "normal": lambda s: set(normal_closure(B.add, s)),
        "left": lambda s: s | set(star_span(B, full, s)),
        "right": lambda s: s | set(star_span(B, s, full)),
    }
    cur = set(X) | {0}
    while True:
        prev = cur
        for name in steps:
            cur = ops[name](cur)
        # every step only grows the set, so an unchanged round is a fixpoint
        if cur == prev:
            return B.set(cur)


def commutator_generators(B: SkewBrace) -> ElementSet:
    """``[B,B]_+ ∪ [B,B]_· ∪ {ab - (a+b)}``."""
    A, M = B.add.op, B.mul.op
    diffs = {B.sub(M[a][b], A[a][b]) for a in range(B.n) for b in range(B.n)}
    return B.set(set(add_commutator(B)) | set(mul_commutator(B)) | diffs)


def commutator_ideal(B: SkewBrace, verify: bool = False) -> ElementSet:
    """``[B,B]^B`` computed as ``B*B + [B,B]_+``.

    With ``verify`` the independent characterisations in
    :func:`commutator_ideal_checks` are asserted as well.
    """
    BB = star_span(B, range(B.n), range(B.n))
    out = B.set(_closure(B.add, set(BB) | set(add_commutator(B))))
    if verify:
        checks = commutator_ideal_checks(B, out)
        failed = [k for k, ok in checks.items() if not ok]
        assert not failed, f"commutator ideal cross-checks failed: {failed}"
    return out


def all_ideals(B: SkewBrace) -> list[ElementSet]:
    return [S for S in all_subgroups(B.add) if is_ideal(B, S)]


def commutator_ideal_checks(B: SkewBrace, value: ElementSet | None = None) -> dict[str, bool]:
    """Cross-check ``[B,B]^B`` against three other descriptions.

    ``mul_form``: equals ``B*B + [B,B]_·``; ``generated``: equals the ideal
    generated by :func:`commutator_generators`; ``abelian_quotient``: the
    quotient is an abelian brace; ``minimal``: it is the least ideal with an
    abelian quotient, by brute force over all ideals.
    """
    if value is None:
        value = commutator_ideal(B)
    BB = star_span(B, range(B.n), range(B.n))
    mul_form = B.set(_closure(B.add, set(BB) | set(mul_commutator(B))))
    generated = ideal_closure(B, commutator_generators(B))
    is_id = is_ideal(B, value)
    quotient_ok = is_id and is_abelian_brace(quotient_brace(B, value))
    with_abelian_quotient = [I for I in all_ideals(B) if is_abelian_brace(quotient_brace(B, I))]
    minimal = bool(with_abelian_quotient) and all(value <= I for I in with_abelian_quotient) and value in with_abelian_quotient
    return {
        "is_ideal": is_id,
        "mul_form": mul_form == value,
        "generated": generated == value,
        "abelian_quotient": quotient_ok,
        "minimal": minimal,
    }


# -- derived structures -----------------------------------------------------------


def quotient_brace(B: SkewBrace, I: Iterable[int]) -> SkewBrace:
    """``B / I`` with each coset labeled by the rank of its least element."""
    members = sorted(set(I))
    if not is_ideal(B, members):
        raise NotAnIdeal(f"{members} is not an ideal")
    A, M = B.add.op, B.mul.op
    label = [-1] * B.n
    reps = []
    for x in range(B.n):
        if label[x] >= 0:
            continue
        k = len(reps)
        reps.append(x)
        for i in members:
            label[A[x][i]] = k
    q = len(reps)
    add = [[label[A[reps[i]][reps[j]]] for j in range(q)] for i in range(q)]
    mul = [[label[M[reps[i]][reps[j]]] for j in range(q)] for i in range(q)]
    return brace_validate(add, mul)


def sum_set(B: SkewBrace, A1: Iterable[int], A2: Iterable[int]) -> ElementSet:
    A2 = list(A2)
    A = B.add.op
    return B.set(A[x][y] for x in A1 for y in A2)


def product_set(B: SkewBrace, A1: Iterable[int], A2: Iterable[int]) -> ElementSet:
    A2 = list(A2)
    M = B.mul.op
    return B.set(M[x][y] for x in A1 for y in A2)


def restrict(B: SkewBrace, S: Iterable[int]) -> SkewBrace:
    """The subbrace ``S`` as a brace on ``0..|S|-1``, keeping the order of elements."""
    members = sorted(_require_subbrace(B, S))
    pos = {x: i for i, x in enumerate(members)}
    A, M = B.add.op, B.mul.op
    add = [[pos[A[x][y]] for y in members] for x in members]
    mul = [[pos[M[x][y]] for y in members] for x in members]
    return brace_validate(add, mul)


def brace_isomorphisms(B1: SkewBrace, B2: SkewBrace):
    """Yield bijections preserving both operations.

    Candidates are the isomorphisms of the additive groups; those that also
    preserve multiplication are kept.
    """
    if B1.n != B2.n:
        return
    if sorted(B1.mul.orders) != sorted(B2.mul.orders):
        return
    M1, M2 = B1.mul.op, B2.mul.op
    n = B1.n
    for phi in isomorphisms(B1.add, B2.add):
        if all(phi[M1[a][b]] == M2[phi[a]][phi[b]] for a in range(n) for b in range(n)):
            yield phi


def is_isomorphic(B1: SkewBrace, B2: SkewBrace) -> bool:
    if B1.n != B2.n:
        raise ValueError("is_isomorphic needs braces of equal size")
    return next(brace_isomorphisms(B1, B2), None) is not None
