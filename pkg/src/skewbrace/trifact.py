"""The large trifactorised group ``G = [K]C`` of a skew brace and group-side engines.

``K`` is the additive group, ``C`` the multiplicative group acting on ``K``
through ``lambda``.  An element ``(k, c)`` of ``G`` has index ``k * n + c``,
so ``K = {(k, 0)}``, ``C = {(0, c)}`` and ``D = {(c, c)}``.  Inside ``G``
conjugation by ``(0, c)`` on ``K`` is ``lambda_c`` and the commutator
``[(0, a), (b, 0)]`` is ``(a * b, 0)``.

The generic engines take a :class:`TrifactTuple` ``(G, K, H, E)``; the large
trifactorised group supplies the instance ``H = D``, ``E = C``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .brace import (
    SkewBrace,
    is_abelian_brace,
    is_left_ideal,
    is_right_ideal,
    is_strong_left_ideal,
    is_subbrace,
    is_trivial_brace,
    product_set,
    star_span,
    sum_set,
)
from .errors import NotASubbrace, NoWitness, PremiseViolated
from .groups import (
    ElementSet,
    FiniteGroup,
    _closure,
    _trusted_group,
    commutator_subgroup,
    first_associativity_violation,
    is_abelian,
    is_normal,
    is_subgroup,
    normal_closure,
    set_product,
)


@dataclass(eq=False)
class TrifactTuple:
    """``(G, K, H, E)`` with ``K`` normal, ``G = KE = KH = HE`` and ``K∩E = H∩E = 1``."""

    G: FiniteGroup
    K: ElementSet
    H: ElementSet
    E: ElementSet
    _memo: dict = field(default_factory=dict, repr=False)

    def validate(self) -> None:
        G, K, H, E = self.G, self.K, self.H, self.E
        one = ElementSet.of([G.id], G.n)
        for name, S in (("K", K), ("H", H), ("E", E)):
            if not is_subgroup(G, S):
                raise AssertionError(f"{name} is not a subgroup")
        if not is_normal(G, K):
            raise AssertionError("K is not normal")
        for name, X, Y in (("KE", K, E), ("KH", K, H), ("HE", H, E)):
            if not set_product(G, X, Y).is_full():
                raise AssertionError(f"G != {name}")
        if K & E != one or H & E != one:
            raise AssertionError("K∩E or H∩E is not trivial")

    @property
    def one(self) -> ElementSet:
        return ElementSet.of([self.G.id], self.G.n)

    def prod(self, X: Iterable[int], Y: Iterable[int]) -> ElementSet:
        return set_product(self.G, X, Y)

    def comm(self, X: Iterable[int], Y: Iterable[int]) -> ElementSet:
        return commutator_subgroup(self.G, X, Y)

    def join(self, *sets: Iterable[int]) -> ElementSet:
        elems: set[int] = set()
        for s in sets:
            elems |= set(s)
        return self.G.set(_closure(self.G, elems))

    def memo(self, key, compute):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    @cached_property
    def K_prime(self) -> ElementSet:
        return self.comm(self.K, self.K)

    @cached_property
    def E_prime(self) -> ElementSet:
        return self.comm(self.E, self.E)

    @cached_property
    def EK(self) -> ElementSet:
        """``[E, K]``."""
        return self.comm(self.E, self.K)

    @cached_property
    def G_prime(self) -> ElementSet:
        return self.comm(range(self.G.n), range(self.G.n))

    def E_part(self, L: ElementSet) -> ElementSet:
        """``LH ∩ E``."""
        return self.memo(("E_part", L.members), lambda: self.prod(L, self.H) & self.E)

    def T_part(self, L: ElementSet) -> ElementSet:
        """``LH ∩ LE``."""
        return self.memo(("T_part", L.members), lambda: self.prod(L, self.H) & self.prod(L, self.E))


@dataclass(eq=False)
class TrifactorisedGroup:
    G: FiniteGroup
    K: ElementSet
    C: ElementSet
    D: ElementSet
    source: SkewBrace

    @property
    def n(self) -> int:
        return self.source.n

    def k(self, x: int) -> int:
        return x * self.n

    def c(self, x: int) -> int:
        return x

    def d(self, x: int) -> int:
        return x * self.n + x

    def embed(self, L: Iterable[int]) -> ElementSet:
        """A brace subset as the matching subset of ``K``."""
        return self.G.set(self.k(x) for x in L)

    def pull_k(self, X: Iterable[int]) -> ElementSet:
        """Brace elements of a subset of ``K``."""
        out = []
        for g in X:
            k, c = divmod(g, self.n)
            assert c == 0, "element outside K"
            out.append(k)
        return self.source.set(out)

    def pull_c(self, X: Iterable[int]) -> ElementSet:
        out = []
        for g in X:
            k, c = divmod(g, self.n)
            assert k == 0, "element outside C"
            out.append(c)
        return self.source.set(out)

    @cached_property
    def tuple(self) -> TrifactTuple:
        return TrifactTuple(self.G, self.K, self.D, self.C)


def trifactorised_table(B: SkewBrace) -> list[list[int]]:
    """``(k1, c1)(k2, c2) = (k1 + lambda_{c1}(k2), c1 c2)``."""
    n = B.n
    A, M, L = B.add.op, B.mul.op, B.lam
    rows = []
    for k1 in range(n):
        Ak = A[k1]
        for c1 in range(n):
            Lc, Mc = L[c1], M[c1]
            rows.append([Ak[Lc[k2]] * n + Mc[c2] for k2 in range(n) for c2 in range(n)])
    return rows


def build_trifactorised(B: SkewBrace, check: bool = True) -> TrifactorisedGroup:
    n = B.n
    rows = trifactorised_table(B)
    if check:
        assert first_associativity_violation(rows) is None, "semidirect product table is not associative"
    G = _trusted_group(rows)
    K = G.set(k * n for k in range(n))
    C = G.set(range(n))
    D = G.set(c * n + c for c in range(n))
    T = TrifactorisedGroup(G, K, C, D, B)
    if check:
        T.tuple.validate()
        one = T.tuple.one
        assert is_subgroup(G, D), "D is not a subgroup"
        assert K & C == one and K & D == one and C & D == one
        assert set_product(G, K, C).is_full() and set_product(G, K, D).is_full() and set_product(G, C, D).is_full()
    return T


def _require_subbrace(T: TrifactorisedGroup, L: Iterable[int]) -> list[int]:
    members = sorted(set(L))
    if not is_subbrace(T.source, members):
        raise NotASubbrace(f"{members} is not a subbrace")
    return members


@dataclass(frozen=True)
class SubbraceEmbedding:
    L: ElementSet
    LD_LC: ElementSet
    LC_D: ElementSet
    LD_C: ElementSet


def embed_subbrace(T: TrifactorisedGroup, L: Iterable[int]) -> SubbraceEmbedding:
    """``(LD∩LC, L, LC∩D, LD∩C)``, checked to be a trifactorised group."""
    Lk = T.embed(_require_subbrace(T, L))
    LD, LC = set_product(T.G, Lk, T.D), set_product(T.G, Lk, T.C)
    top = LD & LC
    assert is_subgroup(T.G, top), "LD∩LC is not a subgroup"
    out = SubbraceEmbedding(Lk, top, LC & T.D, LD & T.C)
    sub = _restricted_tuple(T.G, top, Lk, out.LC_D, out.LD_C)
    sub.validate()
    return out


def _restricted_tuple(G: FiniteGroup, top: ElementSet, K: ElementSet, H: ElementSet, E: ElementSet) -> TrifactTuple:
    """Relabel the subgroup ``top`` of ``G`` as a group of its own."""
    members = top.members
    pos = {g: i for i, g in enumerate(members)}
    rows = [[pos[G.op[a][b]] for b in members] for a in members]
    sub = _trusted_group(rows) if members[0] == G.id else None
    assert sub is not None

    def re(S):
        return sub.set(pos[g] for g in S)

    return TrifactTuple(sub, re(K), re(H), re(E))


@dataclass(frozen=True)
class GroupSidePredicates:
    trivial: bool
    left_ideal: bool
    right_ideal: bool
    strong_left_ideal: bool


def group_side_predicates(T: TrifactorisedGroup, L: Iterable[int]) -> GroupSidePredicates:
    """The four subbrace properties read off inside ``G``.

    trivial: ``[LD∩C, L] = 1``; left ideal: ``[C, L] <= L``; right ideal:
    ``[LD∩C, K] <= L``; strong left ideal: ``L`` normal in ``G``.
    """
    Lk = T.embed(_require_subbrace(T, L))
    Tt = T.tuple
    E_L = Tt.E_part(Lk)
    return GroupSidePredicates(
        trivial=Tt.comm(E_L, Lk) == Tt.one,
        left_ideal=Tt.comm(T.C, Lk) <= Lk,
        right_ideal=Tt.comm(E_L, T.K) <= Lk,
        strong_left_ideal=is_normal(T.G, Lk),
    )


def brace_side_predicates(B: SkewBrace, L: Iterable[int]) -> GroupSidePredicates:
    L = list(L)
    return GroupSidePredicates(
        trivial=is_trivial_brace(B, L),
        left_ideal=is_left_ideal(B, L),
        right_ideal=is_right_ideal(B, L),
        strong_left_ideal=is_strong_left_ideal(B, L),
    )


def star_span_groupside(T: TrifactorisedGroup, L1: Iterable[int], L2: Iterable[int]) -> ElementSet:
    """``L1 * L2`` computed as ``[L1 D ∩ C, L2]`` in ``G``."""
    B = T.source
    L1 = _require_subbrace(T, L1)
    L2 = sorted(set(L2))
    Tt = T.tuple
    E1 = Tt.E_part(T.embed(L1))
    out = T.pull_k(Tt.comm(E1, T.embed(L2)))
    assert out == star_span(B, L1, L2), "group-side star span disagrees with the brace"
    if len(L1) == B.n and len(L2) == B.n:
        assert out == T.pull_k(Tt.EK), "B*B does not match [C, K]"
    return out


def abelian_equivalence(T: TrifactorisedGroup) -> tuple[bool, bool, bool]:
    B = T.source
    triple = (
        is_abelian_brace(B),
        is_abelian(T.G),
        is_abelian(T.G, T.K) and T.tuple.EK == T.tuple.one,
    )
    assert len(set(triple)) == 1, f"abelian equivalence broken: {triple}"
    return triple


def factorisation_equivalence(T: TrifactorisedGroup, L1: Iterable[int], L2: Iterable[int]) -> tuple[bool, bool]:
    """``(B = A1 + A2, B = A1 A2)``, each checked against its group-side form."""
    B = T.source
    L1, L2 = _require_subbrace(T, L1), _require_subbrace(T, L2)
    Tt = T.tuple
    K1, K2 = T.embed(L1), T.embed(L2)
    is_sum = sum_set(B, L1, L2).is_full()
    is_prod = product_set(B, L1, L2).is_full()
    assert is_sum == (Tt.prod(K1, K2) == T.K), "B = A1 + A2 iff K = L1 L2 failed"
    assert is_prod == (Tt.prod(Tt.E_part(K1), Tt.E_part(K2)) == T.C), "B = A1 A2 iff C = E1 E2 failed"
    return is_sum, is_prod


# -- generic trifactorised engines ------------------------------------------------------


def prop_EK_decomposition(
    T: TrifactTuple, L1: ElementSet, L2: ElementSet, E1: ElementSet, E2: ElementSet
) -> ElementSet:
    """``[E, K] = [E1, L2][E2, L1]`` with both factors normal in ``G``."""
    if T.prod(L1, L2) != T.K:
        raise PremiseViolated("K=L1L2")
    if T.prod(E1, E2) != T.E:
        raise PremiseViolated("E=E1E2")
    if T.comm(E1, L1) != T.one or T.comm(E2, L2) != T.one:
        raise PremiseViolated("[Ei,Li]=1")
    A, Bc = T.comm(E1, L2), T.comm(E2, L1)
    assert is_normal(T.G, A) and is_normal(T.G, Bc), "[E1,L2] or [E2,L1] is not normal"
    EK = T.EK
    assert T.prod(A, Bc) == EK, "[E,K] != [E1,L2][E2,L1]"
    return EK


def ito_premises(T: TrifactTuple, L1: ElementSet, L2: ElementSet) -> tuple[bool, bool, bool, bool]:
    """The four hypotheses of the trifactorised Itô engine, with ``Ei = Li H ∩ E``."""
    E1, E2 = T.E_part(L1), T.E_part(L2)
    p1 = T.prod(E1, E2) == T.E and T.prod(L1, L2) == T.K
    p2 = T.comm(T.E, L1) <= L1 and T.comm(E1, T.K) <= L1
    p3 = all(is_subgroup(T.G, Ti) and is_abelian(T.G, Ti) for Ti in (T.T_part(L1), T.T_part(L2)))
    lhs = T.prod(T.K_prime, T.H) & T.E
    rhs = T.prod(T.E_prime, T.prod(T.EK, T.H) & T.E)
    p4 = lhs <= rhs
    return p1, p2, p3, p4


@dataclass(frozen=True)
class ItoResult:
    conclusion_holds: bool
    Gprime_abelian: bool
    G_is_T2T1: bool
    subgroup: ElementSet  # K'[E, K]


def ito_engine(T: TrifactTuple, L1: ElementSet, L2: ElementSet) -> ItoResult:
    """Check that ``K'[E,K]`` is abelian and ``[K'[E,K]H ∩ E, K'[E,K]] = 1``."""
    for i, ok in enumerate(ito_premises(T, L1, L2), start=1):
        if not ok:
            raise PremiseViolated(str(i))
    N = T.join(T.K_prime, T.EK)
    NH_E = T.prod(N, T.H) & T.E
    conclusion = is_abelian(T.G, N) and T.comm(NH_E, N) == T.one
    T1, T2 = T.T_part(L1), T.T_part(L2)
    return ItoResult(
        conclusion_holds=conclusion,
        Gprime_abelian=is_abelian(T.G, T.G_prime),
        G_is_T2T1=T.prod(T2, T1).is_full(),
        subgroup=N,
    )


def centraliser_premises(T: TrifactTuple, L1: ElementSet, L2: ElementSet, X: ElementSet) -> bool:
    T1, T2 = T.T_part(L1), T.T_part(L2)
    return (
        all(is_subgroup(T.G, Ti) and is_abelian(T.G, Ti) for Ti in (T1, T2))
        and T.prod(L1, L2) == T.K
        and T.prod(T1, T2).is_full()
        and is_subgroup(T.G, X)
        and T.prod(X & T1, X & T2) == X
    )


def centraliser_in_K(T: TrifactTuple, X: Iterable[int]) -> ElementSet:
    X = list(X)
    op = T.G.op
    return T.G.set(k for k in T.K if all(op[k][x] == op[x][k] for x in X))


def centraliser_factorisation(T: TrifactTuple, L1: ElementSet, L2: ElementSet, X: ElementSet) -> bool:
    """Whether ``C_K(X) = (C_K(X) ∩ L1)(C_K(X) ∩ L2)``; premises are enforced."""
    if not centraliser_premises(T, L1, L2, X):
        raise PremiseViolated("centraliser lemma")
    CK = centraliser_in_K(T, X)
    return T.prod(CK & L1, CK & L2) == CK


def sli_premises(T: TrifactTuple, L1: ElementSet, L2: ElementSet) -> bool:
    E1, E2 = T.E_part(L1), T.E_part(L2)
    return (
        T.G.n > 1
        and T.prod(E1, E2) == T.E
        and T.prod(L1, L2) == T.K
        and all(is_subgroup(T.G, Ti) and is_abelian(T.G, Ti) for Ti in (T.T_part(L1), T.T_part(L2)))
        and T.comm(T.E, L1) <= L1
    )


def minimal_normal_candidates(T: TrifactTuple, within: Iterable[int]) -> list[ElementSet]:
    """Normal closures of the cyclic subgroups generated by elements of ``within``."""
    out = {}
    for x in within:
        if x == T.G.id:
            continue
        N = T.memo(("ncl", x), lambda x=x: normal_closure(T.G, [x]))
        out[N.members] = N
    return sorted(out.values(), key=lambda s: (len(s), s.members))


def sli_engine(T: TrifactTuple, L1: ElementSet, L2: ElementSet) -> ElementSet:
    """A non-trivial normal subgroup of ``G`` inside ``L1`` or ``L2``.

    Any such subgroup contains the normal closure of one of its non-identity
    elements, so scanning normal closures of single elements of ``L1 ∪ L2``
    finds a witness whenever one exists; the smallest one is returned.
    """
    if not sli_premises(T, L1, L2):
        raise PremiseViolated("strong-left-ideal engine")
    for N in minimal_normal_candidates(T, set(L1) | set(L2)):
        if N <= L1 or N <= L2:
            return N
    raise NoWitness("no non-trivial normal subgroup of G inside L1 or L2")
