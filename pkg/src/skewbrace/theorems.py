"""Subbrace lattices, factorisations and checkers for the factorisation theorems.

Every checker first tests its hypotheses literally and raises
:class:`PremiseViolated` when one fails, so harvesting code can filter with
``find_factorisations`` and then call the checker on what is left.
"""

from __future__ import annotations

import itertools
from importlib import resources
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .brace import (
    SkewBrace,
    SubbraceHandle,
    centre,
    commutator_ideal,
    fix,
    is_abelian_brace,
    is_ideal,
    is_left_ideal,
    is_strong_left_ideal,
    is_subbrace,
    is_trivial_brace,
    ker_lambda,
    opposite,
    product_set,
    soc,
    star_span,
    sum_set,
)
from .catalog import canonical_id, enumerate_braces, parse_brace
from .errors import NotAFactorisation, NotASubbrace, NoWitness, PremiseViolated
from .groups import ElementSet, all_subgroups, is_abelian, is_isomorphic_groups, is_subgroup
from .library import named_group
from .trifact import TrifactorisedGroup, build_trifactorised, ito_engine, sli_engine


# -- subbraces ---------------------------------------------------------------------


@lru_cache(maxsize=256)
def _subbraces(B: SkewBrace) -> tuple[ElementSet, ...]:
    # the multiplicative lattice is scanned and filtered by additive closure
    subs = [S for S in all_subgroups(B.mul) if is_subgroup(B.add, S)]
    return tuple(sorted(subs, key=lambda s: (len(s), s.members)))


def enumerate_subbraces(B: SkewBrace) -> list[ElementSet]:
    """All subbraces, sorted by size and then by members."""
    return list(_subbraces(B))


def enumerate_subbraces_bruteforce(B: SkewBrace) -> list[ElementSet]:
    """Every subset containing 0 tested against both group structures."""
    if B.n > 8:
        raise ValueError("subset brute force is limited to n <= 8")
    out = []
    rest = list(range(1, B.n))
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            S = (0,) + combo
            if is_subgroup(B.add, S) and is_subgroup(B.mul, S):
                out.append(B.set(S))
    return sorted(out, key=lambda s: (len(s), s.members))


@lru_cache(maxsize=64)
def trifactorised(B: SkewBrace) -> TrifactorisedGroup:
    return build_trifactorised(B)


# -- factorisation search ------------------------------------------------------------


def _flags(h: SubbraceHandle) -> dict[str, bool]:
    return {
        "trivial": bool(h.is_trivial),
        "abelian": bool(h.is_abelian),
        "left": h.is_left_ideal,
        "right": h.is_right_ideal,
        "strong_left": h.is_strong_left_ideal,
        "ideal": h.is_ideal,
    }


@dataclass
class FactorisationReport:
    brace_id: str
    A1: ElementSet
    A2: ElementSet
    sum_holds: bool
    product_holds: bool
    premises: dict[str, bool]
    conclusions: dict[str, bool | None] = field(default_factory=dict)
    witness: ElementSet | None = None

    def flag(self, name: str) -> bool:
        return self.premises[name]

    def tsv(self, key: str) -> str:
        cells = [key, self.brace_id, str(self.A1), str(self.A2), str(int(self.sum_holds)), str(int(self.product_holds))]
        for k in sorted(self.conclusions):
            v = self.conclusions[k]
            cells.append(f"{k}={'-' if v is None else int(v)}")
        cells.append("" if self.witness is None else str(self.witness))
        return "\t".join(cells)


def premise_flags(B: SkewBrace, A1: Iterable[int], A2: Iterable[int]) -> dict[str, bool]:
    """``A1_*`` / ``A2_*`` flags in ``B`` and, suffixed ``_op``, in the opposite brace."""
    Bop = opposite(B)
    out = {}
    for tag, S in (("A1", A1), ("A2", A2)):
        S = list(S)
        for k, v in _flags(SubbraceHandle.of(B, S)).items():
            out[f"{tag}_{k}"] = v
        for k, v in _flags(SubbraceHandle.of(Bop, S)).items():
            out[f"{tag}_{k}_op"] = v
    return out


@lru_cache(maxsize=64)
def _handle_flags(B: SkewBrace) -> dict[tuple[int, ...], dict[str, bool]]:
    Bop = opposite(B)
    out = {}
    for S in _subbraces(B):
        f = _flags(SubbraceHandle.of(B, S))
        f.update({k + "_op": v for k, v in _flags(SubbraceHandle.of(Bop, S)).items()})
        out[S.members] = f
    return out


Constraints = Mapping[str, bool] | Callable[[FactorisationReport], bool] | None


def _full_product(B: SkewBrace, A1: ElementSet, A2: ElementSet) -> tuple[bool, bool]:
    # |X + Y| >= n is necessary, so small pairs are skipped without building the sets
    if len(A1) * len(A2) < B.n:
        return False, False
    return sum_set(B, A1, A2).is_full(), product_set(B, A1, A2).is_full()


def find_factorisations(B: SkewBrace, constraints: Constraints = None, brace_id: str | None = None) -> list[FactorisationReport]:
    """Ordered subbrace pairs with ``B = A1 + A2`` or ``B = A1 A2``.

    ``constraints`` is either a mapping from premise flag names (for example
    ``"A1_left"`` or ``"A2_abelian_op"``) to required values, or a predicate
    on the report.
    """
    bid = brace_id if brace_id is not None else canonical_id(B)
    flags = _handle_flags(B)
    subs = _subbraces(B)
    out = []
    for A1 in subs:
        for A2 in subs:
            s, p = _full_product(B, A1, A2)
            if not (s or p):
                continue
            prem = {f"A1_{k}": v for k, v in flags[A1.members].items()}
            prem.update({f"A2_{k}": v for k, v in flags[A2.members].items()})
            rep = FactorisationReport(bid, A1, A2, s, p, prem)
            if constraints is None:
                out.append(rep)
            elif callable(constraints):
                if constraints(rep):
                    out.append(rep)
            elif all(prem[k] == v for k, v in constraints.items()):
                out.append(rep)
    return out


def _require_subbraces(B: SkewBrace, *sets: Iterable[int]) -> list[list[int]]:
    out = []
    for S in sets:
        S = sorted(set(S))
        if not is_subbrace(B, S):
            raise NotASubbrace(f"{S} is not a subbrace")
        out.append(S)
    return out


def is_factorised_subbrace(B: SkewBrace, S: Iterable[int], A1: Iterable[int], A2: Iterable[int]) -> bool:
    """``S = (A1∩S) + (A2∩S)`` and ``A1∩A2 ⊆ S``, for ``B = A1 + A2``."""
    S, A1, A2 = _require_subbraces(B, S, A1, A2)
    if not sum_set(B, A1, A2).is_full():
        raise NotAFactorisation("B is not A1 + A2")
    s = set(S)
    meet1 = [x for x in A1 if x in s]
    meet2 = [x for x in A2 if x in s]
    return sum_set(B, meet1, meet2) == B.set(S) and set(A1) & set(A2) <= s


def lemma_sum_product_check(B: SkewBrace, A1: Iterable[int], A2: Iterable[int], left: str = "A2") -> bool:
    """Sum versus product of two subbraces when one of them is a left ideal.

    With ``left="A2"`` the claim is the set equality ``A1 + A2 = A1 A2``.
    With ``left="A1"`` the set equality can fail, and what is checked is the
    weaker ``B = A1 + A2 iff B = A1 A2`` used to pass between the two
    factorisations.
    """
    A1, A2 = _require_subbraces(B, A1, A2)
    if left == "A2":
        if not is_left_ideal(B, A2):
            raise PremiseViolated("A2 left ideal")
        return sum_set(B, A1, A2) == product_set(B, A1, A2)
    if left == "A1":
        if not is_left_ideal(B, A1):
            raise PremiseViolated("A1 left ideal")
        return sum_set(B, A1, A2).is_full() == product_set(B, A1, A2).is_full()
    raise ValueError(f"left must be 'A1' or 'A2', not {left!r}")


# -- theorem checkers -------------------------------------------------------------------


def _report(B: SkewBrace, A1, A2, brace_id: str | None) -> FactorisationReport:
    A1s, A2s = B.set(A1), B.set(A2)
    s, p = _full_product(B, A1s, A2s)
    return FactorisationReport(brace_id or canonical_id(B), A1s, A2s, s, p, premise_flags(B, A1s, A2s))


def theorem_A_premises(rep: FactorisationReport) -> bool:
    p = rep.premises
    return (
        p["A1_abelian"]
        and p["A2_abelian"]
        and (rep.sum_holds or rep.product_holds)
        and p["A1_left"]
        and p["A1_right"]
    )


def theorem_A_check(B: SkewBrace, A1: Iterable[int], A2: Iterable[int], brace_id: str | None = None) -> FactorisationReport:
    """``[B,B]^B`` abelian, by the brace itself and by the Itô engine on ``G = [K]C``.

    Conclusions: ``theoremA`` (brace side), ``theoremA-group`` (engine side),
    ``commutator-match`` (``K'[C,K]`` pulls back to ``[B,B]^B``).
    """
    A1, A2 = _require_subbraces(B, A1, A2)
    rep = _report(B, A1, A2, brace_id)
    if not theorem_A_premises(rep):
        raise PremiseViolated("theorem A hypotheses")
    I = commutator_ideal(B)
    brace_side = is_abelian_brace(B, I)
    T = trifactorised(B)
    res = ito_engine(T.tuple, T.embed(A1), T.embed(A2))
    rep.conclusions["theoremA"] = brace_side
    rep.conclusions["theoremA-group"] = res.conclusion_holds
    rep.conclusions["commutator-match"] = T.pull_k(res.subgroup) == I
    rep.conclusions["G-T2T1"] = res.G_is_T2T1
    rep.conclusions["Gprime-abelian"] = res.Gprime_abelian
    return rep


def tsang_premises(rep: FactorisationReport) -> bool:
    p = rep.premises
    return (
        (rep.sum_holds or rep.product_holds)
        and p["A1_trivial"]
        and p["A2_trivial"]
        and p["A1_left_op"]
        and p["A1_right_op"]
        and p["A2_left_op"]
        and p["A2_right_op"]
    )


def tsang_theorem_check(B: SkewBrace, A1: Iterable[int], A2: Iterable[int]) -> bool:
    """``B * B`` is trivial when both factors are trivial and ideals on both sides of ``B^op``."""
    A1, A2 = _require_subbraces(B, A1, A2)
    if not tsang_premises(_report(B, A1, A2, "-")):
        raise PremiseViolated("Tsang hypotheses")
    return is_trivial_brace(B, star_span(B, range(B.n), range(B.n)))


@dataclass(frozen=True)
class Theorem2Result:
    fix: bool | None
    ker_lambda: bool | None
    soc: bool | None
    centre: bool | None
    meet_in_centre: bool | None

    def values(self) -> dict[str, bool | None]:
        return {
            "fix": self.fix,
            "ker_lambda": self.ker_lambda,
            "soc": self.soc,
            "centre": self.centre,
            "meet_in_centre": self.meet_in_centre,
        }

    def ok(self) -> bool:
        return all(v is not False for v in self.values().values())


def theorem_2_check(B: SkewBrace, A1: Iterable[int], A2: Iterable[int]) -> Theorem2Result:
    """Factorisation of ``Fix``, ``ker lambda``, ``Soc`` and ``Z(B)`` for ``B = A1 + A2 = A1 A2``.

    A field is ``None`` when the hypotheses for it (trivial or abelian
    factors) do not hold.
    """
    A1, A2 = _require_subbraces(B, A1, A2)
    if B.n < 2:
        raise PremiseViolated("B is the zero brace")
    if not (sum_set(B, A1, A2).is_full() and product_set(B, A1, A2).is_full()):
        raise PremiseViolated("B = A1 + A2 = A1 A2")
    trivial = is_trivial_brace(B, A1) and is_trivial_brace(B, A2)
    abelian = is_abelian_brace(B, A1) and is_abelian_brace(B, A2)

    def factorised(S: ElementSet, need_ideal: bool) -> bool:
        if not is_subbrace(B, S):
            return False
        if need_ideal and not is_ideal(B, S):
            return False
        return is_factorised_subbrace(B, S, A1, A2)

    f = k = s = z = m = None
    if trivial:
        f = factorised(fix(B), False)
        k = factorised(ker_lambda(B), False)
    if abelian:
        Z = centre(B)
        s = factorised(soc(B), True)
        z = factorised(Z, True)
        m = set(A1) & set(A2) <= set(Z)
    return Theorem2Result(f, k, s, z, m)


@dataclass(frozen=True)
class Theorem3Result:
    brace_witness: ElementSet
    group_witness: ElementSet


def theorem_3_premises(rep: FactorisationReport) -> bool:
    p = rep.premises
    return rep.A1.universe_n >= 2 and rep.sum_holds and p["A1_abelian"] and p["A2_abelian"] and p["A1_left"]


def theorem_3_check(B: SkewBrace, A1: Iterable[int], A2: Iterable[int]) -> Theorem3Result:
    """A non-zero strong left ideal inside ``A1`` or ``A2``, found brace-side and group-side."""
    A1, A2 = _require_subbraces(B, A1, A2)
    if not theorem_3_premises(_report(B, A1, A2, "-")):
        raise PremiseViolated("theorem 3 hypotheses")
    s1, s2 = set(A1), set(A2)
    brace_w = None
    for S in _subbraces(B):
        if len(S) > 1 and (set(S) <= s1 or set(S) <= s2) and is_strong_left_ideal(B, S):
            brace_w = S
            break
    if brace_w is None:
        raise NoWitness("no non-zero strong left ideal inside A1 or A2")
    T = trifactorised(B)
    N = sli_engine(T.tuple, T.embed(A1), T.embed(A2))
    group_w = T.pull_k(N)
    if not (is_strong_left_ideal(B, group_w) and (set(group_w) <= s1 or set(group_w) <= s2)):
        raise NoWitness("group-side witness does not pull back to a strong left ideal")
    return Theorem3Result(brace_w, group_w)


def star_ideals_check(B: SkewBrace, A1: Iterable[int], A2: Iterable[int]) -> bool:
    """For trivial ``A1, A2`` with ``B = A1 + A2 = A1 A2``: ``A1*A2``, ``A2*A1`` are
    strong left ideals and ``B*B = A1*A2 + A2*A1``."""
    A1, A2 = _require_subbraces(B, A1, A2)
    if not (is_trivial_brace(B, A1) and is_trivial_brace(B, A2)):
        raise PremiseViolated("A1, A2 trivial")
    if not (sum_set(B, A1, A2).is_full() and product_set(B, A1, A2).is_full()):
        raise PremiseViolated("B = A1 + A2 = A1 A2")
    X, Y = star_span(B, A1, A2), star_span(B, A2, A1)
    BB = star_span(B, range(B.n), range(B.n))
    return is_strong_left_ideal(B, X) and is_strong_left_ideal(B, Y) and sum_set(B, X, Y) == BB


# -- the tightness example ---------------------------------------------------------


def example_shape_check(B: SkewBrace, A1: Iterable[int], A2: Iterable[int]) -> None:
    """Raise unless ``B`` has the group structure of the order-24 example."""
    A1, A2 = sorted(set(A1)), sorted(set(A2))
    if B.n != 24:
        raise PremiseViolated("order", f"|B| = {B.n}, expected 24")
    if not is_isomorphic_groups(B.add, named_group("C2xC2xS3")):
        raise PremiseViolated("additive group", "not C2 x C2 x S3")
    if not is_isomorphic_groups(B.mul, named_group("C2xA4")):
        raise PremiseViolated("multiplicative group", "not C2 x A4")
    if len(A1) != 3:
        raise PremiseViolated("A1 order", f"|A1| = {len(A1)}, expected 3")
    if len(A2) != 8 or any(B.add.orders[x] > 2 for x in A2):
        raise PremiseViolated("A2 shape", "A2 is not elementary abelian of order 8")


def counterexample_audit(B: SkewBrace, A1: Iterable[int], A2: Iterable[int], shape: bool = False) -> bool:
    """True iff ``B * B`` is not trivial, under the example's weakened hypotheses.

    Hypotheses: ``A1`` a strong left ideal, ``A2`` a right ideal, both
    abelian, ``B = A1 + A2 = A1 A2``.  With ``shape`` the order-24 group
    structure is required as well.
    """
    if shape:
        example_shape_check(B, A1, A2)
    for name, S in (("A1", A1), ("A2", A2)):
        if not is_subbrace(B, S):
            raise PremiseViolated(f"{name} subbrace")
    A1, A2 = sorted(set(A1)), sorted(set(A2))
    if not is_strong_left_ideal(B, A1):
        raise PremiseViolated("A1 strong left ideal")
    if not SubbraceHandle.of(B, A2).is_right_ideal:
        raise PremiseViolated("A2 right ideal")
    if not (is_abelian_brace(B, A1) and is_abelian_brace(B, A2)):
        raise PremiseViolated("A1, A2 abelian")
    if not sum_set(B, A1, A2).is_full():
        raise PremiseViolated("B = A1 + A2")
    if not product_set(B, A1, A2).is_full():
        raise PremiseViolated("B = A1 A2")
    return not is_trivial_brace(B, star_span(B, range(B.n), range(B.n)))


def example_pairs(B: SkewBrace) -> list[tuple[ElementSet, ElementSet]]:
    """Pairs ``(A1, A2)`` of the order-24 example shape passing the audit premises."""
    out = []
    for rep in find_factorisations(B, {"A1_strong_left": True, "A2_right": True, "A1_abelian": True, "A2_abelian": True}, brace_id="-"):
        if len(rep.A1) == 3 and len(rep.A2) == 8 and all(B.add.orders[x] <= 2 for x in rep.A2):
            out.append((rep.A1, rep.A2))
    return out



EXAMPLE24_FILE = "example24.brace"


def load_example24() -> SkewBrace:
    """The stored order-24 brace with additive group C2 x C2 x S3 and multiplicative group C2 x A4."""
    text = resources.files("skewbrace").joinpath("data", EXAMPLE24_FILE).read_text(encoding="utf-8")
    return parse_brace(text)


def search_example24() -> list[tuple[SkewBrace, list[tuple[ElementSet, ElementSet]]]]:
    """Every brace on C2 x C2 x S3 with multiplicative group C2 x A4 and a pair where ``B * B`` is not trivial.

    One brace per isomorphism class, each with its qualifying pairs.
    """
    target = named_group("C2xA4")
    out = []
    for B in enumerate_braces(named_group("C2xC2xS3"), allow_large=True):
        if not is_isomorphic_groups(B.mul, target):
            continue
        hits = [p for p in example_pairs(B) if counterexample_audit(B, *p, shape=True)]
        if hits:
            out.append((B, hits))
    return out
