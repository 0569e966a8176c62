"""Exhaustive verification suites over a brace catalog.

Each suite maps one catalog entry to a list of :class:`Row` objects.  A row
is one instance whose premises held; ``ok`` records whether the conclusion
did too.  ``scanned`` counts every instance looked at, before filtering.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .brace import (
    SkewBrace,
    brace_validate,
    commutator_ideal_checks,
    is_left_ideal,
)
from .catalog import CatalogEntry
from .errors import SkewBraceError
from .groups import ElementSet
from .theorems import (
    counterexample_audit,
    enumerate_subbraces,
    find_factorisations,
    lemma_sum_product_check,
    star_ideals_check,
    theorem_2_check,
    theorem_3_check,
    theorem_3_premises,
    theorem_A_check,
    theorem_A_premises,
    trifactorised,
    tsang_premises,
    tsang_theorem_check,
)
from .trifact import (
    abelian_equivalence,
    brace_side_predicates,
    centraliser_factorisation,
    centraliser_premises,
    embed_subbrace,
    factorisation_equivalence,
    group_side_predicates,
    ito_engine,
    ito_premises,
    prop_EK_decomposition,
    sli_engine,
    sli_premises,
    star_span_groupside,
)
from .ybe import verify_ybe


@dataclass(frozen=True)
class Row:
    key: str
    brace_id: str
    subject: str
    detail: str
    ok: bool

    def tsv(self) -> str:
        return "\t".join((self.key, self.brace_id, self.subject, self.detail, "ok" if self.ok else "FAIL"))


@dataclass
class SuiteResult:
    key: str
    scanned: int = 0
    rows: list[Row] = field(default_factory=list)

    @property
    def matched(self) -> int:
        return len(self.rows)

    @property
    def failures(self) -> list[Row]:
        return [r for r in self.rows if not r.ok]

    def merge(self, other: SuiteResult) -> None:
        self.scanned += other.scanned
        self.rows.extend(other.rows)

    def summary(self) -> str:
        return f"{self.key}: {self.scanned} instances, {self.matched} matched premises, {len(self.failures)} failures"


def _guard(check: Callable[[], bool]) -> tuple[bool, str]:
    """Run a check; assertion failures inside the engines count as failures."""
    try:
        return bool(check()), ""
    except (AssertionError, SkewBraceError) as exc:
        return False, f"{type(exc).__name__}: {exc}"


def _pair(A1: Iterable[int], A2: Iterable[int]) -> str:
    return f"{A1}|{A2}"


def suite_axioms(e: CatalogEntry, res: SuiteResult) -> None:
    B = e.brace
    n = B.n
    A, M, L, S = B.add.op, B.mul.op, B.lam, B.star

    def check() -> bool:
        brace_validate(A, M)
        auto = all(L[a][A[x][y]] == A[L[a][x]][L[a][y]] for a in range(n) for x in range(n) for y in range(n))
        hom = all(L[M[a][b]][x] == L[a][L[b][x]] for a in range(n) for b in range(n) for x in range(n))
        recon = all(M[a][b] == A[A[a][S[a][b]]][b] for a in range(n) for b in range(n))
        return auto and hom and recon

    res.scanned += 1
    ok, why = _guard(check)
    res.rows.append(Row(res.key, e.id, "B", why, ok))


def suite_commutator(e: CatalogEntry, res: SuiteResult) -> None:
    res.scanned += 1
    checks = commutator_ideal_checks(e.brace)
    bad = ",".join(k for k, v in checks.items() if not v)
    res.rows.append(Row(res.key, e.id, "B", bad, not bad))


def suite_dictionary(e: CatalogEntry, res: SuiteResult) -> None:
    B = e.brace
    T = trifactorised(B)
    subs = enumerate_subbraces(B)
    res.scanned += 1
    ok, why = _guard(lambda: len(set(abelian_equivalence(T))) == 1)
    res.rows.append(Row(res.key, e.id, "abelian-equivalence", why, ok))
    for L in subs:
        res.scanned += 1

        def one(L=L) -> bool:
            embed_subbrace(T, L)
            return group_side_predicates(T, L) == brace_side_predicates(B, L)

        ok, why = _guard(one)
        res.rows.append(Row(res.key, e.id, str(L), why, ok))
    for L1 in subs:
        for L2 in subs:
            res.scanned += 1

            def two(L1=L1, L2=L2) -> bool:
                star_span_groupside(T, L1, L2)
                factorisation_equivalence(T, L1, L2)
                return True

            ok, why = _guard(two)
            res.rows.append(Row(res.key, e.id, _pair(L1, L2), why, ok))


def suite_lemma31(e: CatalogEntry, res: SuiteResult) -> None:
    B = e.brace
    subs = enumerate_subbraces(B)
    left = {S.members: is_left_ideal(B, S) for S in subs}
    for A1 in subs:
        for A2 in subs:
            for side, S in (("A2", A2), ("A1", A1)):
                res.scanned += 1
                if left[S.members]:
                    ok, why = _guard(lambda side=side: lemma_sum_product_check(B, A1, A2, left=side))
                    res.rows.append(Row(res.key, e.id, _pair(A1, A2), f"left={side} {why}".strip(), ok))


def _factorisation_suite(premises, check):
    def suite(e: CatalogEntry, res: SuiteResult) -> None:
        B = e.brace
        for rep in find_factorisations(B, brace_id=e.id):
            res.scanned += 1
            if not premises(B, rep):
                continue
            ok, why = _guard(lambda rep=rep: check(B, rep))
            res.rows.append(Row(res.key, e.id, _pair(rep.A1, rep.A2), why, ok))

    return suite


def _theorem_A(B: SkewBrace, rep) -> bool:
    out = theorem_A_check(B, rep.A1, rep.A2, rep.brace_id)
    return all(out.conclusions.values())


def _theorem_3(B: SkewBrace, rep) -> bool:
    theorem_3_check(B, rep.A1, rep.A2)
    return True


def _both_factorisations(B: SkewBrace, rep) -> bool:
    return B.n >= 2 and rep.sum_holds and rep.product_holds


def _trivial_pair(B: SkewBrace, rep) -> bool:
    return _both_factorisations(B, rep) and rep.premises["A1_trivial"] and rep.premises["A2_trivial"]


def _example_premises(B: SkewBrace, rep) -> bool:
    p = rep.premises
    return (
        p["A1_strong_left"]
        and p["A2_right"]
        and p["A1_abelian"]
        and p["A2_abelian"]
        and rep.sum_holds
        and rep.product_holds
    )


def _example_check(B: SkewBrace, rep) -> bool:
    nontrivial = counterexample_audit(B, rep.A1, rep.A2)
    # with A1 also a right ideal the stronger hypotheses force B*B to be trivial
    return not (nontrivial and rep.premises["A1_right"])


suite_theorem_A = _factorisation_suite(lambda B, r: theorem_A_premises(r), _theorem_A)
suite_theorem_2 = _factorisation_suite(_both_factorisations, lambda B, r: theorem_2_check(B, r.A1, r.A2).ok())
suite_theorem_3 = _factorisation_suite(lambda B, r: theorem_3_premises(r), _theorem_3)
suite_tsang = _factorisation_suite(lambda B, r: tsang_premises(r), lambda B, r: tsang_theorem_check(B, r.A1, r.A2))
suite_star_ideals = _factorisation_suite(_trivial_pair, lambda B, r: star_ideals_check(B, r.A1, r.A2))
suite_counterexample = _factorisation_suite(_example_premises, _example_check)


def _engine_pairs(e: CatalogEntry):
    B = e.brace
    T = trifactorised(B)
    subs = enumerate_subbraces(B)
    for L1 in subs:
        for L2 in subs:
            yield T, L1, L2, T.embed(L1), T.embed(L2)


def suite_ito(e: CatalogEntry, res: SuiteResult) -> None:
    for T, A1, A2, L1, L2 in _engine_pairs(e):
        res.scanned += 1
        if not all(ito_premises(T.tuple, L1, L2)):
            continue

        def check(L1=L1, L2=L2) -> bool:
            r = ito_engine(T.tuple, L1, L2)
            return r.conclusion_holds and r.Gprime_abelian and r.G_is_T2T1

        ok, why = _guard(check)
        res.rows.append(Row(res.key, e.id, _pair(A1, A2), why, ok))


def suite_sli(e: CatalogEntry, res: SuiteResult) -> None:
    for T, A1, A2, L1, L2 in _engine_pairs(e):
        res.scanned += 1
        if not sli_premises(T.tuple, L1, L2):
            continue
        ok, why = _guard(lambda L1=L1, L2=L2: len(sli_engine(T.tuple, L1, L2)) > 1)
        res.rows.append(Row(res.key, e.id, _pair(A1, A2), why, ok))


def suite_prop_ek(e: CatalogEntry, res: SuiteResult) -> None:
    for T, A1, A2, L1, L2 in _engine_pairs(e):
        tt = T.tuple
        res.scanned += 1
        E1, E2 = tt.E_part(L1), tt.E_part(L2)
        if not (tt.prod(L1, L2) == tt.K and tt.prod(E1, E2) == tt.E):
            continue
        if tt.comm(E1, L1) != tt.one or tt.comm(E2, L2) != tt.one:
            continue
        ok, why = _guard(lambda: prop_EK_decomposition(tt, L1, L2, E1, E2) == tt.EK)
        res.rows.append(Row(res.key, e.id, _pair(A1, A2), why, ok))


def centraliser_candidates(tt, L1: ElementSet, L2: ElementSet) -> list[tuple[str, ElementSet]]:
    T1, T2 = tt.T_part(L1), tt.T_part(L2)
    Gp = tt.G_prime
    return [
        ("1", tt.one),
        ("G", tt.G.carrier),
        ("T1", T1),
        ("T2", T2),
        ("G'", Gp),
        ("K", tt.K),
        ("E", tt.E),
        ("H", tt.H),
        ("G'T1∩G'T2", tt.prod(Gp, T1) & tt.prod(Gp, T2)),
    ]


def suite_centraliser(e: CatalogEntry, res: SuiteResult) -> None:
    for T, A1, A2, L1, L2 in _engine_pairs(e):
        tt = T.tuple
        for name, X in centraliser_candidates(tt, L1, L2):
            res.scanned += 1
            if not centraliser_premises(tt, L1, L2, X):
                continue
            ok, why = _guard(lambda X=X: centraliser_factorisation(tt, L1, L2, X))
            res.rows.append(Row(res.key, e.id, _pair(A1, A2), f"X={name} {why}".strip(), ok))


def suite_ybe(e: CatalogEntry, res: SuiteResult) -> None:
    res.scanned += 1
    res.rows.append(Row(res.key, e.id, "B", "", verify_ybe(e.brace)))


SUITES: dict[str, Callable[[CatalogEntry, SuiteResult], None]] = {
    "axioms": suite_axioms,
    "commutator": suite_commutator,
    "dict-prop2": suite_dictionary,
    "lemma31": suite_lemma31,
    "theoremA": suite_theorem_A,
    "teo2": suite_theorem_2,
    "teo3": suite_theorem_3,
    "tsang11": suite_tsang,
    "cor-star-ideals": suite_star_ideals,
    "ito-engine": suite_ito,
    "sli-engine": suite_sli,
    "prop-ek": suite_prop_ek,
    "centraliser": suite_centraliser,
    "counterexample": suite_counterexample,
    "ybe": suite_ybe,
}

ALIASES = {"dictionary": "dict-prop2"}


def resolve_keys(selector: str) -> list[str]:
    if selector == "all":
        return list(SUITES)
    keys = []
    for part in selector.split(","):
        part = ALIASES.get(part.strip(), part.strip())
        if part not in SUITES:
            raise KeyError(f"unknown theorem key {part!r}; choose from all, {', '.join(SUITES)}")
        keys.append(part)
    return keys


def _run_entry(args: tuple[CatalogEntry, Sequence[str]]) -> dict[str, SuiteResult]:
    entry, keys = args
    out = {}
    for k in keys:
        res = SuiteResult(k)
        SUITES[k](entry, res)
        out[k] = res
    return out


def run_suites(entries: Sequence[CatalogEntry], selector: str = "all", jobs: int = 1) -> dict[str, SuiteResult]:
    """Run the selected suites; results are merged in catalog order."""
    keys = resolve_keys(selector)
    totals = {k: SuiteResult(k) for k in keys}
    work = [(e, keys) for e in entries]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_entry, work))
    else:
        parts = [_run_entry(w) for w in work]
    for part in parts:
        for k in keys:
            totals[k].merge(part[k])
    return totals

