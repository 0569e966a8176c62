"""Enumeration of small skew braces, the brute-force oracle, and brace files.

Braces with a given additive group ``A`` correspond to regular subgroups of
the holomorph ``A ⋊ Aut(A)``: the element of the subgroup over translation
``a`` is ``(a, lambda_a)`` and the multiplication is ``ab = a + lambda_a(b)``.
Catalog entries are stored in canonical labeling (see :func:`canonical_form`),
which also provides their ids.
"""

from __future__ import annotations

import enum
import functools
import hashlib
import itertools
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .brace import SkewBrace, brace_validate, is_isomorphic
from .errors import BraceError, OrderTooLarge, ParseError, ValidationError
from .groups import (
    FiniteGroup,
    Holomorph,
    _trusted_group,
    automorphisms,
    enumerate_groups_bruteforce,
    regular_lambda_maps,
)
from .library import MAX_COMPLETE_ORDER, groups_of_order

MAX_ORDER = MAX_COMPLETE_ORDER
BRUTE_FORCE_MAX = 6

CanonicalForm = tuple[tuple[int, ...], tuple[int, ...]]


class Provenance(enum.Enum):
    HOLOMORPH = "holomorph-method"
    BRUTE_FORCE = "brute-force-oracle"
    FILE = "file"


# -- canonical form -------------------------------------------------------------


def _row_one_labelings(add: FiniteGroup, auts: list[tuple[int, ...]]) -> Iterator[list[int]]:
    """Relabelings fixing 0 that can give the lexicographically least addition table.

    Row 0 of every relabeled table is the identity row, so the first entry
    that can differ is in row 1.  Walking row 1 left to right, an element seen
    for the first time must take the smallest unused label, and a column label
    without an element yet is branched over the unlabeled elements.  Row 1
    touches every column, so each leaf is a complete relabeling.

    Relabelings that differ by an automorphism give the same table, so at a
    branch only one element per orbit of the pointwise stabiliser of the
    labeled elements is tried.  Elements forced by row 1 are sums of labeled
    ones and are fixed by that stabiliser automatically.
    """
    n = add.n
    op = add.op
    if n == 1:
        yield [0]
        return
    sigma = [-1] * n
    elem = [-1] * n
    sigma[0], elem[0] = 0, 0

    def walk(x: int, j: int, nxt: int, stab: list[tuple[int, ...]]):
        forced: list[int] = []
        while j < n:
            if elem[j] < 0:
                assert j == nxt
                done: set[int] = set()
                for e in range(n):
                    if sigma[e] >= 0 or e in done:
                        continue
                    done.update(a[e] for a in stab)
                    sigma[e], elem[j] = j, e
                    yield from walk(x, j, nxt + 1, [a for a in stab if a[e] == e])
                    sigma[e], elem[j] = -1, -1
                break
            e = op[x][elem[j]]
            if sigma[e] < 0:
                sigma[e], elem[nxt] = nxt, e
                forced.append(e)
                nxt += 1
            j += 1
        else:
            yield list(sigma)
        for e in forced:
            elem[sigma[e]] = -1
            sigma[e] = -1

    done: set[int] = set()
    for x in range(1, n):
        if x in done:
            continue
        done.update(a[x] for a in auts)
        sigma[x], elem[1] = 1, x
        yield from walk(x, 1, 2, [a for a in auts if a[x] == x])
        sigma[x], elem[1] = -1, -1


def _relabeled_flat(op, sigma, back) -> tuple[int, ...]:
    n = len(sigma)
    return tuple(sigma[op[back[i]][back[j]]] for i in range(n) for j in range(n))


def _inverse(sigma: list[int]) -> list[int]:
    back = [0] * len(sigma)
    for x, s in enumerate(sigma):
        back[s] = x
    return back


def _generated_labeling(op, gens: tuple[int, ...], n: int) -> list[int] | None:
    """Breadth-first labeling from ``gens``: labels in order of discovery of ``x + g``."""
    sigma = [-1] * n
    sigma[0] = 0
    order = [0]
    i = 0
    while i < len(order):
        x = order[i]
        for g in gens:
            y = op[x][g]
            if sigma[y] < 0:
                sigma[y] = len(order)
                order.append(y)
        i += 1
    return sigma if len(order) == n else None


def _least_table_by_generators(G: FiniteGroup, auts: list[tuple[int, ...]]) -> tuple[int, ...]:
    """Least table over breadth-first labelings from generating tuples of minimal length.

    Used above :data:`MAX_ORDER`, where the row-one walk blows up.  Tuples in
    one automorphism orbit give the same table, so the first generator runs
    over orbit representatives only.
    """
    n, op = G.n, G.op
    reps, done = [], set()
    for x in range(1, n):
        if x not in done:
            reps.append(x)
            done.update(a[x] for a in auts)
    k = 1
    while True:
        best = None
        for first in reps:
            for rest in itertools.product(range(1, n), repeat=k - 1):
                sigma = _generated_labeling(op, (first,) + rest, n)
                if sigma is None:
                    continue
                t = _relabeled_flat(op, sigma, _inverse(sigma))
                if best is None or t < best[0]:
                    best = (t, sigma)
        if best is not None:
            return best[1]
        k += 1


@functools.lru_cache(maxsize=64)
def _group_canon(op: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Least relabeled table of a group, one relabeling reaching it, and Aut.

    Up to :data:`MAX_ORDER` the table is least over all relabelings fixing 0;
    beyond it, least over generator labelings.
    """
    G = _trusted_group(op)
    auts = automorphisms(G)
    if G.n > MAX_ORDER:
        sigma = _least_table_by_generators(G, auts)
        return _relabeled_flat(op, sigma, _inverse(sigma)), tuple(sigma), tuple(auts)
    best, best_sigma = None, None
    for sigma in _row_one_labelings(G, auts):
        t = _relabeled_flat(op, sigma, _inverse(sigma))
        if best is None or t < best:
            best, best_sigma = t, tuple(sigma)
    return best, best_sigma, tuple(auts)


@functools.lru_cache(maxsize=64)
def _coset_arrays(op: tuple[tuple[int, ...], ...]) -> tuple[np.ndarray, np.ndarray]:
    """Rows ``sigma0 ∘ alpha`` over Aut and their inverses."""
    _, sigma0, auts = _group_canon(op)
    P = np.asarray(auts, dtype=np.intp)
    sig = np.asarray(sigma0, dtype=np.intp)[P]
    back = np.empty_like(sig)
    rows = np.arange(sig.shape[0])[:, None]
    back[rows, sig] = np.arange(sig.shape[1])[None, :]
    return sig, back


def _least_rows(T: np.ndarray) -> np.ndarray:
    """Lexicographically least row of a 2-D array."""
    idx = np.arange(T.shape[0])
    for c in range(T.shape[1]):
        if len(idx) == 1:
            break
        col = T[idx, c]
        idx = idx[col == col.min()]
    return T[idx[0]]


def canonical_form(B: SkewBrace) -> CanonicalForm:
    """Least ``(add, mul)`` pair of flattened tables over relabelings fixing 0.

    The relabelings reaching the least addition table are exactly
    ``sigma0 ∘ alpha`` for automorphisms ``alpha`` of ``(B, +)``; the
    multiplication is minimised over that coset.
    """
    add_flat, _, _ = _group_canon(B.add.op)
    sig, back = _coset_arrays(B.add.op)
    M = np.asarray(B.mul.op, dtype=np.intp)
    n = B.n
    T = np.take_along_axis(sig, M[back[:, :, None], back[:, None, :]].reshape(len(sig), n * n), axis=1)
    return add_flat, tuple(int(v) for v in _least_rows(T))


def _unflatten(flat: tuple[int, ...], n: int) -> list[list[int]]:
    return [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def canonical_brace(B: SkewBrace) -> SkewBrace:
    add, mul = canonical_form(B)
    return brace_validate(_unflatten(add, B.n), _unflatten(mul, B.n))


def canonical_id(B: SkewBrace, form: CanonicalForm | None = None) -> str:
    if form is None:
        form = canonical_form(B)
    digest = hashlib.sha256((",".join(map(str, form[0])) + ";" + ",".join(map(str, form[1]))).encode()).hexdigest()
    return f"o{B.n:02d}-{digest[:12]}"


# -- enumeration ------------------------------------------------------------------


def _brace_from_lambda(H: Holomorph, lam: tuple[int, ...]) -> SkewBrace:
    A, n = H.base.op, H.base.n
    mul = [[A[a][H.auts[lam[a]][b]] for b in range(n)] for a in range(n)]
    return brace_validate(A, mul)


def braces_from_regular_subgroups(add_group: FiniteGroup) -> Iterator[SkewBrace]:
    """One labeled brace per regular subgroup of the holomorph, no deduplication."""
    H = Holomorph(add_group)
    for lam in regular_lambda_maps(H):
        yield _brace_from_lambda(H, lam)


class _LambdaOrbits:
    """Aut(A)-conjugation orbits of lambda maps.

    Conjugating a regular subgroup by ``alpha`` in Aut(A) sends ``lam`` to
    ``lam'`` with ``lam'[alpha(a)] = alpha ∘ lam[a] ∘ alpha^-1``.  Two braces
    on the same additive table are isomorphic exactly when their lambda
    maps lie in one orbit.
    """

    def __init__(self, H: Holomorph):
        self.H = H
        self.seen: set[tuple[int, ...]] = set()

    def orbit(self, lam: tuple[int, ...]) -> set[tuple[int, ...]]:
        H = self.H
        P, Pinv = H._P, H._Pinv
        m, n = P.shape
        F = P[np.asarray(lam)]  # F[a] is the automorphism lam[a]
        # conj[k, a, x] = alpha_k(F[a](alpha_k^-1(x)))
        conj = P[np.arange(m)[:, None, None], F[:, Pinv].transpose(1, 0, 2)]
        idx = H.perm_indices(conj)
        out = np.empty((m, n), dtype=np.intp)
        out[np.arange(m)[:, None], P.astype(np.intp)] = idx
        return {tuple(int(v) for v in r) for r in out}

    def add(self, lam: tuple[int, ...]) -> bool:
        """Record the orbit of ``lam``; False if it was already known."""
        if lam in self.seen:
            return False
        self.seen |= self.orbit(lam)
        return True


def enumerate_braces(add_group: FiniteGroup, allow_large: bool = False) -> list[SkewBrace]:
    """Skew braces with the given additive group, one per isomorphism class.

    Results are in canonical labeling, sorted by canonical form.
    """
    if add_group.n > MAX_ORDER and not allow_large:
        raise OrderTooLarge(f"order {add_group.n} exceeds {MAX_ORDER}; enable large orders explicitly")
    H = Holomorph(add_group)
    orbits = _LambdaOrbits(H)
    forms = []
    for lam in regular_lambda_maps(H, up_to_conjugacy=True):
        if orbits.add(lam):
            forms.append(canonical_form(_brace_from_lambda(H, lam)))
    n = add_group.n
    return [brace_validate(_unflatten(f[0], n), _unflatten(f[1], n)) for f in sorted(set(forms))]


def enumerate_order(n: int) -> list[SkewBrace]:
    """All skew braces of order ``n`` up to isomorphism, for ``n <= 16``."""
    out: list[SkewBrace] = []
    for _, G in groups_of_order(n):
        out.extend(enumerate_braces(G))
    return sorted(out, key=canonical_form)


def brute_force_enumerate(n: int) -> list[SkewBrace]:
    """Oracle: every brace table pair on ``0..n-1``, then one per isomorphism class.

    Additive tables come from :func:`enumerate_groups_bruteforce`.  For each
    of them, multiplicative Latin squares with identity 0 are filled row by
    row, and every instance of ``a(b+c) = ab - a + ac`` whose three cells are
    known is checked as soon as a cell is set.  Complete tables are validated
    as groups.  Isomorphism classes are formed with :func:`is_isomorphic`.
    """
    if n > BRUTE_FORCE_MAX:
        raise OrderTooLarge(f"brute-force brace enumeration is capped at n = {BRUTE_FORCE_MAX}, got {n}")
    labeled = list(_brute_force_labeled(n))
    reps: list[SkewBrace] = []
    for B in labeled:
        if not any(is_isomorphic(B, R) for R in reps):
            reps.append(B)
    return reps


def _brute_force_labeled(n: int) -> Iterator[SkewBrace]:
    for add in enumerate_groups_bruteforce(n):
        A, neg = add.op, add.inv
        m = [[-1] * n for _ in range(n)]
        for x in range(n):
            m[0][x] = x
            m[x][0] = x
        col_used = [{x} for x in range(n)]

        def law_ok(a: int) -> bool:
            row = m[a]
            for b in range(n):
                if row[b] < 0:
                    continue
                for c in range(n):
                    if row[c] < 0:
                        continue
                    bc = row[A[b][c]]
                    if bc >= 0 and bc != A[A[row[b]][neg[a]]][row[c]]:
                        return False
            return True

        def fill(a: int, b: int, row_used: set[int]):
            if a == n:
                try:
                    yield brace_validate(A, m)
                except BraceError:
                    pass
                return
            if b == n:
                yield from fill(a + 1, 1, {a + 1} if a + 1 < n else set())
                return
            for v in range(n):
                if v in row_used or v in col_used[b]:
                    continue
                m[a][b] = v
                if law_ok(a):
                    row_used.add(v)
                    col_used[b].add(v)
                    yield from fill(a, b + 1, row_used)
                    row_used.discard(v)
                    col_used[b].discard(v)
                m[a][b] = -1

        if n == 1:
            yield brace_validate(A, A)
        else:
            yield from fill(1, 1, {1})


# -- .brace files ------------------------------------------------------------------


def format_brace(B: SkewBrace) -> str:
    lines = [f"brace {B.n}"]
    lines += [" ".join(map(str, row)) for row in B.add.op]
    lines.append("")
    lines += [" ".join(map(str, row)) for row in B.mul.op]
    return "\n".join(lines) + "\n"


def write_brace(B: SkewBrace, path: str | Path) -> None:
    Path(path).write_text(format_brace(B), encoding="utf-8")


_HEADER = re.compile(r"^brace\s+(\d+)$")


def parse_brace(text: str) -> SkewBrace:
    n = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(lineno, "expected header 'brace <n>'")
            n = int(m.group(1))
            if n < 1:
                raise ParseError(lineno, "order must be positive")
            continue
        if len(rows) == 2 * n:
            raise ParseError(lineno, "unexpected content after the multiplicative table")
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, "non-integer table entry") from None
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} entries, found {len(row)}")
        if any(not 0 <= v < n for v in row):
            raise ParseError(lineno, f"entry outside 0..{n - 1}")
        rows.append(row)
    if n is None:
        raise ParseError(0, "empty file")
    if len(rows) != 2 * n:
        raise ParseError(len(text.splitlines()), f"expected {2 * n} table rows, found {len(rows)}")
    try:
        return brace_validate(rows[:n], rows[n:])
    except BraceError as e:
        raise ValidationError(e) from e


def read_brace(path: str | Path) -> SkewBrace:
    return parse_brace(Path(path).read_text(encoding="utf-8"))


# -- catalogs --------------------------------------------------------------------------


@dataclass
class CatalogEntry:
    id: str
    brace: SkewBrace
    form: CanonicalForm = field(repr=False)


@dataclass
class BraceCatalog:
    order: int | None
    entries: list[CatalogEntry]
    provenance: Provenance

    @classmethod
    def from_braces(cls, braces: Iterable[SkewBrace], provenance: Provenance, order: int | None = None) -> BraceCatalog:
        by_form: dict[CanonicalForm, SkewBrace] = {}
        for B in braces:
            by_form.setdefault(canonical_form(B), B)
        entries = [
            CatalogEntry(canonical_id(B, form), canonical_brace(B), form)
            for form, B in sorted(by_form.items(), key=lambda kv: (kv[1].n, kv[0]))
        ]
        return cls(order, entries, provenance)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def braces(self) -> list[SkewBrace]:
        return [e.brace for e in self.entries]

    def save(self, root: str | Path) -> list[Path]:
        written = []
        for e in self.entries:
            d = Path(root) / f"order{e.brace.n:02d}"
            d.mkdir(parents=True, exist_ok=True)
            p = d / f"{e.id}.brace"
            write_brace(e.brace, p)
            written.append(p)
        return written


def build_catalog(n: int) -> BraceCatalog:
    return BraceCatalog.from_braces(enumerate_order(n), Provenance.HOLOMORPH, n)


def load_catalog(path: str | Path) -> BraceCatalog:
    """Read every ``.brace`` file below ``path`` (or ``path`` itself if it is a file)."""
    p = Path(path)
    if p.is_file():
        files = [p]
    elif p.is_dir():
        files = sorted(p.rglob("*.brace"))
    else:
        raise FileNotFoundError(f"no catalog at {p}")
    return BraceCatalog.from_braces((read_brace(f) for f in files), Provenance.FILE)
