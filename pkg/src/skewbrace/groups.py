"""Finite groups given by explicit operation tables.

Elements are the integers ``0..n-1``.  Subsets are carried around as
:class:`ElementSet` values, which are sorted, duplicate free and remember the
size of the ambient carrier so that sets from different structures are never
mixed silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    OrderTooLarge,
)

Table = Sequence[Sequence[int]]


@dataclass(frozen=True)
class ElementSet:
    members: tuple[int, ...]
    universe_n: int

    def __post_init__(self):
        prev = -1
        for m in self.members:
            if not prev < m < self.universe_n:
                raise ValueError(f"members must be strictly increasing in 0..{self.universe_n - 1}: {self.members}")
            prev = m

    @classmethod
    def of(cls, elements: Iterable[int], universe_n: int) -> ElementSet:
        return cls(tuple(sorted(set(elements))), universe_n)

    @classmethod
    def full(cls, n: int) -> ElementSet:
        return cls(tuple(range(n)), n)

    @classmethod
    def zero(cls, n: int) -> ElementSet:
        return cls((0,), n)

    @cached_property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.as_set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def _check(self, other: ElementSet):
        if self.universe_n != other.universe_n:
            raise ValueError("element sets belong to carriers of different sizes")

    def __le__(self, other: ElementSet) -> bool:
        self._check(other)
        return self.as_set <= other.as_set

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet.of(self.as_set & other.as_set, self.universe_n)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet.of(self.as_set | other.as_set, self.universe_n)

    def is_full(self) -> bool:
        return len(self.members) == self.universe_n

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class FiniteGroup:
    """A validated group table.  Build through :func:`group_from_table`."""

    n: int
    op: tuple[tuple[int, ...], ...]
    id: int
    inv: tuple[int, ...]

    def __call__(self, a: int, b: int) -> int:
        return self.op[a][b]

    @property
    def carrier(self) -> ElementSet:
        return ElementSet.full(self.n)

    def set(self, elements: Iterable[int]) -> ElementSet:
        return ElementSet.of(elements, self.n)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = []
        for x in range(self.n):
            k, y = 1, x
            while y != self.id:
                y = self.op[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    def commutator(self, a: int, b: int) -> int:
        """Return ``a b a^-1 b^-1``."""
        op, inv = self.op, self.inv
        return op[op[op[a][b]][inv[a]]][inv[b]]

    def conjugate(self, g: int, x: int) -> int:
        """Return ``g x g^-1``."""
        return self.op[self.op[g][x]][self.inv[g]]


def _as_rows(table: Table) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"table is not square: row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise ValueError(f"entry ({i}, {j}) = {v} outside 0..{n - 1}")
    return rows


def _first_latin_violation(rows) -> tuple[int, int] | None:
    n = len(rows)
    for i, row in enumerate(rows):
        seen = set()
        for j, v in enumerate(row):
            if v in seen:
                return i, j
            seen.add(v)
    for j in range(n):
        seen = set()
        for i in range(n):
            if rows[i][j] in seen:
                return i, j
            seen.add(rows[i][j])
    return None


def first_associativity_violation(rows) -> tuple[int, int, int] | None:
    """Exhaustive n^3 associativity check, vectorised."""
    a = np.asarray(rows, dtype=np.int64)
    if a.size == 0:
        return None
    bad = np.argwhere(a[a, :] != a[:, a])
    if len(bad):
        x, y, z = (int(v) for v in bad[0])
        return x, y, z
    return None


def group_from_table(table: Table) -> FiniteGroup:
    """Validate ``table`` as a group and return it.

    The checks run in the order: Latin square, identity, inverses,
    associativity.  Each failure names the first offending cell or triple.
    """
    rows = _as_rows(table)
    n = len(rows)
    if n == 0:
        raise NoIdentity()
    cell = _first_latin_violation(rows)
    if cell is not None:
        raise NotLatinSquare(*cell)
    ident = None
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            ident = e
            break
    if ident is None:
        raise NoIdentity()
    inv = []
    for x in range(n):
        y = rows[x].index(ident)
        if rows[y][x] != ident:
            raise NoInverse(x)
        inv.append(y)
    triple = first_associativity_violation(rows)
    if triple is not None:
        raise NotAssociative(*triple)
    return FiniteGroup(n, rows, ident, tuple(inv))


def _trusted_group(rows) -> FiniteGroup:
    """Wrap a table already known to be a group with identity 0."""
    rows = tuple(tuple(r) for r in rows)
    inv = tuple(r.index(0) for r in rows)
    return FiniteGroup(len(rows), rows, 0, inv)


def relabel(G: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """Return the table obtained by renaming element ``x`` to ``perm[x]``."""
    n = G.n
    back = [0] * n
    for x, y in enumerate(perm):
        back[y] = x
    rows = tuple(tuple(perm[G.op[back[i]][back[j]]] for j in range(n)) for i in range(n))
    return FiniteGroup(n, rows, perm[G.id], tuple(perm[G.inv[back[i]]] for i in range(n)))


def swap_to_zero(n: int, x: int) -> list[int]:
    """The transposition of 0 and ``x`` as a relabeling."""
    perm = list(range(n))
    perm[0], perm[x] = x, 0
    return perm


def with_identity_zero(G: FiniteGroup) -> FiniteGroup:
    if G.id == 0:
        return G
    return relabel(G, swap_to_zero(G.n, G.id))


# -- subgroups ---------------------------------------------------------------


def _closure(G: FiniteGroup, gens: Iterable[int]) -> set[int]:
    gens = set(gens)
    gens = sorted((gens | {G.inv[g] for g in gens}) - {G.id})
    span = {G.id}
    work = [G.id]
    op = G.op
    while work:
        x = work.pop()
        row = op[x]
        for g in gens:
            y = row[g]
            if y not in span:
                span.add(y)
                work.append(y)
    return span


def subgroup_generated(G: FiniteGroup, X: Iterable[int]) -> ElementSet:
    return G.set(_closure(G, list(X)))


def is_subgroup(G: FiniteGroup, S: Iterable[int]) -> bool:
    s = set(S)
    if G.id not in s:
        return False
    op = G.op
    return all(op[a][b] in s for a in s for b in s)


def commutator_subgroup(G: FiniteGroup, X: Iterable[int], Y: Iterable[int]) -> ElementSet:
    Y = list(Y)
    return G.set(_closure(G, {G.commutator(x, y) for x in X for y in Y}))


def derived_subgroup(G: FiniteGroup) -> ElementSet:
    return commutator_subgroup(G, range(G.n), range(G.n))


def normal_closure(G: FiniteGroup, X: Iterable[int]) -> ElementSet:
    span = _closure(G, list(X))
    while True:
        conj = {G.conjugate(g, s) for g in range(G.n) for s in span}
        if conj <= span:
            return G.set(span)
        span = _closure(G, span | conj)


def centralizer(G: FiniteGroup, X: Iterable[int]) -> ElementSet:
    X = list(X)
    op = G.op
    return G.set(g for g in range(G.n) if all(op[g][x] == op[x][g] for x in X))


def center(G: FiniteGroup) -> ElementSet:
    return centralizer(G, range(G.n))


def is_abelian(G: FiniteGroup, S: Iterable[int] | None = None) -> bool:
    elems = list(range(G.n)) if S is None else list(S)
    op = G.op
    return all(op[a][b] == op[b][a] for a, b in itertools.combinations(elems, 2))


def is_normal(G: FiniteGroup, L: Iterable[int]) -> bool:
    s = set(L)
    if not is_subgroup(G, s):
        raise NotASubgroup(f"{sorted(s)} is not a subgroup")
    return all(G.conjugate(g, x) in s for g in range(G.n) for x in s)


def set_product(G: FiniteGroup, X: Iterable[int], Y: Iterable[int]) -> ElementSet:
    """The literal product set ``XY``, no closure applied."""
    Y = list(Y)
    op = G.op
    return G.set(op[x][y] for x in X for y in Y)


def all_subgroups(G: FiniteGroup) -> list[ElementSet]:
    """Every subgroup, sorted by (size, members).

    Cyclic subgroups are joined pairwise until no new subgroup appears; meant
    for the small carriers of braces, not for large trifactorised groups.
    """
    cyclic = {frozenset(_closure(G, [x])) for x in range(G.n)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for s in frontier:
            for c in cyclic:
                if c <= s:
                    continue
                j = frozenset(_closure(G, s | c))
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return sorted((G.set(s) for s in found), key=lambda e: (len(e), e.members))


def generating_set(G: FiniteGroup) -> list[int]:
    """A small generating set found greedily by incremental closure."""
    gens: list[int] = []
    span = {G.id}
    while len(span) < G.n:
        best, best_span = None, None
        for x in range(G.n):
            if x in span:
                continue
            s = _closure(G, gens + [x])
            if best_span is None or len(s) > len(best_span):
                best, best_span = x, s
        gens.append(best)
        span = best_span
    return gens


# -- homomorphisms --------------------------------------------------------------


def isomorphisms(G1: FiniteGroup, G2: FiniteGroup) -> Iterator[tuple[int, ...]]:
    """Yield every isomorphism ``G1 -> G2`` as an image tuple.

    Backtracks over images of a greedy generating set of ``G1``; a partial map
    is extended along right multiplication by the chosen generators, so any
    consistent extension is a homomorphism on the generated subgroup.  Each
    result is re-checked on the full table before it is yielded.
    """
    n = G1.n
    if G2.n != n or sorted(G1.orders) != sorted(G2.orders):
        return
    gens = generating_set(G1)
    op1, op2 = G1.op, G2.op
    o1, o2 = G1.orders, G2.orders
    phi = [-1] * n
    phi[G1.id] = G2.id
    used = {G2.id}
    pairs: list[tuple[int, int]] = []

    def extend() -> list[int] | None:
        added: list[int] = []
        work = [x for x in range(n) if phi[x] >= 0]
        while work:
            x = work.pop()
            px = phi[x]
            for g, h in pairs:
                y = op1[x][g]
                im = op2[px][h]
                if phi[y] < 0:
                    if im in used:
                        return _undo(added)
                    phi[y] = im
                    used.add(im)
                    added.append(y)
                    work.append(y)
                elif phi[y] != im:
                    return _undo(added)
        return added

    def _undo(added):
        for y in added:
            used.discard(phi[y])
            phi[y] = -1
        return None

    def search(i: int):
        if i == len(gens):
            yield tuple(phi)
            return
        g = gens[i]
        for h in range(G2.n):
            if h in used or o2[h] != o1[g]:
                continue
            pairs.append((g, h))
            added = extend()
            if added is not None:
                yield from search(i + 1)
                _undo(added)
            pairs.pop()

    for cand in search(0):
        if all(cand[op1[a][b]] == op2[cand[a]][cand[b]] for a in range(n) for b in range(n)):
            yield cand


def is_isomorphic_groups(G1: FiniteGroup, G2: FiniteGroup) -> bool:
    return next(isomorphisms(G1, G2), None) is not None


def automorphisms(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms, sorted; the identity map comes first."""
    return sorted(isomorphisms(G, G))


# -- holomorph and regular subgroups --------------------------------------------


class Holomorph:
    """The holomorph ``G ⋊ Aut(G)``.

    Element ``(g, phi)`` has index ``g * m + a`` where ``a`` indexes
    ``phi`` in :attr:`auts` and ``m = |Aut(G)|``.  The product is
    ``(g, phi)(h, psi) = (g phi(h), phi psi)`` and the natural action on the
    carrier of ``G`` is ``(g, phi) . x = g phi(x)``.  The full operation
    table is only materialised on request through :attr:`group`.
    """

    def __init__(self, base: FiniteGroup, auts: Sequence[tuple[int, ...]] | None = None):
        self.base = with_identity_zero(base)
        if auts is None:
            auts = automorphisms(self.base)
        self.auts = tuple(auts)
        self.aut_index = {a: i for i, a in enumerate(self.auts)}
        self.m = len(self.auts)
        self._comp: dict[int, np.ndarray] = {}
        n = self.base.n
        dt = np.uint8 if n <= 256 else np.uint16
        self._P = np.asarray(self.auts, dtype=dt).reshape(self.m, n)
        self._Pinv = np.argsort(self._P, axis=1).astype(dt)
        keys = self._perm_keys(self._P)
        self._sort = np.argsort(keys, kind="stable")
        self._keys = keys[self._sort]

    @staticmethod
    def _perm_keys(rows: np.ndarray) -> np.ndarray:
        rows = np.ascontiguousarray(rows.astype(rows.dtype.newbyteorder(">")))
        return rows.view(f"V{rows.shape[-1] * rows.dtype.itemsize}")[..., 0]

    def perm_indices(self, rows: np.ndarray) -> np.ndarray:
        """Indices in :attr:`auts` of the automorphisms given as rows of images."""
        return self._sort[np.searchsorted(self._keys, self._perm_keys(rows.astype(self._P.dtype)))]

    @property
    def order(self) -> int:
        return self.base.n * self.m

    def index(self, g: int, a: int) -> int:
        return g * self.m + a

    def pair(self, i: int) -> tuple[int, int]:
        return divmod(i, self.m)

    def compose_row(self, a: int) -> np.ndarray:
        """``row[b]`` is the index of ``auts[a] ∘ auts[b]``."""
        row = self._comp.get(a)
        if row is None:
            row = self.perm_indices(self._P[a][self._P])
            self._comp[a] = row
        return row

    def conjugates(self, a: int) -> np.ndarray:
        """``row[b]`` is the index of ``auts[a] ∘ auts[b] ∘ auts[a]^-1``."""
        P = self._P
        return self.perm_indices(P[a][P[:, self._Pinv[a]]])

    def conjugate_lambda(self, a: int, lam: Sequence[int]) -> tuple[int, ...]:
        """The lambda map of the regular subgroup conjugated by ``auts[a]``."""
        conj = self.conjugates(a)
        pa = self.auts[a]
        out = [0] * len(lam)
        for x, b in enumerate(lam):
            out[pa[x]] = int(conj[b])
        return tuple(out)

    def multiply(self, i: int, j: int) -> int:
        g, a = self.pair(i)
        h, b = self.pair(j)
        return self.index(self.base.op[g][self.auts[a][h]], int(self.compose_row(a)[b]))

    def act(self, i: int, x: int) -> int:
        g, a = self.pair(i)
        return self.base.op[g][self.auts[a][x]]

    @cached_property
    def group(self) -> FiniteGroup:
        N = self.order
        rows = [[self.multiply(i, j) for j in range(N)] for i in range(N)]
        return _trusted_group(rows)


def holomorph(G: FiniteGroup) -> Holomorph:
    return Holomorph(G)


def regular_lambda_maps(H: Holomorph, up_to_conjugacy: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield ``lam`` with ``{(a, auts[lam[a]])}`` a regular subgroup of ``H``.

    A regular subgroup contains exactly one element over each translation, so
    it is a map ``a -> lam[a]``.  The search fixes images for the smallest
    uncovered element and closes the partial subgroup under right
    multiplication by the chosen generators; two automorphisms over one
    translation prune the branch.  Each regular subgroup is reached along
    exactly one path.

    With ``up_to_conjugacy`` at least one member of every Aut-conjugacy class
    is yielded, but not every member.  Automorphisms fixing the chosen
    generators fix the partial subgroup pointwise, so at each branch only one
    automorphism per class under conjugation by those that also fix the new
    translation is tried.
    """
    G = H.base
    n, m = G.n, H.m
    op, auts = G.op, H.auts
    lam = [-1] * n
    lam[0] = 0
    gens: list[tuple[int, int]] = []

    def extend() -> list[int] | None:
        added: list[int] = []
        work = [x for x in range(n) if lam[x] >= 0]
        while work:
            x = work.pop()
            ax = lam[x]
            px = auts[ax]
            crow = H.compose_row(ax)
            for g, b in gens:
                y = op[x][px[g]]
                c = int(crow[b])
                if lam[y] < 0:
                    lam[y] = c
                    added.append(y)
                    work.append(y)
                elif lam[y] != c:
                    for z in added:
                        lam[z] = -1
                    return None
        return added

    def choices(x: int, stab: list[int] | None) -> Iterator[tuple[int, list[int] | None]]:
        if stab is None:
            for b in range(m):
                yield b, None
            return
        fix_x = [a for a in stab if auts[a][x] == x]
        if len(fix_x) == 1:
            for b in range(m):
                yield b, fix_x
            return
        conj = np.stack([H.conjugates(a) for a in fix_x])
        done = np.zeros(m, dtype=bool)
        for b in range(m):
            if done[b]:
                continue
            done[conj[:, b]] = True
            yield b, [a for a, c in zip(fix_x, conj[:, b]) if c == b]

    def search(stab: list[int] | None):
        try:
            x = lam.index(-1)
        except ValueError:
            yield tuple(lam)
            return
        for b, sub in choices(x, stab):
            gens.append((x, b))
            added = extend()
            if added is not None:
                yield from search(sub)
                for z in added:
                    lam[z] = -1
            gens.pop()

    yield from search(list(range(m)) if up_to_conjugacy else None)


def regular_subgroups(H: Holomorph) -> list[ElementSet]:
    """All regular subgroups of the holomorph, as sets of holomorph indices."""
    N = H.order
    return sorted(
        (ElementSet.of((H.index(a, b) for a, b in enumerate(lam)), N) for lam in regular_lambda_maps(H)),
        key=lambda e: e.members,
    )


# -- brute-force oracle --------------------------------------------------------


def enumerate_groups_bruteforce(n: int) -> list[FiniteGroup]:
    """Every group table on ``0..n-1`` with identity 0 (labeled, not up to isomorphism).

    Row 0 and column 0 are fixed by the identity; the remaining cells are
    filled row by row as a Latin square, and associativity is checked on all
    triples whose entries are known whenever a row is completed.
    """
    if n > 6:
        raise OrderTooLarge(f"brute-force group enumeration is capped at n = 6, got {n}")
    if n < 1:
        return []
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = x
        t[x][0] = x
    col_used = [{x} for x in range(n)]
    out: list[FiniteGroup] = []

    def assoc_ok(rmax: int) -> bool:
        for a in range(1, rmax + 1):
            for b in range(1, n):
                ab = t[a][b]
                if ab > rmax:
                    continue
                for c in range(1, n):
                    bc = t[b][c] if b <= rmax else -1
                    if bc < 0:
                        continue
                    if t[ab][c] != t[a][bc]:
                        return False
        return True

    def fill(i: int, j: int, row_used: set[int]):
        if i == n:
            out.append(_trusted_group(t))
            return
        if j == n:
            if assoc_ok(i):
                fill(i + 1, 1, {i + 1} if i + 1 < n else set())
            return
        for v in range(n):
            if v in row_used or v in col_used[j]:
                continue
            t[i][j] = v
            row_used.add(v)
            col_used[j].add(v)
            fill(i, j + 1, row_used)
            row_used.discard(v)
            col_used[j].discard(v)
        t[i][j] = -1

    if n == 1:
        return [_trusted_group(t)]
    fill(1, 1, {1})
    return out
