"""Concrete small groups, built from products and permutation/matrix models."""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Sequence

from .errors import OrderTooLarge
from .groups import FiniteGroup, group_from_table


def from_elements(elements: Sequence[Hashable], mul: Callable) -> FiniteGroup:
    """Table of ``mul`` on ``elements``, whose first entry must be the identity."""
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    G = group_from_table(table)
    assert G.id == 0, "first element must be the identity"
    return G


def generated(gens: Sequence[Hashable], identity: Hashable, mul: Callable) -> FiniteGroup:
    """Close ``gens`` under ``mul``; elements are ordered by discovery."""
    elements = [identity]
    seen = {identity}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
        i += 1
    return from_elements(elements, mul)


def cyclic(n: int) -> FiniteGroup:
    return group_from_table([[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    if not groups:
        return cyclic(1)
    G = groups[0]
    for H in groups[1:]:
        m = H.n
        G = group_from_table(
            [[G.op[a // m][b // m] * m + H.op[a % m][b % m] for b in range(G.n * m)] for a in range(G.n * m)]
        )
    return G


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action: Callable[[int], Sequence[int]]) -> FiniteGroup:
    """``N ⋊ H`` where ``action(h)`` is the automorphism of ``N`` induced by ``h``.

    Element ``(x, h)`` has index ``x * |H| + h``; the product is
    ``(x, h)(y, k) = (x action(h)(y), hk)``.
    """
    m = H.n
    acts = [tuple(action(h)) for h in range(m)]
    size = N.n * m
    table = [
        [N.op[a // m][acts[a % m][b // m]] * m + H.op[a % m][b % m] for b in range(size)]
        for a in range(size)
    ]
    return group_from_table(table)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """``p ∘ q``: apply ``q`` first."""
    return tuple(p[i] for i in q)


def permutation_group(gens: Sequence[Sequence[int]]) -> FiniteGroup:
    gens = [tuple(g) for g in gens]
    ident = tuple(range(len(gens[0])))
    return generated(gens, ident, _compose)


def symmetric(k: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(k)))
    return from_elements(perms, _compose)


def _parity(p: tuple[int, ...]) -> int:
    seen, sign = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign ^= (length - 1) & 1
    return sign


def alternating(k: int) -> FiniteGroup:
    perms = sorted(p for p in itertools.permutations(range(k)) if _parity(p) == 0)
    return from_elements(perms, _compose)


def _power_map(n: int, r: int) -> Callable[[int], list[int]]:
    """Action of ``C_k`` on ``C_n`` where the generator raises to the ``r``-th power."""

    def act(h: int) -> list[int]:
        f = pow(r, h, n) if n > 1 else 0
        return [(x * f) % n for x in range(n)]

    return act


def cyclic_extension(n: int, k: int, r: int) -> FiniteGroup:
    """``C_n ⋊ C_k`` with the generator of ``C_k`` acting as ``x -> r x``."""
    return semidirect_product(cyclic(n), cyclic(k), _power_map(n, r))


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group with ``order`` elements."""
    n = order // 2
    return cyclic_extension(n, 2, n - 1)


def dicyclic(order: int) -> FiniteGroup:
    """``<a, x | a^{2m} = 1, x^2 = a^m, x a x^-1 = a^-1>`` with ``order = 4m``."""
    m = order // 4
    n = 2 * m
    # element (i, j) is a^i x^j with j in {0, 1}
    elements = [(i, j) for j in range(2) for i in range(n)]

    def mul(p, q):
        (i, j), (k, l) = p, q
        if j == 0:
            return ((i + k) % n, l)
        # x a^k = a^-k x
        if l == 0:
            return ((i - k) % n, 1)
        return ((i - k + m) % n, 0)

    return from_elements(elements, mul)


def quaternion() -> FiniteGroup:
    return dicyclic(8)


def _gauss_mat_mul(p, q):
    # 2x2 matrices over Z[i]; entries stored as (re, im)
    def cm(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def ca(a, b):
        return (a[0] + b[0], a[1] + b[1])

    (a, b), (c, d) = p
    (e, f), (g, h) = q
    return (
        (ca(cm(a, e), cm(b, g)), ca(cm(a, f), cm(b, h))),
        (ca(cm(c, e), cm(d, g)), ca(cm(c, f), cm(d, h))),
    )


def pauli() -> FiniteGroup:
    """The group of order 16 generated by the Pauli matrices (central product ``C4 ∘ D8``)."""
    one, zero, i = (1, 0), (0, 0), (0, 1)
    ident = ((one, zero), (zero, one))
    X = ((zero, one), (one, zero))
    Z = ((one, zero), (zero, (-1, 0)))
    iI = ((i, zero), (zero, i))
    return generated([X, Z, iI], ident, _gauss_mat_mul)


def _swap_pair_action(h: int) -> list[int]:
    # C4 acting on C2 x C2 (index 2a + b) by swapping the factors through C4 -> C2
    if h % 2 == 0:
        return [0, 1, 2, 3]
    return [0, 2, 1, 3]


def _named() -> dict[str, Callable[[], FiniteGroup]]:
    C = cyclic
    dp = direct_product
    return {
        "C1": lambda: C(1),
        "C2": lambda: C(2),
        "C3": lambda: C(3),
        "C4": lambda: C(4),
        "C2xC2": lambda: dp(C(2), C(2)),
        "C5": lambda: C(5),
        "C6": lambda: C(6),
        "S3": lambda: symmetric(3),
        "C7": lambda: C(7),
        "C8": lambda: C(8),
        "C4xC2": lambda: dp(C(4), C(2)),
        "C2xC2xC2": lambda: dp(C(2), C(2), C(2)),
        "D8": lambda: dihedral(8),
        "Q8": quaternion,
        "C9": lambda: C(9),
        "C3xC3": lambda: dp(C(3), C(3)),
        "C10": lambda: C(10),
        "D10": lambda: dihedral(10),
        "C11": lambda: C(11),
        "C12": lambda: C(12),
        "C2xC6": lambda: dp(C(2), C(6)),
        "A4": lambda: alternating(4),
        "D12": lambda: dihedral(12),
        "Dic12": lambda: dicyclic(12),
        "C13": lambda: C(13),
        "C14": lambda: C(14),
        "D14": lambda: dihedral(14),
        "C15": lambda: C(15),
        "C16": lambda: C(16),
        "C4xC4": lambda: dp(C(4), C(4)),
        "C2^2:C4": lambda: semidirect_product(dp(C(2), C(2)), C(4), _swap_pair_action),
        "C4:C4": lambda: cyclic_extension(4, 4, 3),
        "C8xC2": lambda: dp(C(8), C(2)),
        "M16": lambda: cyclic_extension(8, 2, 5),
        "D16": lambda: dihedral(16),
        "SD16": lambda: cyclic_extension(8, 2, 3),
        "Q16": lambda: dicyclic(16),
        "C4xC2xC2": lambda: dp(C(4), C(2), C(2)),
        "C2xD8": lambda: dp(C(2), dihedral(8)),
        "C2xQ8": lambda: dp(C(2), quaternion()),
        "Pauli": pauli,
        "C2^4": lambda: dp(C(2), C(2), C(2), C(2)),
        # used for the order-24 example only; order 24 has no complete list here
        "C2xC2xS3": lambda: dp(C(2), C(2), symmetric(3)),
        "C2xA4": lambda: dp(C(2), alternating(4)),
    }


NAMED = _named()

# number of isomorphism classes of groups of each order
GROUP_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}

MAX_COMPLETE_ORDER = 16


def named_group(name: str) -> FiniteGroup:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(NAMED)}") from None


def groups_of_order(n: int) -> list[tuple[str, FiniteGroup]]:
    """One representative per isomorphism class, for ``n <= 16``."""
    if n > MAX_COMPLETE_ORDER:
        raise OrderTooLarge(f"no complete list of groups of order {n}; pass an explicit additive group")
    out = []
    for name, make in NAMED.items():
        if name in ("C2xC2xS3", "C2xA4"):
            continue
        G = make()
        if G.n == n:
            out.append((name, G))
    return out
