"""The set-theoretic solution of the Yang–Baxter equation attached to a skew brace."""

from __future__ import annotations

from .brace import SkewBrace


def yb_map(B: SkewBrace) -> list[list[tuple[int, int]]]:
    """``r[x][y] = (lambda_x(y), lambda_x(y)^-1 x y)``, products taken in ``(B, ·)``."""
    M, inv, L = B.mul.op, B.mul.inv, B.lam
    r = []
    for x in range(B.n):
        row = []
        for y in range(B.n):
            u = L[x][y]
            row.append((u, M[inv[u]][M[x][y]]))
        r.append(row)
    return r


def verify_ybe(B: SkewBrace) -> bool:
    """Bijective, non-degenerate and satisfying the braid relation on all triples."""
    n = B.n
    r = yb_map(B)
    if len({r[x][y] for x in range(n) for y in range(n)}) != n * n:
        return False
    for x in range(n):
        # y -> first(r(x, y)) and z -> second(r(z, x)) must be permutations
        if len({r[x][y][0] for y in range(n)}) != n:
            return False
        if len({r[z][x][1] for z in range(n)}) != n:
            return False
    for x in range(n):
        for y in range(n):
            a, b = r[x][y]
            for z in range(n):
                # (r x id)(id x r)(r x id)
                b2, c2 = r[b][z]
                a3, b3 = r[a][b2]
                left = (a3, b3, c2)
                # (id x r)(r x id)(id x r)
                y1, z1 = r[y][z]
                x2, y2 = r[x][y1]
                y3, z3 = r[y2][z1]
                if left != (x2, y3, z3):
                    return False
    return True
