from skewbrace.brace import brace_validate, trivial_brace
from skewbrace.library import named_group
from skewbrace.ybe import verify_ybe, yb_map


def test_trivial_abelian_brace_gives_flip():
    B = trivial_brace(named_group("C4xC2"))
    r = yb_map(B)
    assert all(r[x][y] == (y, x) for x in range(B.n) for y in range(B.n))


def test_trivial_nonabelian_brace_gives_conjugation():
    B = trivial_brace(named_group("S3"))
    M, inv = B.mul.op, B.mul.inv
    r = yb_map(B)
    for x in range(B.n):
        for y in range(B.n):
            assert r[x][y] == (y, M[M[inv[y]][x]][y])


def test_identity_pair():
    for B in (trivial_brace(named_group("C1")), trivial_brace(named_group("Q8"))):
        assert yb_map(B)[0][0] == (0, 0)


def test_catalog_order8(braces8):
    assert all(verify_ybe(B) for B in braces8)


def test_nontrivial_Z4_brace():
    Z4 = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    mul = [[(a + (b if a % 2 == 0 else -b)) % 4 for b in range(4)] for a in range(4)]
    B = brace_validate(Z4, mul)
    assert verify_ybe(B)
    r = yb_map(B)
    # lambda_1 is negation, so r(1, 1) has first coordinate 3
    assert r[1][1][0] == 3
