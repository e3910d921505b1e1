import random

import pytest

from toriclab.lattice import (
    AbelianGroupStructure,
    IntMatrix,
    cokernel_structure,
    det,
    hermite_normal_form,
    primitive,
    smith_normal_form,
    solve_integer,
    solve_rational,
)

from oracles import minor_gcds


def snf_checks(M):
    U, D, V = smith_normal_form(M)
    assert (U @ M @ V).entries == D.entries
    assert abs(det(U)) == 1
    assert abs(det(V)) == 1
    assert D.is_diagonal()
    diag = [d for d in D.diagonal() if d != 0]
    assert all(d > 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0
    return D


def test_snf_identity():
    M = IntMatrix.identity(2)
    U, D, V = smith_normal_form(M)
    assert D.entries == M.entries
    assert U.entries == M.entries
    assert V.entries == M.entries


def test_snf_diag23():
    # invariant factors by the gcd-of-minors rule: d1 = 1, d1*d2 = 6
    M = IntMatrix.from_rows([[2, 0], [0, 3]])
    D = snf_checks(M)
    assert D.diagonal() == (1, 6)


def test_snf_zero_matrix():
    M = IntMatrix.zero(2, 3)
    D = snf_checks(M)
    assert all(d == 0 for d in D.diagonal())


def test_snf_invariant_factors_match_minor_gcds_randomized():
    rng = random.Random(20240811)
    for _ in range(200):
        rows = [[rng.randrange(-9, 10) for _ in range(3)] for _ in range(3)]
        M = IntMatrix.from_rows(rows)
        D = snf_checks(M)
        gcds = minor_gcds(rows)
        prod = 1
        for k, d in enumerate(D.diagonal()):
            prod *= d
            assert prod == gcds[k]


def test_hnf_identity():
    M = IntMatrix.identity(3)
    H, U = hermite_normal_form(M)
    assert H.entries == M.entries


def test_hnf_known_matrix():
    # row-reduction over Z: [[2,4],[1,3]] has echelon form [[1,1],[0,2]]
    M = IntMatrix.from_rows([[2, 4], [1, 3]])
    H, U = hermite_normal_form(M)
    assert (U @ M).entries == H.entries
    assert abs(det(U)) == 1
    assert H.entries == ((1, 1), (0, 2))


def test_hnf_zero_row():
    M = IntMatrix.from_rows([[0, 0]])
    H, _ = hermite_normal_form(M)
    assert H.entries == ((0, 0),)


def test_hnf_shape_properties_randomized():
    rng = random.Random(7)
    for _ in range(100):
        rows = [[rng.randrange(-9, 10) for _ in range(4)] for _ in range(3)]
        M = IntMatrix.from_rows(rows)
        H, U = hermite_normal_form(M)
        assert (U @ M).entries == H.entries
        assert abs(det(U)) == 1
        # echelon with positive pivots, reduced entries above
        pivots = []
        for i, row in enumerate(H.entries):
            nz = next((j for j, x in enumerate(row) if x != 0), None)
            if nz is None:
                assert all(not any(r) for r in H.entries[i:])
                break
            pivots.append((i, nz))
        for i, j in pivots:
            assert H.entries[i][j] > 0
            for above in range(i):
                assert 0 <= H.entries[above][j] < H.entries[i][j]
        cols = [j for _, j in pivots]
        assert cols == sorted(cols)


def test_primitive():
    assert primitive((2, 4)) == (1, 2)
    assert primitive((1, 0, 0)) == (1, 0, 0)
    assert primitive((-3, -6, 9)) == (-1, -2, 3)


def test_primitive_zero_vector():
    with pytest.raises(ValueError, match="zero vector"):
        primitive((0, 0))


def test_primitive_idempotent_and_scale_invariant():
    rng = random.Random(3)
    for _ in range(100):
        v = tuple(rng.randrange(-9, 10) for _ in range(3))
        if all(x == 0 for x in v):
            continue
        p = primitive(v)
        assert primitive(p) == p
        k = rng.randrange(1, 5)
        assert primitive(tuple(k * x for x in v)) == p
        assert primitive(tuple(-k * x for x in v)) == tuple(-x for x in p)


def test_cokernel_p2_rays():
    M = IntMatrix.from_rows([(1, 0), (0, 1), (-1, -1)])
    assert cokernel_structure(M) == AbelianGroupStructure(1, ())


def test_cokernel_identity():
    assert cokernel_structure(IntMatrix.identity(4)) == AbelianGroupStructure(0, ())


def test_cokernel_z2():
    assert cokernel_structure(IntMatrix.from_rows([[2]])) == AbelianGroupStructure(0, (2,))


def test_cokernel_invariant_under_unimodular_changes():
    rng = random.Random(99)
    base = IntMatrix.from_rows([[2, 0], [0, 6], [4, 2]])
    reference = cokernel_structure(base)
    elementary = [
        IntMatrix.from_rows([[1, 0, 0], [1, 1, 0], [0, 0, 1]]),
        IntMatrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
        IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, -1, 1]]),
    ]
    col_elementary = [
        IntMatrix.from_rows([[1, 1], [0, 1]]),
        IntMatrix.from_rows([[0, 1], [1, 0]]),
        IntMatrix.from_rows([[1, 0], [-1, 1]]),
    ]
    for _ in range(50):
        M = base
        for _ in range(rng.randrange(1, 5)):
            M = rng.choice(elementary) @ M
            M = M @ rng.choice(col_elementary)
        assert cokernel_structure(M) == reference


def test_group_structure_rejects_bad_chain():
    with pytest.raises(ValueError):
        AbelianGroupStructure(0, (4, 6))
    with pytest.raises(ValueError):
        AbelianGroupStructure(0, (1,))


def test_solvers():
    A = IntMatrix.from_rows([(1, 0), (1, 2)])
    # (1, 2): forces x = (1, 1/2), rational but not integral
    assert solve_rational(A, [1, 2]) is not None
    assert solve_integer(A, [1, 2]) is None
    sol = solve_integer(A, [1, 3])
    assert sol is not None and A.apply(sol) == (1, 3)
    # inconsistent system
    B = IntMatrix.from_rows([(1, 0), (2, 0)])
    assert solve_rational(B, [1, 3]) is None
    assert solve_integer(B, [1, 3]) is None


def test_solve_integer_consistency_randomized():
    rng = random.Random(11)
    for _ in range(100):
        rows = [[rng.randrange(-5, 6) for _ in range(3)] for _ in range(2)]
        A = IntMatrix.from_rows(rows)
        x = tuple(rng.randrange(-4, 5) for _ in range(3))
        b = A.apply(x)
        sol = solve_integer(A, b)
        assert sol is not None
        assert A.apply(sol) == b
