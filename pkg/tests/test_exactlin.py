from fractions import Fraction

from hypothesis import given, settings, strategies as st

from affmonoid.exactlin import (
    Lattice,
    det,
    hnf,
    integer_kernel,
    lattice_contains,
    matmul,
    primitive_form,
    quotient,
    saturate,
    snf,
)


def matrices(max_rows=4, max_cols=4, bound=9):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
            min_size=0,
            max_size=max_rows,
        ).map(lambda rows: (rows, n))
    )


def is_hnf(H):
    last = -1
    for row in H:
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        p = nz[0]
        assert p > last
        assert row[p] > 0
        last = p
    return True


def test_hnf_examples():
    assert hnf([[1, 0], [0, 1]], 2) == ([[1, 0], [0, 1]], [[1, 0], [0, 1]])
    H, U = hnf([[2, 4], [1, 3]], 2)
    assert H == [[1, 1], [0, 2]]
    assert matmul(U, [[2, 4], [1, 3]]) == H
    assert hnf([[0, 0]], 2)[0] == [[0, 0]]


def test_snf_examples():
    S, U, V = snf([[2, 4], [1, 3]], 2)
    assert S == [[1, 0], [0, 2]]
    assert matmul(matmul(U, [[2, 4], [1, 3]]), V) == S
    assert snf([[2, 0], [0, 2]], 2)[0] == [[2, 0], [0, 2]]
    assert snf([[1, 0], [0, 1]], 2) == ([[1, 0], [0, 1]],) * 3


def test_lattice_membership():
    L = Lattice.spanned_by([(2, 0), (0, 2)], 2)
    assert lattice_contains(L, (4, 2)) == (2, 1)
    assert lattice_contains(L, (1, 1)) is None
    assert (3, 3) not in Lattice.spanned_by([(2, 2)], 2)


def test_saturate():
    assert saturate(Lattice.spanned_by([(2, 2)], 2)) == Lattice.spanned_by([(1, 1)], 2)
    assert saturate(Lattice.spanned_by([(2, 0), (0, 2)], 2)) == Lattice.standard(2)
    assert saturate(Lattice.spanned_by([(1, 1)], 2)) == Lattice.spanned_by([(1, 1)], 2)


def test_quotient():
    Z2 = Lattice.standard(2)
    q = quotient(Z2, Lattice.spanned_by([(2, 0), (0, 1)], 2))
    assert (q.free_rank, q.invariant_factors) == (0, (2,))
    assert sorted(q.representatives()) == [(0, 0), (1, 0)]
    q = quotient(Z2, Lattice.spanned_by([(1, 0)], 2))
    assert (q.free_rank, q.invariant_factors) == (1, ())
    q = quotient(Z2, Z2)
    assert all(q.is_zero(v) for v in [(3, -1), (0, 5)])


def test_primitive_form():
    assert primitive_form((0, 2), Lattice.standard(2)).ambient() == (0, 1)
    even = Lattice.spanned_by([(1, 1), (2, 0)], 2)
    sigma = primitive_form((0, 1), even)
    assert sigma((1, 1)) == 1
    thin = Lattice.spanned_by([(1, 0), (0, 2)], 2)
    sigma = primitive_form((0, 1), thin)
    assert sigma.coords == (0, 1)
    assert sigma.ambient() == (0, Fraction(1, 2))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_hnf_certificate(data):
    A, n = data
    H, U = hnf(A, n)
    if A:
        assert abs(det(U)) == 1
        assert matmul(U, A, len(A)) == H
    assert is_hnf(H)
    assert hnf(H, n)[0] == H


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_snf_certificate(data):
    A, n = data
    S, U, V = snf(A, n)
    if A:
        assert abs(det(U)) == 1
        assert matmul(matmul(U, A, len(A)), V, n) == S
    assert abs(det(V)) == 1
    diag = [S[i][i] for i in range(min(len(S), n))]
    assert all(S[i][j] == 0 for i in range(len(S)) for j in range(n) if i != j)
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert diag[len(nz):] == [0] * (len(diag) - len(nz))


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_integer_kernel(data):
    A, n = data
    K = integer_kernel(A, n)
    for k in K:
        assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in A)
    assert len(K) == n - (len(Lattice.spanned_by(A, n).basis) if A else 0)
