"""Exact integer linear algebra on Python ints.

Matrices are lists of rows; vectors are tuples.  Nothing here ever touches
floating point, so entries may grow without bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence

Vector = tuple[int, ...]
IntMatrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def content(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries."""
    g = content(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: int, v: Sequence[int]) -> Vector:
    return tuple(c * a for a in v)


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], inner: int | None = None) -> list[list]:
    Bt = transpose(B)
    return [[dot(row, col) for col in Bt] for row in A]


def vecmat(v: Sequence, A: Sequence[Sequence], ncols: int) -> tuple:
    """Row vector times matrix."""
    out = [0] * ncols
    for c, row in zip(v, A):
        if c:
            for j, a in enumerate(row):
                out[j] += c * a
    return tuple(out)


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rref(A: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    pivots: list[int] = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    return len(rref(A)[1])


def solve_rational(B: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...] | None:
    """Find c with c . B == v (B given by rows), or None if v is not in the row span."""
    k = len(B)
    if k == 0:
        return () if all(x == 0 for x in v) else None
    # augmented system B^T c = v
    aug = [[Fraction(B[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(len(v))]
    R, piv = rref(aug)
    if k in piv:
        return None
    c = [Fraction(0)] * k
    for row, p in zip(R, piv):
        c[p] = row[k]
    return tuple(c)


def inverse(A: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(A)
    aug = [list(A[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def unimodular_inverse(A: Sequence[Sequence[int]]) -> IntMatrix:
    inv = inverse(A)
    out = [[int(x) for x in row] for row in inv]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return out


def hnf(A: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with H = U*A, U unimodular, H upper echelon with positive
    pivots, entries above each pivot reduced into [0, pivot), zero rows last.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    H = [list(r) for r in A]
    U = identity(m)
    row = 0
    for col in range(n):
        if row == m:
            break
        for i in range(row + 1, m):
            b = H[i][col]
            if b == 0:
                continue
            a = H[row][col]
            g, x, y = xgcd(a, b)
            pa, pb = a // g, b // g
            Hr, Hi, Ur, Ui = H[row], H[i], U[row], U[i]
            H[row] = [x * s + y * t for s, t in zip(Hr, Hi)]
            H[i] = [pa * t - pb * s for s, t in zip(Hr, Hi)]
            U[row] = [x * s + y * t for s, t in zip(Ur, Ui)]
            U[i] = [pa * t - pb * s for s, t in zip(Ur, Ui)]
        p = H[row][col]
        if p == 0:
            continue
        if p < 0:
            H[row] = [-x for x in H[row]]
            U[row] = [-x for x in U[row]]
            p = -p
        for i in range(row):
            q = H[i][col] // p
            if q:
                H[i] = [s - q * t for s, t in zip(H[i], H[row])]
                U[i] = [s - q * t for s, t in zip(U[i], U[row])]
        row += 1
    return H, U


def snf(A: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns (S, U, V) with S = U*A*V diagonal, d1 | d2 | ..."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    S = [list(r) for r in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for M in (S, V):
            for r in M:
                r[dst] += q * r[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return S, U, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = S[i][t] // p
                if q:
                    add_row(i, t, -q)
                dirty |= S[i][t] != 0
            for j in range(t + 1, n):
                q = S[t][j] // p
                if q:
                    add_col(j, t, -q)
                dirty |= S[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return S, U, V


def integer_kernel(A: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Basis (rows, in Hermite form) of {x in Z^ncols : A x = 0}."""
    if not A:
        return identity(ncols)
    H, U = hnf(transpose(A), len(A))
    zero_from = next((i for i, r in enumerate(H) if not any(r)), len(H))
    K = U[zero_from:]
    if not K:
        return []
    Hk, _ = hnf(K)
    return [r for r in Hk if any(r)]


# --------------------------------------------------------------------------
# Lattices


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^n stored by its Hermite basis (so equal lattices compare equal)."""

    ambient_rank: int
    basis: tuple[Vector, ...]
    _pivots: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @classmethod
    def spanned_by(cls, vectors: Iterable[Sequence[int]], ambient_rank: int) -> "Lattice":
        rows = [list(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_rank:
                raise ValueError(f"vector {r} does not have {ambient_rank} entries")
        H, _ = hnf(rows, ambient_rank)
        basis = tuple(tuple(r) for r in H if any(r))
        pivots = tuple(next(j for j, x in enumerate(r) if x) for r in basis)
        return cls(ambient_rank, basis, pivots)

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        return cls.spanned_by(identity(n), n)

    @classmethod
    def zero(cls, n: int) -> "Lattice":
        return cls(n, (), ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence[int]) -> Vector | None:
        if len(v) != self.ambient_rank:
            raise ValueError(f"expected {self.ambient_rank} entries, got {len(v)}")
        res = list(v)
        coords = []
        for row, p in zip(self.basis, self._pivots):
            q, r = divmod(res[p], row[p])
            if r:
                return None
            coords.append(q)
            if q:
                res = [a - q * b for a, b in zip(res, row)]
        if any(res):
            return None
        return tuple(coords)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def reduce(self, v: Sequence[int]) -> Vector:
        """Canonical representative of v + L."""
        res = list(v)
        for row, p in zip(self.basis, self._pivots):
            q = res[p] // row[p]
            if q:
                res = [a - q * b for a, b in zip(res, row)]
        return tuple(res)

    def from_coordinates(self, c: Sequence[int]) -> Vector:
        return vecmat(c, self.basis, self.ambient_rank)

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(b in self for b in other.basis)


def lattice_contains(L: Lattice, v: Sequence[int]) -> Vector | None:
    """Integer coordinates of v in the basis of L, or None if v is not in L."""
    return L.coordinates(v)


def saturate(L: Lattice) -> Lattice:
    """(Q (x) L) intersected with Z^n."""
    n = L.ambient_rank
    K = integer_kernel([list(b) for b in L.basis], n)
    return Lattice.spanned_by(integer_kernel(K, n), n)


@dataclass(frozen=True)
class QuotientStructure:
    """The finitely generated group G / L with an explicit projection."""

    source: Lattice
    kernel: Lattice
    invariant_factors: tuple[int, ...]
    free_rank: int
    _V: tuple[Vector, ...] = field(repr=False, compare=False)
    _diag: tuple[int, ...] = field(repr=False, compare=False)

    def project(self, g: Sequence[int]) -> tuple[Vector, Vector]:
        """Map g in G to (torsion residues, free coordinates)."""
        c = self.source.coordinates(g)
        if c is None:
            raise ValueError(f"{tuple(g)} is not in the source lattice")
        y = vecmat(c, self._V, len(self._V))
        r = len(self._diag)
        torsion = tuple(y[i] % self._diag[i] for i in range(r) if self._diag[i] > 1)
        return torsion, tuple(y[r:])

    def is_zero(self, g: Sequence[int]) -> bool:
        torsion, free = self.project(g)
        return not any(torsion) and not any(free)

    @property
    def order(self) -> int:
        if self.free_rank:
            raise ValueError("quotient is infinite")
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def representatives(self) -> Iterator[Vector]:
        """Coset representatives in G of the (finite) quotient."""
        if self.free_rank:
            raise ValueError("quotient is infinite")
        r = len(self._diag)
        Vinv = unimodular_inverse(self._V) if self._V else []
        g = len(self._V)
        for ys in itertools.product(*(range(d) for d in self._diag)):
            y = list(ys) + [0] * (g - r)
            c = vecmat(y, Vinv, g)
            yield self.source.from_coordinates(c)


def quotient(G: Lattice, L: Lattice) -> QuotientStructure:
    coords = []
    for b in L.basis:
        c = G.coordinates(b)
        if c is None:
            raise ValueError("L is not contained in G")
        coords.append(list(c))
    g = G.rank
    S, _, V = snf(coords, g)
    diag = tuple(S[i][i] for i in range(min(len(S), g)) if S[i][i] != 0)
    return QuotientStructure(
        source=G,
        kernel=L,
        invariant_factors=tuple(d for d in diag if d > 1),
        free_rank=g - len(diag),
        _V=tuple(tuple(r) for r in V),
        _diag=diag,
    )


@dataclass(frozen=True)
class LatticeForm:
    """An integer-valued functional on a lattice G, stored in G-basis coordinates."""

    lattice: Lattice
    coords: Vector

    def ambient(self) -> tuple[Fraction, ...]:
        """Rational functional on Q^n agreeing with this form on G and vanishing on G-perp."""
        B = self.lattice.basis
        n = self.lattice.ambient_rank
        if not B:
            return tuple(Fraction(0) for _ in range(n))
        gram_inv = inverse(matmul(B, transpose(B)))
        w = [sum(self.coords[i] * gram_inv[i][j] for i in range(len(B))) for j in range(len(B))]
        return tuple(sum(w[j] * B[j][k] for j in range(len(B))) for k in range(n))

    def __call__(self, v: Sequence[int]) -> int:
        c = self.lattice.coordinates(v)
        if c is None:
            raise ValueError(f"{tuple(v)} is not in the lattice")
        return dot(self.coords, c)


def primitive_form(phi: Sequence, G: Lattice) -> LatticeForm:
    """Positive multiple of the rational functional phi taking value set Z on G."""
    vals = [sum(Fraction(a) * b for a, b in zip(phi, row)) for row in G.basis]
    if not any(vals):
        raise ValueError("functional vanishes on the lattice")
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    return LatticeForm(G, primitive(ints))
