"""Rational polyhedral cones spanned by lattice vectors.

A cone is always studied inside the lattice ``G`` its generators live in.
Internally everything is expressed in G-basis coordinates, where ``G`` becomes
``Z^d`` and the cone is full dimensional.  Passing further to the quotient by
the lineality lattice gives a pointed cone in ``Z^e``; most of the monoid
algorithms run there.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .exactlin import (
    Lattice,
    LatticeForm,
    Vector,
    dot,
    integer_kernel,
    inverse,
    primitive,
    rank,
    snf,
    solve_rational,
    unimodular_inverse,
    vecmat,
)


def _clear_denominators(v: Sequence[Fraction]) -> Vector:
    den = lcm(*(x.denominator for x in v)) if v else 1
    return primitive([int(x * den) for x in v])


def dual_extreme_rays(rows: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Extreme rays of the pointed cone {y in R^dim : r . y >= 0 for every row r}.

    Double description with the combinatorial adjacency test.  The rows must
    have full column rank (this is what makes the cone pointed).  Returns
    primitive integer vectors; an empty list means the cone is {0}.
    """
    rows = [tuple(r) for r in rows]
    chosen: list[int] = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in chosen] + [r]) > len(chosen):
            chosen.append(i)
            if len(chosen) == dim:
                break
    if len(chosen) < dim:
        raise ValueError("constraint rows must have full column rank")
    if dim == 0:
        return []
    inv = inverse([rows[i] for i in chosen])
    rays = [_clear_denominators([inv[k][j] for k in range(dim)]) for j in range(dim)]
    zeros = [frozenset(chosen[:j] + chosen[j + 1:]) for j in range(dim)]

    for i, a in enumerate(rows):
        if i in chosen:
            continue
        vals = [dot(a, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays, new_zeros = [], []
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if len(common) < dim - 2:
                    continue
                if any(k != p and k != q and common <= zeros[k] for k in range(len(rays))):
                    continue
                vp, vq = vals[p], vals[q]
                r = primitive([vp * y - vq * x for x, y in zip(rays[p], rays[q])])
                new_rays.append(r)
                new_zeros.append(common | {i})
        keep = [k for k, v in enumerate(vals) if v >= 0]
        rays = [rays[k] for k in keep] + new_rays
        zeros = [zeros[k] | {i} if vals[k] == 0 else zeros[k] for k in keep] + new_zeros
    return rays


def _separating_form(face: Sequence[Sequence[int]], apex: Sequence[int], dim: int) -> Vector:
    """A functional vanishing on the face vectors and positive on apex."""
    for k in integer_kernel(face, dim) if face else [[int(i == j) for j in range(dim)] for i in range(dim)]:
        s = dot(k, apex)
        if s:
            return tuple(k) if s > 0 else tuple(-x for x in k)
    raise ValueError("apex lies in the span of the face")


def placing_triangulation(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Placing triangulation of the cone spanned by ``vectors`` (inserted in order).

    Simplices are returned as sorted index tuples.  Vectors that land inside
    the cone built so far are skipped, as are zero vectors.  The cone must be
    pointed.
    """
    if not vectors:
        return []
    dim = len(vectors[0])
    simplices: list[tuple[int, ...]] = []
    used: list[int] = []
    for j, v in enumerate(vectors):
        if not any(v):
            continue
        if not used:
            simplices, used = [(j,)], [j]
            continue
        if rank([vectors[i] for i in used] + [v]) > rank([vectors[i] for i in used]):
            simplices = [s + (j,) for s in simplices]
            used.append(j)
            continue
        faces = Counter(s[:k] + s[k + 1:] for s in simplices for k in range(len(s)))
        added = []
        for s in simplices:
            for k, apex in enumerate(s):
                face = s[:k] + s[k + 1:]
                if faces[face] != 1:
                    continue
                phi = _separating_form([vectors[i] for i in face], vectors[apex], dim)
                if dot(phi, v) < 0:
                    added.append(tuple(sorted(face + (j,))))
        if added:
            simplices.extend(added)
            used.append(j)
    return simplices


@dataclass(frozen=True)
class SupportForm:
    """Primitive support form of a facet, stored in G-basis coordinates."""

    facet_id: int
    sigma: Vector
    ambient: tuple[Fraction, ...]
    facet_generators: tuple[int, ...]


@dataclass(frozen=True)
class Grading:
    """Sum of the facet forms; positive on C minus its lineality space."""

    coords: Vector
    ambient: tuple[Fraction, ...]
    is_group: bool


class RationalCone:
    """The cone R>=0 * gens inside the lattice G.

    Attributes:
      ambient_rank: n.
      generators: the input vectors, in ambient coordinates.
      lattice: G.
      dim: dimension of the linear span (= rank of G).
      facets: list of SupportForm, sorted by support form.
      lineality: G intersected with the lineality space, as a Lattice in Z^n.
      extreme_rays: primitive rays of the pointed quotient, lifted to Z^n.
    """

    def __init__(self, generators: Sequence[Sequence[int]], lattice: Lattice):
        self.ambient_rank = lattice.ambient_rank
        self.generators = [tuple(g) for g in generators]
        self.lattice = lattice
        self.dim = lattice.rank
        coords = []
        for g in self.generators:
            c = lattice.coordinates(g)
            if c is None:
                raise ValueError(f"generator {g} is not in the lattice")
            coords.append(c)
        self.generator_coords = coords
        d = self.dim

        forms = sorted(set(dual_extreme_rays(coords, d))) if d else []
        self.facets = [
            SupportForm(
                facet_id=i,
                sigma=s,
                ambient=LatticeForm(lattice, s).ambient(),
                facet_generators=tuple(k for k, c in enumerate(coords) if dot(s, c) == 0),
            )
            for i, s in enumerate(forms)
        ]
        self.forms = [f.sigma for f in self.facets]

        # lineality lattice and a unimodular change of basis splitting it off
        lin = integer_kernel(self.forms, d) if d else []
        self.lineality_coords = Lattice.spanned_by(lin, d)
        self.lineality = Lattice.spanned_by(
            [lattice.from_coordinates(k) for k in lin], self.ambient_rank
        )
        u = len(lin)
        if u:
            _, _, Q = snf(lin, d)
        else:
            Q = [[int(i == j) for j in range(d)] for i in range(d)]
        self._Q = Q
        self._Qinv = unimodular_inverse(Q) if d else []
        self._u = u
        self.pointed_dim = d - u
        self.quotient_forms = [
            tuple(sum(self._Qinv[i][j] * s[j] for j in range(d)) for i in range(u, d))
            for s in self.forms
        ]

        rays_q: list[Vector] = []
        for c in coords:
            y = self.project(c)
            if not any(y):
                continue
            zs = [f for f in self.quotient_forms if dot(f, y) == 0]
            if rank(zs) == self.pointed_dim - 1:
                r = primitive(y)
                if r not in rays_q:
                    rays_q.append(r)
        self.quotient_rays = rays_q
        self.extreme_rays = [
            self.lineality.reduce(self.to_ambient(self.lift(r))) for r in rays_q
        ]

    # coordinate plumbing -------------------------------------------------
    def to_coords(self, v: Sequence[int]) -> Vector | None:
        return self.lattice.coordinates(v)

    def to_ambient(self, c: Sequence[int]) -> Vector:
        return self.lattice.from_coordinates(c)

    def project(self, c: Sequence[int]) -> Vector:
        """G-coordinates -> coordinates in the pointed quotient Z^e."""
        return vecmat(c, self._Q, self.dim)[self._u:]

    def lift(self, y: Sequence[int]) -> Vector:
        """Pointed-quotient coordinates -> a G-coordinate preimage."""
        return vecmat((0,) * self._u + tuple(y), self._Qinv, self.dim)

    @property
    def is_linear_space(self) -> bool:
        return not self.facets

    def sigma_values(self, c: Sequence[int]) -> list[int]:
        """All facet form values of a vector given in G-coordinates."""
        return [dot(s, c) for s in self.forms]

    def __repr__(self) -> str:
        return (
            f"RationalCone(dim={self.dim}, facets={len(self.facets)}, "
            f"lineality_rank={self.lineality.rank})"
        )


def cone_from_generators(gens: Sequence[Sequence[int]], G: Lattice) -> RationalCone:
    return RationalCone(gens, G)


def relint_contains(C: RationalCone, v: Sequence[int]) -> bool:
    """True iff v lies in the relative interior of C."""
    c = C.lattice.coordinates(v)
    if c is None:
        c = solve_rational(C.lattice.basis, v)
    if c is None:
        return False
    return all(dot(s, c) > 0 for s in C.forms)


def positive_grading(C: RationalCone) -> Grading:
    d = C.dim
    coords = tuple(sum(s[i] for s in C.forms) for i in range(d))
    return Grading(
        coords=coords,
        ambient=LatticeForm(C.lattice, coords).ambient(),
        is_group=C.is_linear_space,
    )
