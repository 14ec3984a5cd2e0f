"""The saturation M̄ = ZM ∩ R≥0 M and objects attached to it.

All lattice-point work happens in the pointed quotient of G by the units of
M̄, where the cone is pointed and full dimensional.  Simplicial pieces come
from a placing triangulation; the lattice points of a half-open
parallelepiped are listed through the finite group Z^e / (rows of the
simplex), whose coset representatives come from a Smith form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .cone import placing_triangulation
from .exactlin import Lattice, Vector, det, dot, inverse, quotient, vecmat
from .monoid import AffineMonoid


def _cached(M: AffineMonoid, key, fn):
    if key not in M._cache:
        M._cache[key] = fn()
    return M._cache[key]


def _adjugate(R: Sequence[Sequence[int]]) -> tuple[int, list[list[int]]]:
    """(|det R|, A) with A = |det R| * R^-1, integer."""
    D = det(R)
    inv = inverse(R)
    sign = 1 if D > 0 else -1
    return abs(D), [[int(x * D) * sign for x in row] for row in inv]


def parallelepiped_points(
    rays: Sequence[Sequence[int]], open_at: frozenset[int] = frozenset()
) -> Iterator[Vector]:
    """Lattice points sum t_i r_i of Z^e with t_i in [0,1), or (0,1] for i in open_at."""
    e = len(rays)
    D, A = _adjugate(rays)
    Z = Lattice.standard(e)
    coset = quotient(Z, Lattice.spanned_by(rays, e))
    for x in coset.representatives():
        y = vecmat(x, A, e)
        t = [c % D for c in y]
        for i in open_at:
            if t[i] == 0:
                t[i] = D
        p = vecmat(t, rays, e)
        yield tuple(c // D for c in p)


def _in_cone(forms, y) -> bool:
    return all(dot(s, y) >= 0 for s in forms)


def _in_interior(forms, y) -> bool:
    return all(dot(s, y) > 0 for s in forms)


def saturation_contains(M: AffineMonoid, v: Sequence[int]) -> bool:
    c = M.group.coordinates(v)
    return c is not None and all(x >= 0 for x in M.cone.sigma_values(c))


def _lift(M: AffineMonoid, y: Sequence[int]) -> Vector:
    """Pointed-quotient point -> ambient representative, canonical modulo units of M̄."""
    return M.cone.lineality.reduce(M.to_ambient(M.cone.lift(y)))


def _qdegree(M: AffineMonoid, y: Sequence[int]) -> int:
    return sum(dot(f, y) for f in M.cone.quotient_forms)


@dataclass(frozen=True)
class HilbertBasis:
    """Minimal generators of M̄ modulo its unit lattice ``unit_basis``."""

    monoid: AffineMonoid
    elements: tuple[Vector, ...]
    unit_basis: Lattice
    quotient_elements: tuple[Vector, ...]


def _quotient_hilbert_basis(M: AffineMonoid) -> list[Vector]:
    cone = M.cone
    rays = cone.quotient_rays
    forms = cone.quotient_forms
    pool = {tuple(r) for r in rays}
    for simplex in placing_triangulation(rays):
        for p in parallelepiped_points([rays[i] for i in simplex]):
            if any(p):
                pool.add(p)
    kept: list[Vector] = []
    for h in sorted(pool, key=lambda y: (_qdegree(M, y), y)):
        if not any(_in_cone(forms, tuple(a - b for a, b in zip(h, k))) for k in kept):
            kept.append(h)
    return kept


def hilbert_basis(M: AffineMonoid) -> HilbertBasis:
    def compute():
        q = _quotient_hilbert_basis(M)
        lifted = [_lift(M, y) for y in q]
        order = sorted(range(len(q)), key=lambda i: M.sort_key(lifted[i]))
        return HilbertBasis(
            monoid=M,
            elements=tuple(lifted[i] for i in order),
            unit_basis=M.cone.lineality,
            quotient_elements=tuple(q[i] for i in order),
        )

    return _cached(M, "hilbert_basis", compute)


@dataclass(frozen=True)
class NormalityVerdict:
    normal: bool
    witness: Vector | None


def is_normal(M: AffineMonoid) -> NormalityVerdict:
    """M is normal iff M̄ ⊆ M; a witness is an element of M̄ not in M."""

    def compute():
        HB = hilbert_basis(M)
        for u in HB.unit_basis.basis:
            if u not in M.units:
                return NormalityVerdict(False, u)
        for h in HB.elements:
            if not M.contains(h):
                return NormalityVerdict(False, h)
        return NormalityVerdict(True, None)

    return _cached(M, "is_normal", compute)


@dataclass(frozen=True)
class ModuleGenerators:
    """A finite T with M̄ = union of t + M (each t taken modulo units of M)."""

    elements: tuple[Vector, ...]
    exact: bool
    bound: int | None


def _unit_coset_reps(M: AffineMonoid) -> list[Vector]:
    """Representatives of (units of M̄) / (units of M), in G-coordinates."""
    cone = M.cone
    U = cone.lineality_coords
    L = M._units_c
    reps = list(quotient(U, L).representatives()) if U.rank else [(0,) * M.rank]
    return sorted(reps)


def module_generators_of_saturation(M: AffineMonoid, bound: int | None = None) -> ModuleGenerators:
    """Minimal T ⊆ M̄ with M̄ = ∪ (t + M).

    Every element of M̄ is m + r where r = sum t_i a_i, 0 <= t_i < 1, over a
    simplex of a triangulation spanned by nonunit generators (Carathéodory).
    So T consists of exactly those parallelepiped points r with r - a_j not
    in M̄ for every generator a_j; no degree bound is needed.  ``bound``
    truncates the answer to degree <= bound (flagged inexact if that drops
    anything).
    """

    def compute():
        cone = M.cone
        forms = cone.quotient_forms
        gens_q = [cone.project(M._coords[i]) for i in M.minimal_indices]
        pool: set[Vector] = {(0,) * cone.pointed_dim}
        for simplex in placing_triangulation(gens_q):
            pool.update(parallelepiped_points([gens_q[i] for i in simplex]))
        good = [
            y for y in pool
            if not any(_in_cone(forms, tuple(a - b for a, b in zip(y, g))) for g in gens_q)
        ]
        out = set()
        for y in good:
            base = cone.lift(y)
            for u in _unit_coset_reps(M):
                c = tuple(a + b for a, b in zip(base, u))
                out.add(M.canonical(M.to_ambient(c)))
        return sorted(out, key=M.sort_key)

    full = _cached(M, "module_generators", compute)
    if bound is None:
        return ModuleGenerators(tuple(full), True, None)
    kept = tuple(t for t in full if M.degree(t) <= bound)
    return ModuleGenerators(kept, len(kept) == len(full), bound)


def caratheodory_bound(M: AffineMonoid) -> int:
    """Degrees of elements of T stay below e * max deg(a_i)."""
    if not M.minimal_indices:
        return 0
    return M.cone.pointed_dim * max(M.degree(g) for g in M.minimal_generators)


def _reference_point(rays: Sequence[Vector], simplices) -> Vector:
    """An interior point of the cone off every hyperplane spanned by a simplex facet."""
    e = len(rays[0])
    inverses = [inverse([rays[i] for i in s]) for s in simplices]
    for attempt in range(1, 1000):
        w = [attempt * len(rays) + (k + 1) ** 2 * attempt + k for k in range(len(rays))]
        y = vecmat(w, rays, e)
        if all(all(c != 0 for c in vecmat(y, inv, e)) for inv in inverses):
            return y
    raise RuntimeError("no generic reference point found")


def saturated_interior_ideal(M: AffineMonoid):
    """Generators over M̄ of W̄ = ideal of lattice points in relint(C).

    relint(C) is partitioned into half-open simplicial cones using a generic
    interior reference point q: in each simplex the facets whose barycentric
    coordinate of q is positive are open.  Every interior lattice point is
    then a parallelepiped point of its piece plus a combination of rays, so
    the parallelepiped points, reduced against the Hilbert basis, are exactly
    the minimal generators.
    """
    from .ideals import MonoidIdeal

    if M.rank == 0:
        raise ValueError("the zero cone has no interior")

    def compute():
        cone = M.cone
        e = cone.pointed_dim
        if e == 0:
            return [(0,) * M.ambient_rank]
        rays = cone.quotient_rays
        forms = cone.quotient_forms
        simplices = placing_triangulation(rays)
        q = _reference_point(rays, simplices)
        pool: set[Vector] = set()
        for s in simplices:
            R = [rays[i] for i in s]
            coeff = vecmat(q, inverse(R), e)
            open_at = frozenset(i for i, c in enumerate(coeff) if c > 0)
            for p in parallelepiped_points(R, open_at):
                if _in_interior(forms, p):
                    pool.add(p)
        hb = hilbert_basis(M).quotient_elements
        gens = [
            p for p in pool
            if not any(_in_interior(forms, tuple(a - b for a, b in zip(p, h))) for h in hb)
        ]
        return sorted((_lift(M, y) for y in gens), key=M.sort_key)

    degrees = _cached(M, "w_bar", compute)
    return MonoidIdeal(M, "saturation", tuple(degrees), intrinsic="saturated_interior")
