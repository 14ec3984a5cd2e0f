"""Monomial ideals and modules over M or M̄, given by generator degrees."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .cone import relint_contains
from .exactlin import Vector, vadd, vsub
from .monoid import AffineMonoid
from .normalization import module_generators_of_saturation, saturation_contains

BASES = ("monoid", "saturation")
REGIONS = (None, "interior", "saturated_interior")


@dataclass(frozen=True)
class MonoidIdeal:
    """The set union of (g + base) over the generator degrees g.

    ``base`` is "monoid" (M acts) or "saturation" (M̄ acts).  When
    ``intrinsic`` is set the set is a region and membership is decided from
    that description, not from the generator list: "interior" means
    M ∩ relint(C) (W_R), "saturated_interior" means M̄ ∩ relint(C) (W̄_R).
    """

    monoid: AffineMonoid
    base: str
    degrees: tuple[Vector, ...]
    intrinsic: str | None = None
    exact: bool = True
    bound: int | None = None

    def __post_init__(self):
        if self.base not in BASES:
            raise ValueError(f"base must be one of {BASES}")
        if self.intrinsic not in REGIONS:
            raise ValueError(f"intrinsic must be one of {REGIONS}")

    def base_contains(self, v: Sequence[int]) -> bool:
        if self.base == "saturation":
            return saturation_contains(self.monoid, v)
        return self.monoid.contains(v)

    def contains(self, v: Sequence[int]) -> bool:
        if self.intrinsic == "interior":
            return relint_contains(self.monoid.cone, v) and self.monoid.contains(v)
        if self.intrinsic == "saturated_interior":
            return relint_contains(self.monoid.cone, v) and saturation_contains(self.monoid, v)
        return any(self.base_contains(vsub(v, g)) for g in self.degrees)

    __contains__ = contains


def interior_ideal(M: AffineMonoid, bound: int | None = None) -> MonoidIdeal:
    """Minimal M-module generators of W_R = M ∩ relint(C).

    A minimal generator w is congruent modulo units to the sum of the
    distinct generators occurring in any representation of w (that sum is
    itself interior and divides w), so subset sums of the minimal generators
    form a complete candidate list.  Their degrees never exceed B*, which is
    recorded as the bound.
    """
    if M.rank == 0:
        raise ValueError("the zero cone has no interior")
    cone = M.cone
    gens = M.minimal_generators
    candidates = set()
    for k in range(len(gens) + 1):
        for subset in combinations(gens, k):
            s = tuple(map(sum, zip(*subset))) if subset else (0,) * M.ambient_rank
            if relint_contains(cone, s):
                candidates.add(M.canonical(s))

    def interior(v):
        return relint_contains(cone, v) and M.contains(v)

    found = sorted(
        (w for w in candidates if not any(interior(vsub(w, m)) for m in gens)),
        key=M.sort_key,
    )
    if bound is None:
        return MonoidIdeal(M, "monoid", tuple(found), "interior", True, M.depth_bound())
    kept = tuple(w for w in found if M.degree(w) <= bound)
    return MonoidIdeal(M, "monoid", kept, "interior", len(kept) == len(found), bound)


def r_module_generators(I: MonoidIdeal, bound: int | None = None) -> MonoidIdeal:
    """Minimal generators over M of an ideal given over M̄: {g + t} made irredundant."""
    if I.base == "monoid":
        return I
    M = I.monoid
    T = module_generators_of_saturation(M, bound)
    candidates = sorted({M.canonical(vadd(g, t)) for g in I.degrees for t in T.elements}, key=M.sort_key)
    kept: list[Vector] = []
    for c in candidates:
        if not any(M.contains(vsub(c, k)) for k in kept):
            kept.append(c)
    return MonoidIdeal(M, "monoid", tuple(kept), I.intrinsic, I.exact and T.exact, T.bound)


@dataclass(frozen=True)
class EndomorphismCheck:
    """Which module generators t of M̄ over M satisfy t + set(C) ⊆ set(C)."""

    members: tuple[Vector, ...]
    equals_saturation: bool
    exact: bool


def endomorphism_monoid(C: MonoidIdeal) -> EndomorphismCheck:
    """Decide whether (C : C) = M̄ by testing the module generators of M̄ over M."""
    if not C.degrees:
        raise ValueError("C must be nonzero")
    M = C.monoid
    T = module_generators_of_saturation(M)
    members = tuple(t for t in T.elements if all(C.contains(vadd(t, c)) for c in C.degrees))
    return EndomorphismCheck(members, len(members) == len(T.elements), T.exact and C.exact)


@dataclass(frozen=True)
class FacetCodim:
    """Per facet: does every generator w of the big module lie in set(Wsmall) + Z(M ∩ F)?

    ``certificates`` pairs each generator w with a small generator s such
    that w - s is in the facet localization; ``witness`` is a failing w.
    """

    facet_id: int
    holds: bool
    certificates: tuple[tuple[Vector, Vector], ...]
    witness: Vector | None


@dataclass(frozen=True)
class CodimCheck:
    facets: tuple[FacetCodim, ...]
    exact: bool

    @property
    def holds(self) -> bool:
        """All facets pass: dim(Wbig / Wsmall) < d - 1."""
        return all(f.holds for f in self.facets)


def quotient_codim_check(Wsmall: MonoidIdeal, Wbig: MonoidIdeal) -> CodimCheck:
    M = Wsmall.monoid
    small = r_module_generators(Wsmall)
    big = r_module_generators(Wbig)
    for s in small.degrees:
        if not Wbig.contains(s):
            raise ValueError(f"{s} lies in the small module but not in the big one")
    results = []
    for F in M.facets:
        certs, witness = [], None
        for w in big.degrees:
            s = next(
                (s for s in small.degrees if M.in_facet_localization(F.facet_id, vsub(w, s))),
                None,
            )
            if s is None:
                witness = w
                break
            certs.append((w, s))
        results.append(FacetCodim(F.facet_id, witness is None, tuple(certs), witness))
    return CodimCheck(tuple(results), small.exact and big.exact)
