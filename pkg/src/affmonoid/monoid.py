"""Affine monoids M = N a_1 + ... + N a_k inside Z^n.

Elements are handled modulo the unit group of M.  Exact membership is a
bounded depth-first search over generator multiplicities: every nonunit
generator has positive degree under the grading, so the degree of the target
caps the search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Hashable, Sequence

from .cone import RationalCone, dual_extreme_rays, positive_grading
from .exactlin import Lattice, Vector, dot, hnf, integer_kernel, transpose, vecmat, vsub

SCHEMA_VERSION = 1


class DescriptionError(ValueError):
    """Raised for malformed monoid description files."""


def _search(
    target: Vector,
    gens: Sequence[Vector],
    weights: Sequence[int],
    weight_of: Callable[[Vector], int],
    feasible: Callable[[Vector], bool],
    accept: Callable[[Vector], bool],
    key: Callable[[Vector], Hashable],
) -> tuple[list[int], Vector] | None:
    """Find multiplicities m with target - sum m_i gens_i accepted.

    ``weights`` are the (positive) weights of the generators; the residual
    weight must reach exactly zero.  Returns (multiplicities, residual).
    """
    k = len(gens)
    failed: set = set()

    def rec(i: int, r: Vector):
        w = weight_of(r)
        if w == 0:
            return ([0] * (k - i), r) if accept(r) else None
        if w < 0 or i == k:
            return None
        memo = (i, key(r))
        if memo in failed:
            return None
        g, wg = gens[i], weights[i]
        for m in range(w // wg, -1, -1):
            r2 = tuple(a - m * b for a, b in zip(r, g)) if m else r
            if not feasible(r2):
                continue
            sub = rec(i + 1, r2)
            if sub is not None:
                return [m] + sub[0], sub[1]
        failed.add(memo)
        return None

    if not feasible(target):
        return None
    return rec(0, target)


@dataclass(frozen=True)
class LocalizationCertificate:
    """v = sum(multiplicities[i] * generators[i]) + lattice_part, lattice_part in Z(M cap F)."""

    multiplicities: tuple[int, ...]
    lattice_part: Vector


class AffineMonoid:
    """A finitely generated submonoid of Z^n with cached structure.

    Attributes:
      generators: input generators (ambient coordinates).
      group: G = ZM.
      cone: the RationalCone spanned by M in G.
      rank: d = rank G.
      grading: sum of facet forms (see cone.positive_grading).
      units: the unit group of M as a Lattice (generated by the generators
        lying in the lineality space).
      minimal_generators: irredundant nonunit generators, modulo units.
    """

    def __init__(self, generators: Sequence[Sequence[int]], name: str | None = None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if not gens:
            raise ValueError("a monoid needs at least one generator")
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValueError("generators must all have the same length")
        self.name = name
        self.ambient_rank = n
        self.generators = gens
        self.group = Lattice.spanned_by(gens, n)
        self.cone = RationalCone(gens, self.group)
        self.rank = self.group.rank
        self.grading = positive_grading(self.cone)
        self._cache: dict[Any, Any] = {}

        coords = self.cone.generator_coords
        self._coords = coords
        lam = self.grading.coords
        self._lam = lam
        self.unit_indices = [i for i, c in enumerate(coords) if not any(self.cone.sigma_values(c))]
        self.units = Lattice.spanned_by([gens[i] for i in self.unit_indices], n)
        self._units_c = Lattice.spanned_by([coords[i] for i in self.unit_indices], self.rank)

        # sequential elimination, largest element first
        nonunit = [i for i in range(len(gens)) if i not in self.unit_indices]
        kept = sorted(nonunit, key=lambda i: (dot(lam, coords[i]), gens[i]))
        for i in sorted(nonunit, key=lambda i: (dot(lam, coords[i]), gens[i]), reverse=True):
            others = [j for j in kept if j != i]
            if self._search_with(coords[i], others) is not None:
                kept = others
        self.minimal_indices = sorted(kept, key=lambda i: (-dot(lam, coords[i]), gens[i]))
        self.minimal_generators = sorted(
            (gens[i] for i in kept), key=lambda g: (self.degree(g), g)
        )

    # ------------------------------------------------------------------
    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"AffineMonoid({label}generators={self.generators})"

    @property
    def is_positive(self) -> bool:
        return self.units.rank == 0

    @property
    def facets(self):
        return self.cone.facets

    def degree(self, v: Sequence[int]):
        """Grading value of v (an int on G, a Fraction elsewhere in the span)."""
        val = dot(self.grading.ambient, v)
        return int(val) if val.denominator == 1 else val

    def sort_key(self, v: Sequence[int]):
        return (self.degree(v), tuple(v))

    def to_ambient(self, c: Sequence[int]) -> Vector:
        return self.group.from_coordinates(c)

    def canonical(self, v: Sequence[int]) -> Vector:
        """Canonical representative of v modulo the units of M."""
        return self.units.reduce(v)

    # membership --------------------------------------------------------
    def _search_with(self, target: Vector, indices: Sequence[int]):
        # Residuals carry their facet values along (the grading is their sum),
        # so feasibility and weight need no dot products.
        d = self.rank
        forms = self.cone.forms
        units = self._units_c

        def aug(c):
            return tuple(c) + tuple(dot(s, c) for s in forms)

        gens = [aug(self._coords[i]) for i in indices]
        found = _search(
            aug(target),
            gens,
            [sum(g[d:]) for g in gens],
            lambda r: sum(r[d:]),
            lambda r: min(r[d:], default=0) >= 0,
            lambda r: r[:d] in units,
            lambda r: units.reduce(r[:d]),
        )
        if found is None:
            return None
        mults, residual = found
        return mults, residual[:d]

    def certificate(self, v: Sequence[int]) -> tuple[int, ...] | None:
        """Nonnegative integer coefficients c with sum c_i a_i == v, or None."""
        if len(v) != self.ambient_rank:
            raise ValueError(f"expected a vector of length {self.ambient_rank}")
        c = self.group.coordinates(v)
        if c is None:
            return None
        found = self._search_with(c, self.minimal_indices)
        if found is None:
            return None
        mults, residual = found
        coeffs = [0] * len(self.generators)
        for i, m in zip(self.minimal_indices, mults):
            coeffs[i] += m
        for i, m in zip(self.unit_indices, self._unit_coefficients(residual)):
            coeffs[i] += m
        return tuple(coeffs)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_rank:
            raise ValueError(f"expected a vector of length {self.ambient_rank}")
        memo = self._cache.setdefault("contains", {})
        v = tuple(v)
        if v not in memo:
            c = self.group.coordinates(v)
            memo[v] = c is not None and self._search_with(c, self.minimal_indices) is not None
        return memo[v]

    __contains__ = contains

    def _unit_coefficients(self, residual: Vector) -> list[int]:
        """Nonnegative coefficients over the unit generators summing to residual."""
        if not self.unit_indices:
            return []
        if "unit_transform" not in self._cache:
            A = [list(self._coords[i]) for i in self.unit_indices]
            self._cache["unit_transform"] = hnf(A, self.rank)[1]
        U = self._cache["unit_transform"]
        c = self._units_c.coordinates(residual)
        coeffs = list(vecmat(c, U[: len(c)], len(U)))
        if min(coeffs) < 0:
            p = self._positive_unit_relation()
            t = max(-(x // q) for x, q in zip(coeffs, p) if x < 0)
            coeffs = [x + t * q for x, q in zip(coeffs, p)]
        return coeffs

    def _positive_unit_relation(self) -> list[int]:
        """A relation sum p_j u_j = 0 among unit generators with every p_j > 0."""
        if "unit_relation" not in self._cache:
            A = [list(self._coords[i]) for i in self.unit_indices]
            k = len(A)
            K = integer_kernel(transpose(A, k), k)
            rays = dual_extreme_rays(transpose(K, k), len(K))
            p = [0] * k
            for t in rays:
                p = [a + b for a, b in zip(p, vecmat(t, K, k))]
            assert all(x > 0 for x in p), "units must admit a positive relation"
            self._cache["unit_relation"] = p
        return self._cache["unit_relation"]

    # enumeration -------------------------------------------------------
    def _elements_up_to(self, bound: int) -> dict[Vector, tuple[Vector, tuple[int, ...]]]:
        """G-coordinate elements of degree <= bound, keyed modulo units.

        Values are (element, multiplicities over minimal_indices).
        """
        lam = self._lam
        gens = [self._coords[i] for i in self.minimal_indices]
        zero = (0,) * self.rank
        seen = {self._units_c.reduce(zero): (zero, (0,) * len(gens))}
        stack = [seen[self._units_c.reduce(zero)]]
        while stack:
            x, mx = stack.pop()
            for j, g in enumerate(gens):
                y = tuple(a + b for a, b in zip(x, g))
                if dot(lam, y) > bound:
                    continue
                key = self._units_c.reduce(y)
                if key not in seen:
                    seen[key] = (y, mx[:j] + (mx[j] + 1,) + mx[j + 1:])
                    stack.append(seen[key])
        return seen

    def elements_up_to(self, bound: int) -> list[Vector]:
        """Canonical representatives of all elements of degree <= bound, sorted."""
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        reps = [self.canonical(self.to_ambient(y)) for y, _ in self._elements_up_to(bound).values()]
        return sorted(reps, key=self.sort_key)

    def enumerate_up_to(self, bound: int) -> dict[Vector, tuple[int, ...]]:
        """All elements of degree <= bound (modulo units) with certificates, in canonical order."""
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        out = {}
        for y, my in self._elements_up_to(bound).values():
            rep = self.canonical(self.to_ambient(y))
            coeffs = [0] * len(self.generators)
            for i, m in zip(self.minimal_indices, my):
                coeffs[i] += m
            rc = self.group.coordinates(rep)
            for i, m in zip(self.unit_indices, self._unit_coefficients(vsub(rc, y))):
                coeffs[i] += m
            out[rep] = tuple(coeffs)
        return dict(sorted(out.items(), key=lambda kv: self.sort_key(kv[0])))

    # facet localizations M + Z(M cap F) --------------------------------
    def facet_lattice(self, facet: int) -> Lattice:
        """Z(M cap F) as an ambient lattice."""
        F = self.cone.facets[facet]
        return Lattice.spanned_by([self.generators[i] for i in F.facet_generators], self.ambient_rank)

    def _facet_lattice_c(self, facet: int) -> Lattice:
        key = ("facet_lattice", facet)
        if key not in self._cache:
            F = self.cone.facets[facet]
            self._cache[key] = Lattice.spanned_by(
                [self._coords[i] for i in F.facet_generators], self.rank
            )
        return self._cache[key]

    def localization_certificate(self, facet: int, v: Sequence[int]) -> LocalizationCertificate | None:
        """Decide v in M + Z(M cap F); the search is bounded by sigma_F(v)."""
        c = self.group.coordinates(v)
        if c is None:
            return None
        sigma = self.cone.forms[facet]
        L = self._facet_lattice_c(facet)
        off = [i for i in self.minimal_indices if dot(sigma, self._coords[i]) > 0]
        gens = [self._coords[i] for i in off]
        found = _search(
            c,
            gens,
            [dot(sigma, g) for g in gens],
            lambda r: dot(sigma, r),
            lambda r: dot(sigma, r) >= 0,
            lambda r: r in L,
            L.reduce,
        )
        if found is None:
            return None
        mults, residual = found
        coeffs = [0] * len(self.generators)
        for i, m in zip(off, mults):
            coeffs[i] = m
        return LocalizationCertificate(tuple(coeffs), self.to_ambient(residual))

    def in_facet_localization(self, facet: int, v: Sequence[int]) -> bool:
        c = self.group.coordinates(v)
        return c is not None and self._in_localization_c(facet, c)

    def _in_localization_c(self, facet: int, c: Vector) -> bool:
        # M_F is stable under Z(M cap F), so the answer only depends on the coset
        memo = self._cache.setdefault(("localization", facet), {})
        key = self._facet_lattice_c(facet).reduce(c)
        if key not in memo:
            memo[key] = self.localization_certificate(facet, self.to_ambient(c)) is not None
        return memo[key]

    # bounds --------------------------------------------------------------
    def depth_bound(self) -> int:
        """B* = max deg(a_i) * (1 + sum over facets of max sigma_F(a_i))."""
        if not self.minimal_indices:
            return 0
        top = max(dot(self._lam, self._coords[i]) for i in self.minimal_indices)
        spread = sum(max(dot(s, c) for c in self._coords) for s in self.cone.forms)
        return top * (1 + spread)


def build(gens: Sequence[Sequence[int]], name: str | None = None) -> AffineMonoid:
    return AffineMonoid(gens, name)


def contains(M: AffineMonoid, v: Sequence[int]) -> tuple[int, ...] | None:
    return M.certificate(v)


def enumerate_up_to(M: AffineMonoid, bound: int) -> dict[Vector, tuple[int, ...]]:
    return M.enumerate_up_to(bound)


def minimal_generators(M: AffineMonoid) -> list[Vector]:
    return list(M.minimal_generators)


# description files -------------------------------------------------------

_FIELDS = {"schema_version", "name", "ambient_rank", "generators"}


def parse_description(obj: Any) -> AffineMonoid:
    if not isinstance(obj, dict):
        raise DescriptionError("description must be a JSON object")
    unknown = set(obj) - _FIELDS
    if unknown:
        raise DescriptionError(f"unknown fields: {sorted(unknown)}")
    missing = {"name", "ambient_rank", "generators"} - set(obj)
    if missing:
        raise DescriptionError(f"missing fields: {sorted(missing)}")
    version = obj.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION or isinstance(version, bool):
        raise DescriptionError(f"unsupported schema_version {version!r}")
    name, n, gens = obj["name"], obj["ambient_rank"], obj["generators"]
    if not isinstance(name, str):
        raise DescriptionError("name must be a string")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DescriptionError("ambient_rank must be a positive integer")
    if not isinstance(gens, list) or not gens:
        raise DescriptionError("generators must be a nonempty list")
    for g in gens:
        if not isinstance(g, list) or len(g) != n:
            raise DescriptionError(f"generator {g!r} must be a list of {n} integers")
        if any(not isinstance(x, int) or isinstance(x, bool) for x in g):
            raise DescriptionError(f"generator {g!r} has non-integer entries")
    return AffineMonoid(gens, name)


def load_description(path: str | Path) -> AffineMonoid:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DescriptionError(f"cannot read {path}: {exc}") from exc
    return parse_description(obj)


def to_description(M: AffineMonoid) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "name": M.name or "",
        "ambient_rank": M.ambient_rank,
        "generators": [list(g) for g in M.generators],
    }
