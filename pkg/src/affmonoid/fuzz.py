"""Seeded random monoids and brute-force oracles for differential testing.

The oracles avoid triangulations, parallelepipeds and the membership
search entirely:

* points of the saturation are listed by their facet-value vectors, which
  determine a point of the pointed quotient uniquely;
* elements of M are listed by breadth-first addition of generators;
* irreducibles and minimal interior elements (of M and of M̄) then follow
  from their definitions by pairwise subtraction.

Everything is cut off at a fixed degree, so these checks are partial by
nature.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterator

from .cone import relint_contains
from .exactlin import Vector, dot, quotient, rank, solve_rational, vsub
from .monoid import AffineMonoid, to_description
from .normalization import hilbert_basis, saturated_interior_ideal
from .ideals import interior_ideal
from .serre import InvariantViolation, analyze

ORACLE_DEGREE = 6


@dataclass(frozen=True)
class RandomSpec:
    seed: int = 0
    max_rank: int = 3
    max_gens: int = 6
    max_coord: int = 6
    allow_units: bool = False

    def __post_init__(self):
        if self.max_rank < 1 or self.max_gens < 1 or self.max_coord < 1:
            raise ValueError("rank, generator and coordinate bounds must be positive")


def random_monoid(spec: RandomSpec, index: int) -> AffineMonoid:
    """The index-th monoid of the seeded sequence; each case has its own stream."""
    rng = random.Random(f"{spec.seed}:{index}")
    low = -spec.max_coord if spec.allow_units else 0
    while True:
        n = rng.randint(1, spec.max_rank)
        k = rng.randint(1, spec.max_gens)
        gens = [tuple(rng.randint(low, spec.max_coord) for _ in range(n)) for _ in range(k)]
        if rank(gens) == n:
            return AffineMonoid(gens, name=f"seed{spec.seed}-case{index}")


def random_monoids(spec: RandomSpec, count: int) -> Iterator[AffineMonoid]:
    for i in range(count):
        yield random_monoid(spec, i)


# oracles -----------------------------------------------------------------


def saturation_points(M: AffineMonoid, bound: int = ORACLE_DEGREE) -> set[Vector]:
    """Points of the pointed quotient of M̄ with degree <= bound, via facet values."""
    cone = M.cone
    forms = cone.quotient_forms
    e = cone.pointed_dim
    if e == 0:
        return {()}
    cols = [list(col) for col in zip(*forms)]
    out = set()
    for values in product(range(bound + 1), repeat=len(forms)):
        if sum(values) > bound:
            continue
        y = solve_rational(cols, values)
        if y is None or any(c.denominator != 1 for c in y):
            continue
        out.add(tuple(int(c) for c in y))
    return out


def irreducibles(points: set[Vector]) -> set[Vector]:
    """Nonzero points that are not a sum of two nonzero points of the set."""
    nonzero = [p for p in points if any(p)]
    return {
        x for x in nonzero
        if not any(y != x and vsub(x, y) in points for y in nonzero)
    }


def monoid_elements(M: AffineMonoid, bound: int = ORACLE_DEGREE) -> set[Vector]:
    """Elements of M of degree <= bound modulo units, by repeated addition."""
    gens = [g for g in M.generators if M.degree(g) > 0]
    zero = M.canonical((0,) * M.ambient_rank)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = M.canonical(tuple(a + b for a, b in zip(x, g)))
                if y not in seen and M.degree(y) <= bound:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def oracle_discrepancies(M: AffineMonoid, bound: int = ORACLE_DEGREE) -> list[str]:
    """Compare the library against the brute-force oracles; empty list means agreement."""
    problems = []
    cone = M.cone
    qdeg = lambda y: sum(dot(f, y) for f in cone.quotient_forms)

    points = saturation_points(M, bound)
    expected_hb = irreducibles(points)
    got_hb = {y for y in hilbert_basis(M).quotient_elements if qdeg(y) <= bound}
    if got_hb != expected_hb:
        problems.append(f"hilbert basis {sorted(got_hb)} != oracle {sorted(expected_hb)}")

    if M.rank > 0:
        forms = cone.quotient_forms
        inside = {y for y in points if all(dot(f, y) > 0 for f in forms)}
        expected_wbar = {
            y for y in inside if not any(vsub(y, h) in inside for h in points if any(h))
        }
        got_wbar = {
            cone.project(M.group.coordinates(w)) for w in saturated_interior_ideal(M).degrees
        }
        got_wbar = {y for y in got_wbar if qdeg(y) <= bound}
        if got_wbar != expected_wbar:
            problems.append(f"W_bar generators {sorted(got_wbar)} != oracle {sorted(expected_wbar)}")

    elements = monoid_elements(M, bound)
    U = cone.lineality_coords
    reps = list(quotient(U, M._units_c).representatives()) if U.rank else [(0,) * M.rank]
    candidates = set()
    for y in points:
        base = cone.lift(y)
        for u in reps:
            candidates.add(M.canonical(M.to_ambient(tuple(a + b for a, b in zip(base, u)))))
    if not elements <= candidates:
        problems.append("monoid elements escape the saturation")
    for x in sorted(candidates):
        if M.contains(x) != (x in elements):
            problems.append(f"membership of {x}: search says {M.contains(x)}")
            break

    if M.rank > 0:
        interior = {x for x in elements if relint_contains(cone, x)}
        steps = [g for g in elements if M.degree(g) > 0]
        expected_w = {
            x for x in interior
            if not any(M.canonical(vsub(x, g)) in interior for g in steps)
        }
        got_w = {w for w in interior_ideal(M).degrees if M.degree(w) <= bound}
        if got_w != expected_w:
            problems.append(f"W_R generators {sorted(got_w)} != oracle {sorted(expected_w)}")
    return problems


# driver --------------------------------------------------------------------


@dataclass(frozen=True)
class FuzzOutcome:
    index: int
    monoid: AffineMonoid
    problems: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.problems


def run_case(M: AffineMonoid, index: int = 0) -> FuzzOutcome:
    try:
        analyze(M)
        problems = oracle_discrepancies(M)
    except InvariantViolation as exc:
        problems = [f"invariant violation: {exc}"]
    return FuzzOutcome(index, M, tuple(problems))


def dump_reproducer(outcome: FuzzOutcome, directory: str | Path) -> Path:
    path = Path(directory) / f"{outcome.monoid.name or f'case{outcome.index}'}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(to_description(outcome.monoid), indent=2) + "\n")
    return path


def fuzz(spec: RandomSpec, count: int) -> list[FuzzOutcome]:
    return [run_case(M, i) for i, M in enumerate(random_monoids(spec, count))]
