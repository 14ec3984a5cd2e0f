"""Decision procedures for (R1), normality and a bounded (S2) probe.

Both R1 criteria work facet by facet with the localization
M_F = M + Z(M ∩ F), the exponent monoid of k[M] localized at the
height-one prime of the facet F:

* criterion A checks M̄ ⊆ M_F through the Hilbert basis of M̄;
* criterion B checks that Z(M ∩ F) is saturated in G ∩ lin(F) and that some
  generator sits at height one over F.

They share no code beyond the cone, and check_r1 insists they agree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactlin import Lattice, Vector, dot, integer_kernel, vadd
from .ideals import (
    CodimCheck,
    EndomorphismCheck,
    MonoidIdeal,
    endomorphism_monoid,
    interior_ideal,
    quotient_codim_check,
    r_module_generators,
)
from .monoid import AffineMonoid, LocalizationCertificate
from .normalization import (
    HilbertBasis,
    ModuleGenerators,
    NormalityVerdict,
    hilbert_basis,
    is_normal,
    module_generators_of_saturation,
    saturated_interior_ideal,
)

REPORT_SCHEMA_VERSION = 1


class InvariantViolation(RuntimeError):
    """A consistency check between independent computations failed (a bug, not a verdict)."""


@dataclass(frozen=True)
class FacetCriterionA:
    facet_id: int
    holds: bool
    certificates: tuple[tuple[Vector, LocalizationCertificate], ...]
    witness: Vector | None


@dataclass(frozen=True)
class FacetCriterionB:
    facet_id: int
    saturated: bool
    height_one_generator: int | None

    @property
    def holds(self) -> bool:
        return self.saturated and self.height_one_generator is not None


def r1_criterion_A(M: AffineMonoid) -> list[FacetCriterionA]:
    """Per facet: every Hilbert basis element (and unit of M̄) lies in M + Z(M ∩ F)."""
    HB = hilbert_basis(M)
    checks = list(HB.unit_basis.basis) + list(HB.elements)
    out = []
    for F in M.facets:
        certs, witness = [], None
        for h in checks:
            cert = M.localization_certificate(F.facet_id, h)
            if cert is None:
                witness = h
                break
            certs.append((h, cert))
        out.append(FacetCriterionA(F.facet_id, witness is None, tuple(certs), witness))
    return out


def r1_criterion_B(M: AffineMonoid) -> list[FacetCriterionB]:
    """Per facet: Z(M ∩ F) = G ∩ ker(sigma_F) and some sigma_F(a_i) = 1."""
    out = []
    coords = M.cone.generator_coords
    for F in M.facets:
        on_facet = Lattice.spanned_by([coords[i] for i in F.facet_generators], M.rank)
        kernel = Lattice.spanned_by(integer_kernel([F.sigma], M.rank), M.rank)
        unit = next((i for i, c in enumerate(coords) if dot(F.sigma, c) == 1), None)
        out.append(FacetCriterionB(F.facet_id, on_facet == kernel, unit))
    return out


@dataclass(frozen=True)
class R1Verdict:
    value: bool
    criterion_a: tuple[FacetCriterionA, ...]
    criterion_b: tuple[FacetCriterionB, ...]


def check_r1(M: AffineMonoid) -> R1Verdict:
    a = r1_criterion_A(M)
    b = r1_criterion_B(M)
    for fa, fb in zip(a, b):
        if fa.holds != fb.holds:
            raise InvariantViolation(
                f"R1 criteria disagree at facet {fa.facet_id} of {M!r}: A={fa.holds}, B={fb.holds}"
            )
    return R1Verdict(all(f.holds for f in a), tuple(a), tuple(b))


@dataclass(frozen=True)
class S2Verdict:
    """refuted=True carries a witness in (∩_F M_F) \\ M; otherwise S2 is merely plausible."""

    refuted: bool
    witness: Vector | None
    bound: int

    @property
    def exact(self) -> bool:
        return self.refuted


def default_s2_bound(M: AffineMonoid) -> int:
    T = module_generators_of_saturation(M).elements
    top_t = max((M.degree(t) for t in T), default=0)
    top_a = max((M.degree(a) for a in M.minimal_generators), default=0)
    return max(1, top_t + top_a)


def s2_probe(M: AffineMonoid, bound: int | None = None) -> S2Verdict:
    """Search the holes of M up to degree ``bound`` for an element of every M_F."""
    if bound is None:
        bound = default_s2_bound(M)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    lam = M._lam
    units = M._units_c
    low = []
    for t in module_generators_of_saturation(M).elements:
        c = M.group.coordinates(t)
        if any(t) and dot(lam, c) <= bound:
            low.append(c)
    if not low:
        return S2Verdict(False, None, bound)
    # below the bound, membership in M is membership in this finite list
    found = M._elements_up_to(bound)
    elements = sorted((dot(lam, y), y) for y, _ in found.values())
    holes = {}
    for t in low:
        room = bound - dot(lam, t)
        for deg, m in elements:
            if deg > room:
                break
            x = tuple(a + b for a, b in zip(t, m))
            key = units.reduce(x)
            if key not in found:
                holes[key] = x
    by_degree: dict[int, list[Vector]] = {}
    for x in holes.values():
        by_degree.setdefault(dot(lam, x), []).append(x)
    for deg in sorted(by_degree):
        passing = [
            M.canonical(M.to_ambient(x)) for x in by_degree[deg]
            if all(M._in_localization_c(F.facet_id, x) for F in M.facets)
        ]
        if passing:
            return S2Verdict(True, min(passing), bound)
    return S2Verdict(False, None, bound)


# ---------------------------------------------------------------------------
# report


def _vec(v):
    return None if v is None else list(v)


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


@dataclass
class AnalysisReport:
    monoid: AffineMonoid
    hilbert: HilbertBasis
    normal: NormalityVerdict
    r1: R1Verdict
    s2: S2Verdict
    module_generators: ModuleGenerators
    w_ideal: MonoidIdeal | None
    w_bar: MonoidIdeal | None
    w_bar_over_monoid: MonoidIdeal | None
    codim_check: CodimCheck | None
    endo_check: EndomorphismCheck | None
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self, include_timings: bool = False) -> dict[str, Any]:
        M = self.monoid
        out: dict[str, Any] = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "monoid": {
                "name": M.name,
                "ambient_rank": M.ambient_rank,
                "generators": [list(g) for g in M.generators],
                "rank": M.rank,
                "units_rank": M.units.rank,
                "positive": M.is_positive,
                "facet_count": len(M.facets),
                "facets": [[_num(x) for x in F.ambient] for F in M.facets],
                "grading": [_num(x) for x in M.grading.ambient],
                "minimal_generators": [list(g) for g in M.minimal_generators],
                "depth_bound": M.depth_bound(),
            },
            "hilbert_basis": {
                "elements": [list(h) for h in self.hilbert.elements],
                "units": [list(u) for u in self.hilbert.unit_basis.basis],
                "exact": True,
            },
            "normal": {"value": self.normal.normal, "witness": _vec(self.normal.witness), "exact": True},
            "r1": {
                "value": self.r1.value,
                "exact": True,
                "criterion_a": [
                    {
                        "facet": f.facet_id,
                        "holds": f.holds,
                        "witness": _vec(f.witness),
                        "certificates": [
                            {
                                "element": list(h),
                                "multiplicities": list(c.multiplicities),
                                "lattice_part": list(c.lattice_part),
                            }
                            for h, c in f.certificates
                        ],
                    }
                    for f in self.r1.criterion_a
                ],
                "criterion_b": [
                    {
                        "facet": f.facet_id,
                        "saturated": f.saturated,
                        "height_one_generator": f.height_one_generator,
                        "holds": f.holds,
                    }
                    for f in self.r1.criterion_b
                ],
            },
            "s2_bounded": {
                "value": False if self.s2.refuted else "plausible",
                "witness": _vec(self.s2.witness),
                "bound": self.s2.bound,
                "exact": self.s2.exact,
            },
            "module_generators": {
                "elements": [list(t) for t in self.module_generators.elements],
                "exact": self.module_generators.exact,
                "bound": self.module_generators.bound,
            },
            "w_ideal": None,
            "w_bar": None,
            "codim_check": None,
            "endo_check": None,
        }
        if self.w_ideal is not None:
            out["w_ideal"] = {
                "generators": [list(w) for w in self.w_ideal.degrees],
                "exact": self.w_ideal.exact,
                "bound": self.w_ideal.bound,
            }
            out["w_bar"] = {
                "over_saturation": [list(w) for w in self.w_bar.degrees],
                "over_monoid": [list(w) for w in self.w_bar_over_monoid.degrees],
                "exact": self.w_bar_over_monoid.exact,
                "bound": self.w_bar_over_monoid.bound,
            }
            out["codim_check"] = {
                "value": self.codim_check.holds,
                "meaning": "consistent with R1" if self.codim_check.holds else "dim(W_bar/W) >= d-1",
                "facets": [
                    {"facet": f.facet_id, "holds": f.holds, "witness": _vec(f.witness)}
                    for f in self.codim_check.facets
                ],
                "exact": self.codim_check.exact,
            }
            out["endo_check"] = {
                "value": self.endo_check.equals_saturation,
                "members": [list(t) for t in self.endo_check.members],
                "exact": self.endo_check.exact,
            }
        if include_timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out

    def to_text(self) -> str:
        M = self.monoid
        d = self.to_dict()
        lines = [
            f"monoid {M.name or '<unnamed>'}: rank {M.rank} in Z^{M.ambient_rank}, "
            f"{len(M.facets)} facets, units rank {M.units.rank}",
            f"  minimal generators: {d['monoid']['minimal_generators']}",
            f"  hilbert basis of saturation: {d['hilbert_basis']['elements']}",
            f"normal: {self.normal.normal}"
            + (f" (witness {list(self.normal.witness)})" if self.normal.witness else ""),
            f"R1: {self.r1.value}",
        ]
        for fa, fb in zip(self.r1.criterion_a, self.r1.criterion_b):
            sigma = d["monoid"]["facets"][fa.facet_id]
            lines.append(
                f"  facet {fa.facet_id} sigma={sigma}: A={fa.holds} B={fb.holds}"
                f" (saturated={fb.saturated}, height-one generator={fb.height_one_generator})"
            )
        s2 = d["s2_bounded"]
        lines.append(
            "S2: refuted, witness " + str(s2["witness"]) if self.s2.refuted
            else f"S2: plausible up to degree {s2['bound']} (not certified)"
        )
        lines.append(f"module generators of saturation over M: {d['module_generators']['elements']}")
        if self.w_ideal is not None:
            lines += [
                f"W_R generators: {d['w_ideal']['generators']}",
                f"W_bar generators over saturation: {d['w_bar']['over_saturation']}",
                f"W_bar generators over M: {d['w_bar']['over_monoid']}",
                f"codim check dim(W_bar/W_R) < d-1: {self.codim_check.holds}",
                f"End(W_bar) = saturation: {self.endo_check.equals_saturation}",
            ]
        flags = [k for k in ("w_ideal", "w_bar", "codim_check", "endo_check")
                 if d[k] is not None and not d[k]["exact"]]
        if not d["module_generators"]["exact"]:
            flags.append("module_generators")
        if flags:
            lines.append("bound-limited: " + ", ".join(flags))
        return "\n".join(lines)


def _check_report(rep: AnalysisReport) -> None:
    M = rep.monoid

    def need(cond: bool, what: str):
        if not cond:
            raise InvariantViolation(f"{what} violated for {M!r}")

    need(not rep.normal.normal or rep.r1.value, "normal => R1")
    need(not rep.normal.normal or not rep.s2.refuted, "normal => S2 not refuted")
    if M.rank == 1:
        need(rep.r1.value == rep.normal.normal, "d = 1 => (R1 <=> normal)")
    if rep.r1.value and rep.codim_check is not None and rep.codim_check.exact:
        need(rep.codim_check.holds, "R1 => dim(W_bar/W_R) < d-1")
    if rep.r1.value and rep.endo_check is not None and rep.endo_check.exact:
        need(rep.endo_check.equals_saturation, "R1 => End(W_bar) = saturation")


def analyze(M: AffineMonoid, bound: int | None = None) -> AnalysisReport:
    """Run every procedure on M, cross-check the results, and assemble a report.

    ``bound`` replaces the default degree bound of the bounded searches.
    """
    timings: dict[str, float] = {}

    def timed(label, fn, *args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        timings[label] = time.perf_counter() - start
        return result

    hb = timed("hilbert_basis", hilbert_basis, M)
    normal = timed("is_normal", is_normal, M)
    r1 = timed("check_r1", check_r1, M)
    T = timed("module_generators", module_generators_of_saturation, M, bound)
    s2 = timed("s2_probe", s2_probe, M, bound)
    w = w_bar = w_bar_m = codim = endo = None
    if M.rank > 0:
        w = timed("interior_ideal", interior_ideal, M, bound)
        w_bar = timed("saturated_interior_ideal", saturated_interior_ideal, M)
        w_bar_m = timed("r_module_generators", r_module_generators, w_bar, bound)
        codim = timed("quotient_codim_check", quotient_codim_check, w, w_bar)
        endo = timed("endomorphism_monoid", endomorphism_monoid, w_bar_m)
    rep = AnalysisReport(M, hb, normal, r1, s2, T, w, w_bar, w_bar_m, codim, endo, timings)
    _check_report(rep)
    return rep
