import json

import pytest

from affmonoid.monoid import build
from affmonoid.serre import (
    InvariantViolation,
    _check_report,
    analyze,
    check_r1,
    r1_criterion_A,
    r1_criterion_B,
    s2_probe,
)


def test_criterion_a(example1, example2, num23):
    assert all(f.holds for f in r1_criterion_A(example1))
    assert all(f.holds for f in r1_criterion_A(example2))
    (facet,) = r1_criterion_A(num23)
    assert not facet.holds and facet.witness == (1,)


def test_criterion_a_certificates(example1):
    for facet in r1_criterion_A(example1):
        for h, cert in facet.certificates:
            total = tuple(
                sum(c * g[k] for c, g in zip(cert.multiplicities, example1.generators))
                + cert.lattice_part[k]
                for k in range(2)
            )
            assert total == h


def test_criterion_b(example1, num23, halfplane):
    y_facet = next(f for f in r1_criterion_B(example1) if example1.facets[f.facet_id].ambient == (0, 1))
    assert y_facet.saturated
    assert example1.generators[y_facet.height_one_generator] == (3, 1)
    (facet,) = r1_criterion_B(num23)
    assert facet.saturated and facet.height_one_generator is None
    (facet,) = r1_criterion_B(halfplane)
    assert facet.holds


def test_check_r1(example1, example2, num23):
    assert check_r1(example1).value
    assert check_r1(example2).value
    assert not check_r1(num23).value


def test_group_is_regular():
    M = build([(1, 0), (0, 1), (-1, -1)])
    assert check_r1(M).value
    rep = analyze(M)
    assert rep.normal.normal


def test_s2_probe(example1, example2, nn2):
    assert s2_probe(example2).witness == (1, 0)
    assert s2_probe(example1).witness == (1, 1)
    verdict = s2_probe(nn2)
    assert not verdict.refuted and not verdict.exact
    with pytest.raises(ValueError):
        s2_probe(nn2, 0)


def test_analyze_example1(example1):
    d = analyze(example1).to_dict()
    assert d["schema_version"] == 1
    assert (d["normal"]["value"], d["r1"]["value"], d["s2_bounded"]["value"]) == (False, True, False)
    assert d["w_ideal"]["generators"] == [[1, 3], [2, 2], [3, 1]]
    assert d["w_bar"]["over_monoid"] == [[1, 1], [2, 2]]
    assert "timings" not in d
    json.dumps(d)


def test_analyze_text_and_timings(example2):
    rep = analyze(example2)
    assert "R1: True" in rep.to_text()
    assert set(rep.to_dict(include_timings=True)["timings"]) >= {"hilbert_basis", "check_r1"}


def test_analyze_zero_monoid():
    d = analyze(build([(0, 0)])).to_dict()
    assert d["w_ideal"] is None and d["endo_check"] is None
    assert d["normal"]["value"] and d["r1"]["value"]


def test_report_invariants_are_fatal(example1):
    rep = analyze(example1)
    rep.r1 = check_r1(build([(2,), (3,)]))
    rep.normal = type(rep.normal)(True, None)
    with pytest.raises(InvariantViolation):
        _check_report(rep)


def test_one_dimensional_r1_is_normality():
    for gens in ([(1,)], [(2,), (3,)], [(3,), (5,), (7,)], [(2,), (5,)], [(4,), (6,), (9,)]):
        M = build(gens)
        rep = analyze(M)
        assert rep.r1.value == rep.normal.normal
