import json

import pytest
from hypothesis import given, settings, strategies as st

from affmonoid.exactlin import Lattice
from affmonoid.monoid import (
    DescriptionError,
    build,
    load_description,
    minimal_generators,
    parse_description,
    to_description,
)


def test_build_example1(example1):
    assert example1.rank == 2
    assert example1.group == Lattice.spanned_by([(1, 1), (2, 0)], 2)
    assert example1.is_positive


def test_build_other_shapes(num23, halfplane):
    assert num23.rank == 1 and num23.is_positive
    assert halfplane.units == Lattice.spanned_by([(1, 0)], 2)
    assert halfplane.rank == 2


def test_membership(example1, num23):
    assert not example1.contains((1, 1))
    cert = example1.certificate((2, 4))
    assert cert is not None
    assert tuple(sum(c * g[k] for c, g in zip(cert, example1.generators)) for k in range(2)) == (2, 4)
    assert not num23.contains((1,))
    assert num23.contains((7,))


def test_membership_with_units(halfplane):
    cert = halfplane.certificate((-7, 3))
    assert all(c >= 0 for c in cert)
    assert tuple(sum(c * g[k] for c, g in zip(cert, halfplane.generators)) for k in range(2)) == (-7, 3)
    assert not halfplane.contains((4, -1))


def test_enumerate(nn2, example1, num23):
    assert set(nn2.elements_up_to(2)) == {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}
    assert set(example1.elements_up_to(4)) == {
        (0, 0), (2, 0), (0, 2), (1, 3), (3, 1), (2, 2), (4, 0), (0, 4)
    }
    assert num23.elements_up_to(4) == [(0,), (2,), (3,), (4,)]
    for v, cert in example1.enumerate_up_to(6).items():
        assert tuple(sum(c * g[k] for c, g in zip(cert, example1.generators)) for k in range(2)) == v


def test_minimal_generators():
    M = build([(2, 0), (0, 2), (1, 3), (3, 1), (2, 2)])
    assert sorted(minimal_generators(M)) == [(0, 2), (1, 3), (2, 0), (3, 1)]
    assert sorted(minimal_generators(build([(1, 0), (0, 1)]))) == [(0, 1), (1, 0)]
    assert minimal_generators(build([(2,), (3,), (5,)])) == [(2,), (3,)]


def test_facet_localization(example1):
    # (1,1) = (3,1) - (2,0) with (2,0) on the facet y = 0
    y_facet = next(F.facet_id for F in example1.facets if F.ambient == (0, 1))
    cert = example1.localization_certificate(y_facet, (1, 1))
    assert cert is not None
    total = tuple(
        sum(c * g[k] for c, g in zip(cert.multiplicities, example1.generators)) + cert.lattice_part[k]
        for k in range(2)
    )
    assert total == (1, 1)
    assert cert.lattice_part in example1.facet_lattice(y_facet)


def test_description_round_trip(tmp_path, example1):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(to_description(example1)))
    M = load_description(path)
    assert M.generators == example1.generators
    assert M.name == "example1"


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"name": "x", "ambient_rank": 2},
        {"name": "x", "ambient_rank": 2, "generators": [[1, 0]], "extra": 1},
        {"name": "x", "ambient_rank": 2, "generators": [[1, 0, 0]]},
        {"name": "x", "ambient_rank": 2, "generators": [[1, 0.5]]},
        {"name": "x", "ambient_rank": 2, "generators": [[1, 0]], "schema_version": 2},
        {"name": "x", "ambient_rank": 0, "generators": []},
    ],
)
def test_bad_descriptions(obj):
    with pytest.raises(DescriptionError):
        parse_description(obj)


def test_unreadable_file(tmp_path):
    with pytest.raises(DescriptionError):
        load_description(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(DescriptionError):
        load_description(bad)


gen_lists = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=5)


@settings(max_examples=60, deadline=None)
@given(gen_lists, st.tuples(st.integers(-2, 8), st.integers(-2, 8)))
def test_membership_matches_enumeration(gens, v):
    if not any(any(g) for g in gens):
        return
    M = build(gens)
    deg = M.degree(v)
    if deg != int(deg) or deg < 0:
        assert not M.contains(v)
        return
    listed = M.canonical(v) in set(M.elements_up_to(int(deg)))
    assert M.contains(v) == listed
