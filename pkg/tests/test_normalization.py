import pytest
from hypothesis import given, settings, strategies as st

from affmonoid.monoid import build
from affmonoid.normalization import (
    caratheodory_bound,
    hilbert_basis,
    is_normal,
    module_generators_of_saturation,
    parallelepiped_points,
    saturated_interior_ideal,
    saturation_contains,
)


def test_parallelepiped_points():
    assert sorted(parallelepiped_points([(2, 0), (0, 2)])) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert sorted(parallelepiped_points([(2, 0), (0, 2)], frozenset({0}))) == [(1, 0), (1, 1), (2, 0), (2, 1)]
    assert list(parallelepiped_points([(1, 0), (0, 1)])) == [(0, 0)]


def test_hilbert_basis_examples(example1, num23):
    assert hilbert_basis(example1).elements == ((0, 2), (1, 1), (2, 0))
    assert hilbert_basis(num23).elements == ((1,),)
    veronese = build([(3, 0), (2, 1), (1, 2), (0, 3)])
    assert set(hilbert_basis(veronese).elements) == {(3, 0), (2, 1), (1, 2), (0, 3)}


def test_hilbert_basis_with_units(halfplane):
    HB = hilbert_basis(halfplane)
    assert HB.elements == ((0, 1),)
    assert HB.unit_basis.rank == 1


def test_normality(example1, example2, nn2):
    assert is_normal(example1).witness == (1, 1)
    assert is_normal(example2).witness == (1, 0)
    assert is_normal(nn2).normal


def test_normality_sees_missing_units():
    M = build([(2, 0, 0), (-2, 0, 0), (1, 0, 1), (0, 0, 1), (0, 1, 0)])
    verdict = is_normal(M)
    assert not verdict.normal
    assert verdict.witness == (1, 0, 0)


def test_module_generators(example1, example2, nn2):
    assert module_generators_of_saturation(example1).elements == ((0, 0), (1, 1))
    assert module_generators_of_saturation(example2).elements == ((0, 0), (1, 0))
    assert module_generators_of_saturation(nn2).elements == ((0, 0),)
    truncated = module_generators_of_saturation(example1, bound=1)
    assert truncated.elements == ((0, 0),) and not truncated.exact


def test_saturated_interior(example1, nn2, num23):
    assert saturated_interior_ideal(example1).degrees == ((1, 1),)
    assert saturated_interior_ideal(nn2).degrees == ((1, 1),)
    assert saturated_interior_ideal(num23).degrees == ((1,),)
    with pytest.raises(ValueError):
        saturated_interior_ideal(build([(0, 0)]))


def test_saturated_interior_on_a_wall():
    # (0,0,1) sits on the wall between the two simplices of the square pyramid
    M = build([(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1), (0, 0, 1)])
    assert saturated_interior_ideal(M).degrees == ((0, 0, 1),)
    sparse = build([(0, 0, 1), (2, 0, 1), (0, 2, 1), (2, 2, 1)])
    assert saturated_interior_ideal(sparse).degrees == ((2, 2, 2),)


gens3 = st.lists(st.tuples(*[st.integers(0, 4)] * 3), min_size=3, max_size=6)


@settings(max_examples=40, deadline=None)
@given(gens3)
def test_module_generators_cover_saturation(gens):
    M = build(gens)
    if M.rank == 0:
        return
    T = module_generators_of_saturation(M).elements
    assert all(M.degree(t) < max(caratheodory_bound(M), 1) for t in T if any(t))
    # every saturation point of small degree is t + m
    for x in M.elements_up_to(4):
        for t in T:
            v = tuple(a + b for a, b in zip(x, t))
            assert saturation_contains(M, v)
    from affmonoid.fuzz import saturation_points

    for y in saturation_points(M, 4):
        v = M.to_ambient(M.cone.lift(y))
        assert any(M.contains(tuple(a - b for a, b in zip(v, t))) for t in T)
