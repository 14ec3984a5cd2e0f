import pytest

from affmonoid.ideals import (
    MonoidIdeal,
    endomorphism_monoid,
    interior_ideal,
    quotient_codim_check,
    r_module_generators,
)
from affmonoid.monoid import build
from affmonoid.normalization import saturated_interior_ideal


def test_interior_ideal(example1, example2, nn2):
    assert interior_ideal(example1).degrees == ((1, 3), (2, 2), (3, 1))
    assert set(interior_ideal(example2).degrees) == {(1, 1), (2, 1)}
    assert interior_ideal(nn2).degrees == ((1, 1),)
    assert interior_ideal(build([(1, 0, 0), (0, 1, 0), (0, 0, 1)])).degrees == ((1, 1, 1),)


def test_interior_ideal_bound(example1):
    W = interior_ideal(example1, bound=3)
    assert W.degrees == () and not W.exact


def test_r_module_generators(example1, example2, nn2):
    assert r_module_generators(saturated_interior_ideal(example1)).degrees == ((1, 1), (2, 2))
    assert set(r_module_generators(saturated_interior_ideal(example2)).degrees) == {(1, 1), (2, 1)}
    W = saturated_interior_ideal(nn2)
    assert r_module_generators(W).degrees == W.degrees


def test_endomorphisms(example1):
    Wbar = saturated_interior_ideal(example1)
    assert endomorphism_monoid(Wbar).equals_saturation
    assert endomorphism_monoid(r_module_generators(Wbar)).equals_saturation
    # informative only: W_R itself is stable under (1,1) as well
    assert endomorphism_monoid(interior_ideal(example1)).equals_saturation


def test_endomorphisms_fail_for_a_non_stable_ideal(example1):
    I = MonoidIdeal(example1, "monoid", ((2, 0),))
    check = endomorphism_monoid(I)
    assert check.members == ((0, 0),)
    assert not check.equals_saturation


def test_codim_check(example1, num23, nn2):
    assert quotient_codim_check(interior_ideal(example1), saturated_interior_ideal(example1)).holds
    W = interior_ideal(nn2)
    assert quotient_codim_check(W, saturated_interior_ideal(nn2)).holds
    check = quotient_codim_check(interior_ideal(num23), saturated_interior_ideal(num23))
    assert not check.holds
    assert check.facets[0].witness == (1,)


def test_codim_check_precondition(example1):
    with pytest.raises(ValueError):
        quotient_codim_check(saturated_interior_ideal(example1), interior_ideal(example1))


def test_bad_ideal_arguments(example1):
    with pytest.raises(ValueError):
        MonoidIdeal(example1, "ring", ())
    with pytest.raises(ValueError):
        MonoidIdeal(example1, "monoid", (), intrinsic="boundary")
    with pytest.raises(ValueError):
        endomorphism_monoid(MonoidIdeal(example1, "monoid", ()))
    with pytest.raises(ValueError):
        interior_ideal(build([(0, 0)]))
