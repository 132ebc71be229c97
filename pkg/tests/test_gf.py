from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from pumdp.errors import FieldError, ParameterError, UsageError
from pumdp.gf import (
    Fe,
    FieldTower,
    Level,
    Poly,
    counting_mults,
    enumerate_elements,
    first_irreducible,
    min_poly_degree,
    poly_is_irreducible,
    prime_power_split,
    smallest_prime_power_at_least,
    tower_create,
    tower_for_q,
)
from oracles import NaiveField, is_irreducible_trial, make_towers, naive_of

TOWERS = make_towers()


@st.composite
def tower_and_elems(draw, count=3, nonzero=False):
    t = draw(st.sampled_from(TOWERS))
    lo = 1 if nonzero else 0
    vals = [draw(st.integers(lo, t.order - 1)) for _ in range(count)]
    return t, [Fe(t, v, Level.EXT) for v in vals]


# ---------------------------------------------------------------------------
# integer helpers


def test_prime_power_split():
    assert prime_power_split(16) == (2, 4)
    assert prime_power_split(11) == (11, 1)
    assert prime_power_split(12) is None
    assert prime_power_split(1) is None


@pytest.mark.parametrize("n,q", [(5, 5), (6, 7), (11, 11), (13, 13), (14, 16), (15, 16), (17, 17), (18, 19)])
def test_smallest_prime_power(n, q):
    assert smallest_prime_power_at_least(n) == q


# ---------------------------------------------------------------------------
# arithmetic against the naive oracle


@settings(max_examples=1000, deadline=None)
@given(tower_and_elems())
def test_field_axioms(te):
    t, (a, b, c) = te
    zero, one = t.zero(), t.one()
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a and a * one == a
    assert a + (-a) == zero
    assert a - b == a + (-b)
    if a:
        assert a * a.inverse() == one
        assert (a / a) == one


@settings(max_examples=1000, deadline=None)
@given(tower_and_elems(count=2))
def test_mul_matches_naive(te):
    t, (a, b) = te
    F = naive_of(t)
    assert (a * b).value == F.mul(a.value, b.value)
    assert (a + b).value == F.add(a.value, b.value)


@settings(max_examples=300, deadline=None)
@given(tower_and_elems(count=1, nonzero=True))
def test_inverse_matches_naive(te):
    t, (a,) = te
    assert a.inverse().value == naive_of(t).inv(a.value)


@settings(max_examples=300, deadline=None)
@given(tower_and_elems(count=1))
def test_frobenius_fixes_everything(te):
    t, (a,) = te
    assert a ** t.order == a
    if a:
        assert a ** (t.order - 1) == t.one()


def test_f4_x_squared():
    t = tower_create(2, 2)
    x = t.element(2, Level.BASE)
    assert t.g == (1, 1, 1)
    assert (x * x).value == 3  # x + 1


def test_f5_small_table():
    t = tower_create(5)
    assert [t.einv(a) for a in range(1, 5)] == [1, 3, 2, 4]


def test_inverse_of_zero():
    with pytest.raises(FieldError):
        tower_create(5).zero().inverse()


def test_mixed_towers_rejected():
    a = tower_create(5).one()
    b = tower_create(7).one()
    with pytest.raises(UsageError):
        a + b


def test_level_promotion():
    t = tower_create(5, 1, 2, seed=1)
    b = t.element(3, Level.BASE)
    e = t.element(7, Level.EXT)
    assert (b * b).level is Level.BASE
    assert (b + e).level is Level.EXT
    assert b.embed().level is Level.EXT and b.embed() == b


def test_element_vector_forms():
    t = tower_create(2, 2, 2, seed=3)
    # code = c0 + c1 * 4, coefficient digits lowest first
    e = t.element([[1, 1], [0, 1]], Level.EXT)
    assert e.value == 3 + 2 * 4
    assert e.coeffs == ((1, 1), (0, 1))
    with pytest.raises(UsageError):
        t.element(16 + 1, Level.EXT)
    with pytest.raises(UsageError):
        t.element([1, 2, 3], Level.EXT)


def test_counting_mults_nests():
    t = tower_create(7)
    a, b = t.element(3), t.element(5)
    with counting_mults() as outer:
        a * b
        with counting_mults() as inner:
            a * b
            a * a
        a + b
    assert inner.count == 2
    assert outer.count == 3


# ---------------------------------------------------------------------------
# irreducibility


@pytest.mark.parametrize("p,m,expected", [(2, 2, (1, 1, 1)), (2, 3, (1, 1, 0, 1)), (2, 4, (1, 1, 0, 0, 1)), (3, 2, (1, 0, 1))])
def test_first_irreducible(p, m, expected):
    assert first_irreducible(p, m) == expected


@pytest.mark.parametrize("q,deg", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2), (5, 3)])
def test_irreducibility_matches_trial_division(q, deg):
    t = tower_for_q(q)
    F = NaiveField(t.p, t.m, t.g)
    import itertools

    agree = 0
    for low in itertools.product(range(q), repeat=deg):
        f = Poly.from_codes(t, list(low) + [1])
        assert poly_is_irreducible(f) == is_irreducible_trial(list(low) + [1], F), low
        agree += 1
    assert agree == q**deg


def test_reducible_modulus_rejected_with_factor_degree():
    with pytest.raises(FieldError, match="degree 1"):
        FieldTower(5, 1, None, 2, (0, 0, 1))  # y^2
    with pytest.raises(FieldError):
        FieldTower(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2


def test_non_monic_rejected():
    with pytest.raises((FieldError, UsageError)):
        FieldTower(5, 1, None, 2, (2, 0, 2))


def test_bad_parameters():
    with pytest.raises(ParameterError):
        tower_create(6)
    with pytest.raises(ParameterError):
        tower_for_q(12)


def test_random_irreducible_is_seeded():
    a = tower_create(11, 1, 3, seed=5)
    b = tower_create(11, 1, 3, seed=5)
    assert a.f == b.f
    assert is_irreducible_trial(list(a.f), NaiveField(11))


def test_min_poly_degree_of_generator():
    t = tower_create(5, 1, 3, seed=0)
    y = t.generator()
    assert min_poly_degree(y) == 3
    assert min_poly_degree(y * y) == 3
    assert min_poly_degree(t.element(4)) == 1


def test_enumerate_elements_capacity():
    from pumdp.errors import CapacityError

    t = tower_create(5)
    assert [e.value for e in enumerate_elements(t, Level.BASE, 3)] == [0, 1, 2]
    with pytest.raises(CapacityError):
        enumerate_elements(t, Level.BASE, 6)


def test_str_forms():
    t = tower_create(2, 2, 2, seed=3)
    assert str(t.zero()) == "0"
    assert str(t.generator()) == "y"
    assert str(t.element(2, Level.BASE)) == "x"
