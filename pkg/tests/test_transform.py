"""Digit map, transform, and orbit behaviour against independent oracles."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zorbit.errors import BudgetExceededError, ParameterDomainError
from zorbit.kadic import MAX_BASE, to_digits
from zorbit.transform import DEFAULT_MAX_STEPS, Params, digit_step, orbit, z_transform

from oracles import digit_map_by_formula, naive_orbit, z_by_digit_sum

moduli = st.integers(min_value=2, max_value=1_000)
digits_any = st.integers(min_value=0, max_value=10**9)


# -- Params ------------------------------------------------------------------


@pytest.mark.parametrize(
    "k,p,t,s",
    [
        (137, 11, 12, 4),
        (5, 3, 1, 1),
        (10, 5, 1, 4),
        (7, 3, 1, 3),  # k-1 divisible by p forces s = p
        (13, 3, 3, 3),
        (3, 29, 0, 2),  # modulus above the base is fine
    ],
)
def test_params_split(k, p, t, s):
    params = Params(k, p)
    assert (params.t, params.s) == (t, s)
    assert params.k == params.t * params.p + params.s + 1
    assert 1 <= params.s <= params.p


@pytest.mark.parametrize("k,p", [(2, 5), (1, 2), (5, 1), (MAX_BASE + 1, 3), (5, MAX_BASE + 1)])
def test_params_domain_rejected(k, p):
    with pytest.raises(ParameterDomainError):
        Params(k, p)


# -- digit_step --------------------------------------------------------------


def test_digit_step_frozen_examples():
    assert digit_step(78, 11) == 72  # 78 = 7*11 + 1 -> 8*9
    assert digit_step(0, 2) == 0
    assert digit_step(0, 97) == 0
    assert digit_step(1, 3) == 2
    assert digit_step(2, 3) == 1
    assert digit_step(6, 5) == 6  # the fixed digit behind the k=10, p=5 fixed point


def test_digit_step_total_beyond_base():
    # accepts any nonnegative argument, not only digits below some base
    assert digit_step(10**12 + 1, 10**6) == (10**6 + 1) * (10**6 + 2)


def test_digit_step_domain_errors():
    with pytest.raises(ParameterDomainError):
        digit_step(3, 1)
    with pytest.raises(ParameterDomainError):
        digit_step(-1, 5)


@given(digits_any, moduli)
@settings(max_examples=500, deadline=None)
def test_digit_step_matches_quotient_formulas(a, p):
    assert digit_step(a, p) == digit_map_by_formula(a, p)


@given(digits_any, moduli)
@settings(max_examples=300, deadline=None)
def test_exact_divisibility(a, p):
    # residue 1 digits divide by p*p exactly; everything else by p exactly
    j = a % p
    if j == 1:
        assert (a + p - 1) * (a + 2 * p - 1) % (p * p) == 0
    else:
        assert (a + (p - j) % p) % p == 0


# -- z_transform -------------------------------------------------------------


def test_z_transform_frozen_examples():
    assert z_transform(123789, Params(137, 11)) == 81
    assert z_transform(6, Params(5, 3)) == 4
    assert z_transform(0, Params(19, 7)) == 0


@pytest.mark.parametrize("k,p", [(3, 2), (5, 3), (10, 5), (137, 11), (1000, 7), (3, 1000)])
def test_universal_two_cycle(k, p):
    params = Params(k, p)
    assert z_transform(1, params) == 2
    assert z_transform(2, params) == 1


@given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=3, max_value=2_000), moduli)
@settings(max_examples=400, deadline=None)
def test_z_transform_matches_digit_sum_oracle(n, k, p):
    params = Params(k, p)
    assert z_transform(n, params) == z_by_digit_sum(n, k, p)
    assert z_transform(n, params) == sum(digit_step(a, p) for a in to_digits(n, k))


@pytest.mark.parametrize("k,p", [(5, 3), (10, 5), (137, 11), (9, 4)])
def test_single_digit_agreement(k, p):
    params = Params(k, p)
    for n in range(k):
        assert z_transform(n, params) == digit_step(n, p)


@pytest.mark.parametrize("k,p", [(5, 3), (10, 5), (137, 11), (50, 7), (3, 2)])
def test_non_unit_residue_contraction(k, p):
    params = Params(k, p)
    for n in range(2, k):
        if n % p != 1:
            assert z_transform(n, params) < n


def test_negative_value_rejected():
    with pytest.raises(ParameterDomainError):
        z_transform(-1, Params(5, 3))


# -- orbit -------------------------------------------------------------------


def test_orbit_worked_example():
    trace = orbit(123789, Params(137, 11))
    assert trace.values == (123789, 81, 8, 1, 2, 1)
    assert trace.preperiod_length == 3
    assert trace.cycle_length == 2
    assert trace.cycle == (1, 2)


def test_orbit_fixed_point():
    trace = orbit(6, Params(10, 5))
    assert trace.values == (6, 6)
    assert (trace.preperiod_length, trace.cycle_length) == (0, 1)


def test_orbit_two_cycles():
    trace = orbit(4, Params(5, 3))
    assert trace.values == (4, 6, 4)
    assert (trace.preperiod_length, trace.cycle_length) == (0, 2)
    trace = orbit(2, Params(5, 3))
    assert trace.values == (2, 1, 2)
    assert (trace.preperiod_length, trace.cycle_length) == (0, 2)


def test_orbit_zero():
    trace = orbit(0, Params(10, 5))
    assert trace.values == (0, 0)
    assert (trace.preperiod_length, trace.cycle_length) == (0, 1)


def test_orbit_budget_error_carries_partial_trace():
    with pytest.raises(BudgetExceededError) as info:
        orbit(123789, Params(137, 11), max_steps=2)
    assert info.value.partial == (123789, 81, 8)


def test_orbit_rejects_bad_budget():
    with pytest.raises(ParameterDomainError):
        orbit(5, Params(5, 3), max_steps=0)


def test_orbit_default_budget_constant():
    assert DEFAULT_MAX_STEPS == 10_000


def test_orbit_invariants_and_minimality_random():
    rng = random.Random(424242)
    for _ in range(300):
        k = rng.randrange(3, 500)
        p = rng.randrange(2, 100)
        n = rng.randrange(0, 10**9)
        params = Params(k, p)
        trace = orbit(n, params)
        values, lam, cycle_length = naive_orbit(n, k, p)
        assert list(trace.values) == values
        assert trace.preperiod_length == lam
        assert trace.cycle_length == cycle_length
        # consecutive pairs really are transform steps, repeat closes the cycle
        for a, b in zip(trace.values, trace.values[1:]):
            assert z_transform(a, params) == b
        end = lam + cycle_length
        assert trace.values[end] == trace.values[lam]
        assert len(set(trace.values[:end])) == end
