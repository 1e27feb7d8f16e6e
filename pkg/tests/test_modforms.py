"""Tests for eta-quotient structure checks and congruence comparison.

Anchors: Kronecker symbols against brute-force quadratic residues, the
discriminant form's coefficients (Ramanujan tau), and the weight-82 pair of
level-18/36 eta-quotients whose Sturm-bound comparison closes the
theorem chain downstream.
"""

import random
from fractions import Fraction

import pytest

from pdotq.modforms import (
    CongruenceCheck,
    EtaQuotient,
    character_value,
    congruent_upto,
    cusp_order,
    kronecker_symbol,
    modularity_check,
    q_expansion,
    sturm_bound,
    u_operator,
    weight,
)
from pdotq.series import DomainMismatchError, TruncSeries, euler_factor


def eta_pow_family(k, kind):
    """The four eta-quotient families used by the power-of-3 theorems."""
    if kind in ("A1", "B1"):
        exps = {1: 3 ** (k + 3) - 13, 2: 8, 3: -(3 ** (k + 2) - 7)}
        scalar = 36 if kind == "A1" else 2 ** (k + 2) * 3 ** (k + 2)
        return EtaQuotient(18, exps, scalar)
    beta = 2 * k + 1 if k % 2 == 0 else 0
    exps = {1: 3 ** (k + 2) - 6, 2: 3, 3: -(3 ** (k + 1) - 2), 6: 3}
    scalar = 6 if kind == "A2" else 2 ** beta * 3 ** (k + 1)
    return EtaQuotient(36, exps, scalar)


# --- Kronecker symbol ---

def test_kronecker_against_quadratic_residues():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29):
        residues = {x * x % p for x in range(1, p)}
        for a in range(-30, 31):
            if a % p == 0:
                expected = 0
            elif a % p in residues:
                expected = 1
            else:
                expected = -1
            assert kronecker_symbol(a, p) == expected, f"({a}/{p})"


def test_kronecker_minus_three_detects_prime_class_mod_six():
    for p in (5, 11, 17, 23, 29, 41, 47):
        assert kronecker_symbol(-3, p) == -1, f"p={p} is -1 mod 6"
    for p in (7, 13, 19, 31, 37, 43):
        assert kronecker_symbol(-3, p) == 1, f"p={p} is 1 mod 6"


def test_kronecker_conventions_at_two_zero_negative():
    assert [kronecker_symbol(a, 2) for a in (1, 3, 5, 7)] == [1, -1, -1, 1]
    assert kronecker_symbol(4, 2) == 0
    assert kronecker_symbol(1, 0) == 1
    assert kronecker_symbol(-1, 0) == 1
    assert kronecker_symbol(5, 0) == 0
    assert kronecker_symbol(2, 15) == 1
    assert kronecker_symbol(-1, -1) == -1
    assert kronecker_symbol(3, -5) == kronecker_symbol(3, 5)


def test_kronecker_multiplicative_in_both_arguments():
    rng = random.Random(31337)
    for _ in range(300):
        a = rng.randrange(-40, 41)
        b = rng.randrange(-40, 41)
        n = rng.randrange(1, 40)
        m = rng.randrange(1, 40)
        assert kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n)
        assert kronecker_symbol(a, n * m) == kronecker_symbol(a, n) * kronecker_symbol(a, m)


# --- structure of the four families ---

def test_weight_of_level18_family_at_k2():
    assert weight(eta_pow_family(2, "A1")) == 82
    assert weight(eta_pow_family(2, "B1")) == 82


def test_weight_of_level36_family_at_k3():
    assert weight(eta_pow_family(3, "A2")) == 82
    assert eta_pow_family(3, "A2").exponents == {1: 237, 2: 3, 3: -79, 6: 3}


def test_modularity_check_passes_for_all_families():
    for k in range(4):
        for kind in ("A1", "B1", "A2", "B2"):
            v = modularity_check(eta_pow_family(k, kind))
            assert v.ok, f"{kind} at k={k}: {v}"
            assert v.integral_weight
            assert all(o >= 0 for o in v.cusp_orders.values())


def test_cusp_orders_of_weight82_level18_form():
    v = modularity_check(eta_pow_family(2, "A1"))
    assert v.cusp_orders == {
        1: Fraction(157),
        2: Fraction(83),
        3: Fraction(1),
        6: Fraction(1),
        9: Fraction(1),
        18: Fraction(1),
    }


def test_character_is_trivial_for_all_families():
    for k in range(4):
        for kind in ("A1", "B1", "A2", "B2"):
            eq = eta_pow_family(k, kind)
            for d in (1, 5, 7, 11, 13, 25):
                assert character_value(eq, d) == 1, f"{kind} k={k} d={d}"
            assert character_value(eq, 3) == 0


def test_valuation_matches_cusp_order_at_level():
    for k in range(4):
        for kind in ("A1", "B1", "A2", "B2"):
            eq = eta_pow_family(k, kind)
            x = q_expansion(eq, 8)
            assert x.valuation() == cusp_order(eq, eq.level) == 1


def test_cusp_order_rejects_non_divisor():
    with pytest.raises(ValueError):
        cusp_order(eta_pow_family(0, "A1"), 5)


# --- q-expansions ---

def test_discriminant_form_gives_tau():
    delta = EtaQuotient(1, {1: 24})
    assert q_expansion(delta, 7).coeffs == (0, 1, -24, 252, -1472, 4830, -6048)


def test_expansion_scalar_and_residue_domain():
    eq = EtaQuotient(6, {1: -2, 2: 1, 3: 2, 6: -1}, scalar=5)
    exact = q_expansion(eq, 40)
    assert exact.coeffs[0] == 5
    assert q_expansion(eq, 40, modulus=9) == exact.reduce_mod(9)


def test_expansion_rejects_fractional_leading_power():
    with pytest.raises(ValueError):
        q_expansion(EtaQuotient(1, {1: 1}), 10)


def test_expansion_rejects_negative_leading_power():
    with pytest.raises(ValueError):
        q_expansion(EtaQuotient(1, {1: -24}), 10)


def test_eta_quotient_validates_divisors():
    with pytest.raises(ValueError):
        EtaQuotient(18, {5: 1})


# --- Sturm bounds ---

def test_sturm_bound_values():
    assert sturm_bound(82, 18) == 246
    assert sturm_bound(82, 36) == 492
    assert sturm_bound(1, 1) == 0
    assert sturm_bound(2, 11) == 2
    assert sturm_bound(4, 6, same_character=False) == 8


def test_sturm_bound_rejects_bad_input():
    with pytest.raises(ValueError):
        sturm_bound(0, 18)
    with pytest.raises(ValueError):
        sturm_bound(82, 0)


# --- U operator and congruence comparison ---

def test_u_operator_keeps_multiples():
    s = TruncSeries(list(range(12)))
    assert u_operator(s, 3).coeffs == (0, 3, 6, 9)
    assert u_operator(s, 1) == s


def test_u_operator_composes():
    rng = random.Random(8128)
    for _ in range(200):
        order = rng.randrange(1, 60)
        s = TruncSeries([rng.randrange(-9, 10) for _ in range(order)])
        d1 = rng.randrange(1, 5)
        d2 = rng.randrange(1, 5)
        assert u_operator(u_operator(s, d1), d2) == u_operator(s, d1 * d2)


def test_congruent_upto_agreement_and_failure():
    a = TruncSeries([1, 9, 17, 4])
    b = TruncSeries([9, 1, 2, 4])
    assert congruent_upto(a, b, 8, 1) == CongruenceCheck(True, None, None, None)
    got = congruent_upto(a, b, 8, 3)
    assert got == CongruenceCheck(False, 2, 1, 2)
    got = congruent_upto(a, b, 5, 3)
    assert got == CongruenceCheck(False, 0, 1, 4)
    assert congruent_upto(b, a, 8, 3) == CongruenceCheck(False, 2, 2, 1)


def test_congruent_upto_needs_enough_coefficients():
    a = TruncSeries([1, 2])
    with pytest.raises(ValueError):
        congruent_upto(a, a, 5, 2)


def test_congruent_upto_rejects_incompatible_rings():
    a = TruncSeries([1, 2, 3], modulus=8)
    b = TruncSeries([1, 2, 3], modulus=8)
    with pytest.raises(DomainMismatchError):
        congruent_upto(a, b, 3, 2)


def test_sturm_comparison_closes_weight82_congruence():
    """The U(3)^2 image of the level-18 form agrees with its companion mod
    3^5 through the Sturm bound 246, which settles the 72n congruence."""
    modulus, bound = 243, 246
    a = q_expansion(eta_pow_family(2, "A1"), 9 * (bound + 1), modulus)
    f21 = u_operator(u_operator(a, 3), 3)
    b21 = q_expansion(eta_pow_family(2, "B1"), bound + 1, modulus)
    assert congruent_upto(f21, b21, modulus, bound).ok
    # and the companion reduces to the stated product form
    rhs = 1296 * (
        euler_factor(1, 2, bound + 1, modulus)
        * euler_factor(2, 2, bound + 1, modulus)
        * euler_factor(3, 2, bound + 1, modulus)
        * euler_factor(6, 2, bound + 1, modulus)
    )
    assert congruent_upto(b21, rhs.shift(1), modulus, bound).ok
