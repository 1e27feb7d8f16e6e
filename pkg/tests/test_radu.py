"""Tests for the congruence verification certificates.

Frozen rationals below were recomputed by hand from the defining
formulas (orbit map, cusp order bounds, verification bound) for small
instances before being asserted here.
"""

import json
import random
from fractions import Fraction

import pytest

from pdotq.partitions import pdo_t
from pdotq.radu import (
    AuxExponents,
    Certificate,
    CriterionNotApplicable,
    DeltaStarFailure,
    LevelNotSquarefree,
    NonnegativityFailure,
    RaduInstance,
    c_r_series,
    delta_star_check,
    divisors,
    nu_bound,
    p_mr,
    p_set,
    p_star,
    radu_verify,
    sl2_index,
    squares_mod,
)
from pdotq.series import TruncSeries

# f_2 f_3^2 f_12^2 / (f_1^2 f_6): coefficient n is pdo_t(n + 1)
PDO_T_R = {1: -2, 2: 1, 3: 2, 6: -1, 12: 2}

# every (m, t) pair certified in the power-of-two family, with its modulus
TABLE_ROWS = [
    (6, 2, 4), (6, 5, 8),
    (12, 2, 4), (12, 5, 8), (12, 8, 4), (12, 11, 16),
    (24, 5, 8), (24, 11, 16), (24, 17, 8), (24, 23, 32),
    (48, 11, 16), (48, 23, 32), (48, 35, 16), (48, 47, 64),
    (96, 23, 32), (96, 47, 64), (96, 71, 32), (96, 95, 128),
    (192, 47, 64), (192, 95, 128), (192, 143, 64), (192, 191, 256),
]


def pdo_t_instance(m, t):
    return RaduInstance(m=m, M=12, level=12, r=dict(PDO_T_R), t=t)


def test_squares_mod_frozen_tables():
    assert squares_mod(1) == [0]
    assert squares_mod(5) == [1, 4]
    assert squares_mod(8) == [1]
    assert squares_mod(24) == [1]
    assert squares_mod(144) == [1, 25, 49, 73, 97, 121]
    with pytest.raises(ValueError):
        squares_mod(0)


def test_squares_of_units_mod_24m_are_one_mod_24():
    rng = random.Random(4021)
    for _ in range(100):
        m = rng.randrange(1, 60)
        for s in squares_mod(24 * m):
            assert s % 24 == 1


def test_p_set_fixed_points():
    # each certified progression is alone in its orbit
    for m, t, _ in TABLE_ROWS:
        assert p_set(pdo_t_instance(m, t)) == [t]


def test_p_set_orbit_and_closure():
    # m = 5 gives a genuine two-element orbit: s runs over {1, 49} mod 120
    # and t -> s(t+1) - 1 mod 5 swaps 0 and 3
    inst = RaduInstance(m=5, M=12, level=12, r=dict(PDO_T_R), t=0)
    orbit = p_set(inst)
    assert orbit == [0, 3]
    for t_prime in orbit:
        other = RaduInstance(m=5, M=12, level=12, r=dict(PDO_T_R), t=t_prime)
        assert p_set(other) == orbit


def test_instance_validation_and_invariants():
    inst = pdo_t_instance(6, 2)
    assert inst.kappa == 1
    assert inst.exponent_sum == 2
    assert inst.weighted_exponent_sum == 24
    assert inst.two_adic_split() == (6, 243)
    # zero exponents are dropped, divisors sorted
    messy = RaduInstance(m=6, M=12, level=12,
                         r={12: 2, 4: 0, 1: -2, 2: 1, 3: 2, 6: -1}, t=2)
    assert messy.r == PDO_T_R
    with pytest.raises(ValueError):
        RaduInstance(m=6, M=12, level=12, r=dict(PDO_T_R), t=6)
    with pytest.raises(ValueError):
        RaduInstance(m=6, M=12, level=12, r={5: 1}, t=0)
    with pytest.raises(ValueError):
        AuxExponents(level=12, r={7: 1})


def test_kappa_values():
    assert RaduInstance(m=5, M=12, level=12, r=dict(PDO_T_R), t=0).kappa == 24
    assert RaduInstance(m=4, M=12, level=12, r=dict(PDO_T_R), t=0).kappa == 3
    for m, t, _ in TABLE_ROWS:
        assert pdo_t_instance(m, t).kappa == 1


def test_delta_star_holds_for_all_table_rows():
    for m, t, _ in TABLE_ROWS:
        conditions = delta_star_check(pdo_t_instance(m, t))
        assert all(conditions.values()), (m, t, conditions)


def test_delta_star_failure_identifies_condition():
    inst = pdo_t_instance(24, 0)
    conditions = delta_star_check(inst)
    assert conditions["progression_gcd_divides_level"] is False
    assert sum(1 for ok in conditions.values() if not ok) == 1
    with pytest.raises(DeltaStarFailure) as exc:
        radu_verify(inst, AuxExponents(12, {1: 20}), u=8)
    assert exc.value.conditions == conditions
    assert isinstance(exc.value, CriterionNotApplicable)


def test_p_mr_frozen_values():
    inst = pdo_t_instance(6, 2)
    assert p_mr(inst, 1) == (Fraction(-5, 24), 5)
    assert p_mr(inst, 2) == (Fraction(1, 6), 0)
    assert p_mr(inst, 3) == (Fraction(1, 24), 0)
    for delta in (4, 6, 12):
        assert p_mr(inst, delta) == (Fraction(1, 6), 0)
    big = pdo_t_instance(192, 191)
    assert p_mr(big, 1) == (Fraction(-20, 3), 191)
    for delta in (2, 3, 4, 6, 12):
        assert p_mr(big, delta) == (Fraction(1, 192), 0)


def test_p_star_values():
    aux = AuxExponents(12, {1: 5})
    for delta in divisors(12):
        assert p_star(aux, delta) == Fraction(5, 24)
    assert p_star(AuxExponents(12, {1: 160}), 12) == Fraction(20, 3)
    assert p_star(AuxExponents(12, {}), 3) == 0
    # gcd actually matters once larger divisors carry weight
    assert p_star(AuxExponents(12, {1: 2, 6: 1}), 6) == Fraction(1, 3)


def test_sl2_index():
    assert sl2_index(1) == 1
    assert sl2_index(6) == 12
    assert sl2_index(12) == 24
    assert sl2_index(36) == 72


def test_nu_bound_anchors():
    aux5 = AuxExponents(12, {1: 5})
    assert nu_bound(pdo_t_instance(6, 2), aux5) == Fraction(151, 24)
    assert nu_bound(pdo_t_instance(6, 5), aux5) == Fraction(139, 24)
    aux10 = AuxExponents(12, {1: 10})
    assert nu_bound(pdo_t_instance(12, 11), aux10) == Fraction(127, 12)
    aux160 = AuxExponents(12, {1: 160})
    assert nu_bound(pdo_t_instance(192, 191), aux160) == Fraction(463, 3)


def test_c_r_series_counts_tagged_partitions():
    series = c_r_series(pdo_t_instance(6, 2), 12)
    assert list(series.coeffs[:9]) == [1, 2, 4, 6, 10, 16, 24, 36, 52]
    assert all(series.coeffs[n] == pdo_t(n + 1) for n in range(12))
    reduced = c_r_series(pdo_t_instance(6, 2), 12, 8)
    assert list(reduced.coeffs) == [c % 8 for c in series.coeffs]


def test_radu_verify_positive_certificate():
    inst = pdo_t_instance(6, 2)
    cert = radu_verify(inst, AuxExponents(12, {1: 5}), u=4)
    assert cert.verdict is True
    assert cert.failure is None
    assert cert.p_set == [2]
    assert cert.nu == Fraction(151, 24)
    assert cert.floor_nu == 6
    assert cert.checked == [(2, n) for n in range(7)]
    assert all(cert.delta_star.values())
    by_delta = {row["delta"]: row for row in cert.nonneg}
    assert by_delta[1]["total"] == "0/1"
    assert by_delta[1]["lambda"] == 5
    assert by_delta[3]["total"] == "1/4"


def test_radu_verify_medium_row():
    cert = radu_verify(pdo_t_instance(12, 11), AuxExponents(12, {1: 10}), u=16)
    assert cert.verdict is True
    assert cert.floor_nu == 10
    assert cert.checked[-1] == (11, 10)


def test_radu_verify_detects_false_congruence():
    # mod 8 fails immediately: the coefficient at index 2 is 4
    cert = radu_verify(pdo_t_instance(6, 2), AuxExponents(12, {1: 5}), u=8)
    assert cert.verdict is False
    assert cert.failure == {"t": 2, "n": 0, "index": 2, "residue": 4}
    assert cert.checked == []


def test_nonnegativity_failure():
    with pytest.raises(NonnegativityFailure) as exc:
        radu_verify(pdo_t_instance(6, 2), AuxExponents(12, {}), u=4)
    assert exc.value.delta == 1
    assert exc.value.value == Fraction(-5, 24)


def test_level_not_squarefree():
    inst = RaduInstance(m=3, M=9, level=9, r={1: 1}, t=0)
    with pytest.raises(LevelNotSquarefree):
        radu_verify(inst, AuxExponents(9, {}), u=2)
    # 12 = 4 * 3 is fine because 6 is squarefree; 8 is not
    bad = RaduInstance(m=2, M=8, level=8, r={1: 1}, t=0)
    with pytest.raises(LevelNotSquarefree):
        radu_verify(bad, AuxExponents(8, {}), u=2)


def test_radu_verify_argument_errors():
    inst = pdo_t_instance(6, 2)
    with pytest.raises(ValueError):
        radu_verify(inst, AuxExponents(6, {1: 5}), u=4)
    with pytest.raises(ValueError):
        radu_verify(inst, AuxExponents(12, {1: 5}), u=1)


def test_series_reuse_matches_fresh_computation():
    inst = pdo_t_instance(6, 2)
    aux = AuxExponents(12, {1: 5})
    fresh = radu_verify(inst, aux, u=4)
    shared = c_r_series(inst, 64, 8)
    reused = radu_verify(inst, aux, u=4, series=shared)
    assert fresh == reused
    short = c_r_series(inst, 10, 4)
    with pytest.raises(ValueError):
        radu_verify(inst, aux, u=4, series=short)


def test_min_depth_extends_checking():
    inst = pdo_t_instance(6, 2)
    cert = radu_verify(inst, AuxExponents(12, {1: 5}), u=4, min_depth=20)
    assert cert.floor_nu == 6
    assert cert.checked == [(2, n) for n in range(21)]
    assert cert.verdict is True


def test_certificate_json_roundtrip():
    cert = radu_verify(pdo_t_instance(6, 2), AuxExponents(12, {1: 5}), u=4)
    data = json.loads(cert.to_json())
    assert data == cert.to_dict()
    assert data["nu"] == "151/24"
    assert data["floor_nu"] == 6
    assert data["verdict"] is True
    assert data["r"] == {"1": -2, "2": 1, "3": 2, "6": -1, "12": 2}
    assert data["checked"][0] == [2, 0]
    failing = radu_verify(pdo_t_instance(6, 2), AuxExponents(12, {1: 5}), u=8)
    assert json.loads(failing.to_json())["failure"]["residue"] == 4


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
