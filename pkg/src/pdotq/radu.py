"""Radu's criterion: finite verification certificates for congruences
c(m n + t) == 0 (mod u) where sum c(n) q^n = prod_{delta | M} f_delta^(r_delta).

The pipeline, for an instance (m, M, level N, exponents r, residue t) and
auxiliary exponents r' over the divisors of N:

  1. membership of (m, M, N, r, t) in the admissible set, six arithmetic
     conditions written with kappa = gcd(m^2 - 1, 24);
  2. the orbit P(t) of the residue t under squares of units mod 24m;
  3. lower bounds p(gamma_delta) for the dissected series and p*(delta)
     for the auxiliary eta-product at each double-coset representative,
     whose sums must all be nonnegative (reps delta | N are valid when N
     or N/2 is squarefree);
  4. an exact rational bound nu: if c(m n + t') == 0 (mod u) for every
     t' in P(t) and all n <= floor(nu), the congruence holds for all n.

radu_verify runs the pipeline and returns a Certificate recording every
quantity exactly (rationals serialize as "num/den" strings).  Failed
preconditions raise, because they mean the criterion does not apply; a
failed coefficient check returns a verdict-false certificate, because it
means the congruence itself is false.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Optional

from .series import TruncSeries, euler_factor


class CriterionNotApplicable(ValueError):
    """A precondition of the criterion failed; nothing is decided."""


class LevelNotSquarefree(CriterionNotApplicable):
    """Neither N nor N/2 squarefree, so the coset representatives d | N
    are not a complete system."""


class DeltaStarFailure(CriterionNotApplicable):
    """Admissibility failed; the failed conditions are in .conditions."""

    def __init__(self, conditions: dict):
        self.conditions = conditions
        failed = [name for name, ok in conditions.items() if not ok]
        super().__init__(f"instance not admissible, failed: {failed}")


class NonnegativityFailure(CriterionNotApplicable):
    """A cusp bound came out negative; .delta and .value identify it."""

    def __init__(self, delta: int, value: Fraction):
        self.delta = delta
        self.value = value
        super().__init__(f"negative order bound {value} at delta={delta}")


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class RaduInstance:
    """One congruence family to verify: the coefficients of
    prod_{delta | M} f_delta^(r[delta]) along the progression m n + t,
    worked on Gamma_0(level)."""

    m: int
    M: int
    level: int
    r: dict[int, int]
    t: int

    def __post_init__(self):
        if self.m < 1 or self.M < 1 or self.level < 1:
            raise ValueError("m, M and level must all be >= 1")
        if not 0 <= self.t < self.m:
            raise ValueError(f"residue t={self.t} out of range for m={self.m}")
        for delta in self.r:
            if delta < 1 or self.M % delta != 0:
                raise ValueError(f"divisor {delta} does not divide M={self.M}")
        self.r = {d: v for d, v in sorted(self.r.items()) if v != 0}

    @property
    def kappa(self) -> int:
        return gcd(self.m * self.m - 1, 24)

    @property
    def exponent_sum(self) -> int:
        return sum(self.r.values())

    @property
    def weighted_exponent_sum(self) -> int:
        return sum(d * v for d, v in self.r.items())

    def two_adic_split(self) -> tuple[int, int]:
        """prod delta^|r_delta| written as 2^s * j with j odd; returns (s, j)."""
        prod = 1
        for d, v in self.r.items():
            prod *= d ** abs(v)
        s = 0
        while prod % 2 == 0:
            prod //= 2
            s += 1
        return s, prod


@dataclass
class AuxExponents:
    """Auxiliary eta-product exponents r' over the divisors of the level."""

    level: int
    r: dict[int, int]

    def __post_init__(self):
        for delta in self.r:
            if delta < 1 or self.level % delta != 0:
                raise ValueError(
                    f"divisor {delta} does not divide level {self.level}"
                )
        self.r = {d: v for d, v in sorted(self.r.items()) if v != 0}


@dataclass
class Certificate:
    """Everything radu_verify computed, exact and JSON-serializable."""

    m: int
    M: int
    level: int
    r: dict[int, int]
    t: int
    rprime: dict[int, int]
    u: int
    delta_star: dict[str, bool]
    p_set: list[int]
    nonneg: list[dict]
    nu: Fraction
    floor_nu: int
    checked: list[tuple[int, int]]
    verdict: bool
    failure: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "M": self.M,
            "level": self.level,
            "r": {str(d): v for d, v in self.r.items()},
            "t": self.t,
            "rprime": {str(d): v for d, v in self.rprime.items()},
            "u": self.u,
            "delta_star": dict(self.delta_star),
            "p_set": list(self.p_set),
            "nonneg": [dict(row) for row in self.nonneg],
            "nu": _frac_str(self.nu),
            "floor_nu": self.floor_nu,
            "checked": [[tp, n] for tp, n in self.checked],
            "verdict": self.verdict,
            "failure": dict(self.failure) if self.failure else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


def squares_mod(m: int) -> list[int]:
    """Squares of units in Z/mZ, sorted."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    return sorted({x * x % m for x in range(1, m + 1) if gcd(x, m) == 1})


def p_set(inst: RaduInstance) -> list[int]:
    """Orbit of t: residues t*s + (s-1)/24 * sum(delta r_delta) mod m as s
    runs over squares of units mod 24m.  Such squares are 1 mod 24, so the
    division is exact."""
    out = set()
    shift = inst.weighted_exponent_sum
    for s in squares_mod(24 * inst.m):
        if (s - 1) % 24 != 0:
            raise ArithmeticError(
                f"square of unit {s} mod {24 * inst.m} is not 1 mod 24"
            )
        out.add((inst.t * s + (s - 1) // 24 * shift) % inst.m)
    return sorted(out)


def delta_star_check(inst: RaduInstance) -> dict[str, bool]:
    """The six admissibility conditions, reported separately."""
    m, M, N = inst.m, inst.M, inst.level
    kappa = inst.kappa
    s2, j = inst.two_adic_split()

    weighted = Fraction(0)
    for d, v in inst.r.items():
        weighted += v * Fraction(m * N, d)
    weighted *= kappa * N
    cond3 = weighted.denominator == 1 and weighted.numerator % 24 == 0

    g = gcd(-24 * kappa * inst.t - kappa * inst.weighted_exponent_sum, 24 * m)
    cond6 = True
    if m % 2 == 0:
        cond6 = (kappa * N % 4 == 0 and s2 * N % 8 == 0) or (
            s2 % 2 == 0 and (1 - j) * N % 8 == 0
        )
    return {
        "primes_of_m_divide_level": all(N % p == 0 for p in _prime_divisors(m)),
        "exponent_divisors_divide_m_level": all(
            (m * N) % d == 0 for d in inst.r
        ),
        "weighted_sum_multiple_of_24": cond3,
        "exponent_sum_multiple_of_8": (kappa * N * inst.exponent_sum) % 8 == 0,
        "progression_gcd_divides_level": N % (24 * m // g) == 0,
        "even_m_two_adic": cond6,
    }


def p_mr(inst: RaduInstance, delta: int) -> tuple[Fraction, int]:
    """Lower bound for the order of the dissected series at the coset
    representative attached to delta: the minimum over lambda in [0, m) of

        (1/24) sum_{d | M} r_d gcd(d (1 + kappa lambda delta), m delta)^2
                            / (d m),

    returned with the attaining lambda."""
    m = inst.m
    kappa = inst.kappa
    best = None
    best_lambda = 0
    for lam in range(m):
        total = Fraction(0)
        for d, v in inst.r.items():
            g = gcd(d * (1 + kappa * lam * delta), m * delta)
            total += Fraction(v * g * g, d * m)
        total /= 24
        if best is None or total < best:
            best = total
            best_lambda = lam
    return best, best_lambda


def p_star(aux: AuxExponents, delta: int) -> Fraction:
    """Order bound of the auxiliary eta-product at the same representative:
    (1/24) sum_{d | N} r'_d gcd(d, delta)^2 / d."""
    total = Fraction(0)
    for d, v in aux.r.items():
        g = gcd(d, delta)
        total += Fraction(v * g * g, d)
    return total / 24


def sl2_index(level: int) -> int:
    """Index of Gamma_0(level) in the full modular group."""
    value = Fraction(level)
    for p in _prime_divisors(level):
        value *= 1 + Fraction(1, p)
    return int(value)


def nu_bound(inst: RaduInstance, aux: AuxExponents) -> Fraction:
    """The exact rational verification bound; checking the congruence for
    a full orbit up to floor(nu) proves it for all n."""
    t_min = min(p_set(inst))
    total_exponents = inst.exponent_sum + sum(aux.r.values())
    value = Fraction(
        total_exponents * sl2_index(inst.level)
        - sum(d * v for d, v in aux.r.items()),
        24,
    )
    value -= Fraction(inst.weighted_exponent_sum, 24 * inst.m)
    value -= Fraction(t_min, inst.m)
    return value


def c_r_series(inst: RaduInstance, order: int, modulus=None) -> TruncSeries:
    """Expansion of prod_{delta | M} f_delta^(r_delta)."""
    num = TruncSeries.one(order, modulus)
    den = TruncSeries.one(order, modulus)
    for d, v in inst.r.items():
        if v > 0:
            num = num * euler_factor(d, v, order, modulus)
        else:
            den = den * euler_factor(d, -v, order, modulus)
    return num * den.invert()


def radu_verify(
    inst: RaduInstance,
    aux: AuxExponents,
    u: int,
    series: TruncSeries | None = None,
    min_depth: int = 0,
) -> Certificate:
    """Run the full criterion for c(m n + t') == 0 (mod u) over the orbit
    of t.  A precomputed c_r expansion may be passed in `series` (its
    modulus must be None or a multiple of u, its order large enough);
    `min_depth` forces checking beyond floor(nu), which can only
    strengthen the evidence.

    Raises a CriterionNotApplicable subclass when a precondition fails.
    Returns a Certificate whose verdict is False when a coefficient check
    fails (the congruence is then genuinely false at the recorded index).
    """
    if aux.level != inst.level:
        raise ValueError(
            f"auxiliary exponents are for level {aux.level}, "
            f"instance has level {inst.level}"
        )
    if u < 2:
        raise ValueError(f"modulus u must be >= 2, got {u}")
    N = inst.level
    if not (_is_squarefree(N) or (N % 2 == 0 and _is_squarefree(N // 2))):
        raise LevelNotSquarefree(
            f"level {N}: neither it nor its half is squarefree"
        )

    conditions = delta_star_check(inst)
    if not all(conditions.values()):
        raise DeltaStarFailure(conditions)

    orbit = p_set(inst)

    nonneg_rows = []
    for delta in divisors(N):
        bound, lam = p_mr(inst, delta)
        aux_bound = p_star(aux, delta)
        total = bound + aux_bound
        nonneg_rows.append(
            {
                "delta": delta,
                "p_mr": _frac_str(bound),
                "lambda": lam,
                "p_star": _frac_str(aux_bound),
                "total": _frac_str(total),
            }
        )
        if total < 0:
            raise NonnegativityFailure(delta, total)

    nu = nu_bound(inst, aux)
    floor_nu = floor(nu)
    depth = max(floor_nu, min_depth)
    order = inst.m * depth + max(orbit) + 1

    if series is None:
        series = c_r_series(inst, order, u)
    else:
        if series.order < order:
            raise ValueError(
                f"supplied series has order {series.order}, need {order}"
            )
        series = series.reduce_mod(u)

    checked = []
    failure = None
    verdict = True
    for t_prime in orbit:
        for n in range(depth + 1):
            idx = inst.m * n + t_prime
            if series.coeffs[idx] % u != 0:
                verdict = False
                failure = {
                    "t": t_prime,
                    "n": n,
                    "index": idx,
                    "residue": series.coeffs[idx] % u,
                }
                break
            checked.append((t_prime, n))
        if failure:
            break

    return Certificate(
        m=inst.m,
        M=inst.M,
        level=N,
        r=dict(inst.r),
        t=inst.t,
        rprime=dict(aux.r),
        u=u,
        delta_star=conditions,
        p_set=orbit,
        nonneg=nonneg_rows,
        nu=nu,
        floor_nu=floor_nu,
        checked=checked,
        verdict=verdict,
        failure=failure,
    )
