"""Truncated formal power series over Z or Z/MZ, with the q-series builders
used everywhere else in this package.

A TruncSeries holds the coefficients c[0..T-1] of a series known modulo q^T.
The domain is either exact integers (modulus None) or the residue ring Z/MZ
(modulus M >= 2, coefficients normalized into [0, M)).  Arithmetic between
two series requires identical domains and truncates to the smaller order,
since nothing past that point is determined by the operands.

Multiplication dispatches on the domain: exact series use schoolbook
convolution that skips zero coefficients (the Euler factors built here are
pentagonal-sparse, so this matters), while residue-ring series at large
order use Kronecker substitution, packing each coefficient into a fixed
byte-width limb of one big integer so that CPython's native big-integer
multiply does the convolution.  Inversion is Newton iteration x -> x(2-ax),
doubling the correct precision each step.
"""

from __future__ import annotations

from math import isqrt


class DomainMismatchError(ValueError):
    """Arithmetic attempted between series over different coefficient rings."""


class NotInvertibleError(ValueError):
    """Series inversion attempted when the constant term is not a unit."""


def _normalize(coeffs, modulus):
    if modulus is None:
        return tuple(coeffs)
    return tuple(c % modulus for c in coeffs)


def _nonzero_count(coeffs):
    return sum(1 for c in coeffs if c)


def _mul_schoolbook(a, b, order, modulus):
    # outer loop over the operand with fewer nonzero terms
    if _nonzero_count(a) > _nonzero_count(b):
        a, b = b, a
    out = [0] * order
    for i, ai in enumerate(a):
        if not ai or i >= order:
            continue
        jmax = min(order - i, len(b))
        if ai == 1:
            for j in range(jmax):
                out[i + j] += b[j]
        elif ai == -1 and modulus is None:
            for j in range(jmax):
                out[i + j] -= b[j]
        else:
            for j in range(jmax):
                out[i + j] += ai * b[j]
    if modulus is not None:
        out = [c % modulus for c in out]
    return out

_PACK_THRESHOLD = 128


def _mul_packed(a, b, order, modulus):
    # Kronecker substitution: with coefficients in [0, M) the convolution
    # entries are < min(len) * (M-1)^2, so a limb wide enough for that bound
    # makes the big-integer product carry-free and exact.
    la = min(len(a), order)
    lb = min(len(b), order)
    bound = min(la, lb) * (modulus - 1) * (modulus - 1)
    limb = (bound.bit_length() + 8) // 8
    abuf = bytearray(limb * la)
    for i in range(la):
        c = a[i]
        if c:
            abuf[i * limb:i * limb + limb] = c.to_bytes(limb, "little")
    bbuf = bytearray(limb * lb)
    for i in range(lb):
        c = b[i]
        if c:
            bbuf[i * limb:i * limb + limb] = c.to_bytes(limb, "little")
    z = int.from_bytes(bytes(abuf), "little") * int.from_bytes(bytes(bbuf), "little")
    zb = z.to_bytes(limb * (la + lb), "little")
    n = min(order, la + lb - 1)
    out = [
        int.from_bytes(zb[k * limb:(k + 1) * limb], "little") % modulus
        for k in range(n)
    ]
    if n < order:
        out.extend([0] * (order - n))
    return out


def _mul_lists(a, b, order, modulus):
    """Product of coefficient lists, truncated to `order` coefficients."""
    if order <= 0:
        return []
    if modulus is not None and order >= _PACK_THRESHOLD:
        return _mul_packed(a, b, order, modulus)
    return _mul_schoolbook(a, b, order, modulus)


def _invert_list(a, order, modulus):
    """Newton iteration for 1/a, given a unit constant term."""
    c0 = a[0] if a else 0
    if modulus is None:
        if c0 not in (1, -1):
            raise NotInvertibleError(
                f"constant term {c0} is not a unit over the integers"
            )
        x = [c0]
    else:
        try:
            x = [pow(c0, -1, modulus)]
        except ValueError:
            raise NotInvertibleError(
                f"constant term {c0} is not invertible mod {modulus}"
            ) from None
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        ax = _mul_lists(a[:prec], x, prec, modulus)
        err = [-c for c in ax]
        err[0] += 2
        if modulus is not None:
            err = [c % modulus for c in err]
        x = _mul_lists(x, err, prec, modulus)
    return x


class TruncSeries:
    """A power series truncated at q^order over Z or Z/MZ."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs, modulus=None):
        if modulus is not None and modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.coeffs = _normalize(coeffs, modulus)
        self.modulus = modulus

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, order: int, modulus=None) -> "TruncSeries":
        return cls([0] * order, modulus)

    @classmethod
    def one(cls, order: int, modulus=None) -> "TruncSeries":
        if order == 0:
            return cls([], modulus)
        return cls([1] + [0] * (order - 1), modulus)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n < self.order:
            raise IndexError(
                f"coefficient {n} is beyond truncation order {self.order}"
            )
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 6 else ""
        dom = "Z" if self.modulus is None else f"Z/{self.modulus}"
        return f"TruncSeries({dom}, order={self.order}, [{head}{tail}])"

    def _check_domain(self, other: "TruncSeries"):
        if self.modulus != other.modulus:
            raise DomainMismatchError(
                f"mixed domains: modulus {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_domain(other)
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n)], self.modulus
        )

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_domain(other)
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n)], self.modulus
        )

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries([other * c for c in self.coeffs], self.modulus)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_domain(other)
        n = min(self.order, other.order)
        return TruncSeries(
            _mul_lists(self.coeffs, other.coeffs, n, self.modulus), self.modulus
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (self ** (-exponent)).invert()
        result = TruncSeries.one(self.order, self.modulus)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        if self.order == 0:
            return self
        return TruncSeries(
            _invert_list(list(self.coeffs), self.order, self.modulus),
            self.modulus,
        )

    def inflate(self, m: int, order=None) -> "TruncSeries":
        """Substitute q -> q^m.  The result is known to order m*T, every
        coefficient there being either a[j] at index m*j or zero."""
        if m < 1:
            raise ValueError(f"inflation step must be >= 1, got {m}")
        n = m * self.order if order is None else min(order, m * self.order)
        out = [0] * n
        for j, c in enumerate(self.coeffs):
            if m * j >= n:
                break
            out[m * j] = c
        return TruncSeries(out, self.modulus)

    def dissect(self, m: int, t: int) -> "TruncSeries":
        """Extract the arithmetic progression c[m*n + t] as a new series."""
        if m < 1:
            raise ValueError(f"dissection step must be >= 1, got {m}")
        if not 0 <= t < m:
            raise ValueError(f"residue {t} out of range for step {m}")
        return TruncSeries(self.coeffs[t::m], self.modulus)

    def reduce_mod(self, modulus: int) -> "TruncSeries":
        """Map into Z/MZ.  Defined from the exact domain, or from a residue
        ring whose modulus is a multiple of the target (well defined there);
        anything else is rejected."""
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        if self.modulus is not None and self.modulus % modulus != 0:
            raise DomainMismatchError(
                f"cannot reduce mod {modulus} from Z/{self.modulus}"
            )
        return TruncSeries(self.coeffs, modulus)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by q^k (k >= 0, order grows by k) or divide by q^k
        (k < 0, dropping the leading coefficients)."""
        if k >= 0:
            return TruncSeries((0,) * k + self.coeffs, self.modulus)
        if -k > self.order:
            raise ValueError(f"cannot shift order-{self.order} series by {k}")
        return TruncSeries(self.coeffs[-k:], self.modulus)

    def truncate(self, order: int) -> "TruncSeries":
        if not 0 <= order <= self.order:
            raise ValueError(
                f"cannot truncate order-{self.order} series to {order}"
            )
        return TruncSeries(self.coeffs[:order], self.modulus)

    def valuation(self):
        """Index of the first nonzero coefficient, or None if all zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def euler_factor(step: int, exponent: int, order: int, modulus=None) -> TruncSeries:
    """The Euler product f_step = prod_{j>=1} (1 - q^(j*step)), raised to
    `exponent` (negative exponents invert).

    The base polynomial comes from the pentagonal number theorem,
    f_1 = sum_k (-1)^k q^(k(3k-1)/2) over all integers k, so it has only
    O(sqrt(order/step)) nonzero terms.
    """
    if step < 1:
        raise ValueError(f"Euler factor step must be >= 1, got {step}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    base = [0] * order
    if order > 0:
        base[0] = 1
    k = 1
    while True:
        lo = step * (k * (3 * k - 1) // 2)
        hi = step * (k * (3 * k + 1) // 2)
        if lo >= order:
            break
        sign = 1 if k % 2 == 0 else -1
        base[lo] = sign
        if hi < order:
            base[hi] = sign
        k += 1
    f = TruncSeries(base, modulus)
    if exponent == 1:
        return f
    return f ** exponent


def jacobi_cube(order: int, modulus=None) -> TruncSeries:
    """f_1^3 written directly through Jacobi's identity
    f_1^3 = sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2)."""
    out = [0] * order
    n = 0
    while n * (n + 1) // 2 < order:
        out[n * (n + 1) // 2] = (2 * n + 1) * (1 if n % 2 == 0 else -1)
        n += 1
    return TruncSeries(out, modulus)


def cubic_theta(order: int, modulus=None) -> TruncSeries:
    """The cubic theta series c(q) = sum over integer pairs (m, n) of
    q^(m^2 + mn + n^2).

    Since m^2 + mn + n^2 >= (m^2 + n^2)/2, pairs with max(|m|, |n|)
    above sqrt(2*order) cannot contribute below the truncation.
    """
    out = [0] * order
    bound = isqrt(2 * order) + 1
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            v = m * m + m * n + n * n
            if v < order:
                out[v] += 1
    return TruncSeries(out, modulus)
