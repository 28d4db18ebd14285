"""Closed forms for the point-count polynomials C_n and P_n.

C_n(q) is the number of ideals of codimension n counted by the Hilbert
scheme of n points on a two-dimensional torus over F_q; it is palindromic
about q^n with coefficients c_{n,i} at q^(n +- i).  P_n = C_n / (q-1)^2 has
nonnegative coefficients a_{n,i} at q^(n-1 +- i) counting divisors of n in
an explicit interval.  Both coefficient families have O(1) closed forms:
trapezoidal-number tests for c, divisor-interval counts for a.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import VerificationError
from .laurent import LaurentPoly, balanced_power_sum
from .series import TruncatedSeries
from . import arith


def trapezoidal_k(n: int, i: int) -> int | None:
    """The k >= 1 with n = k(k + 2i + 1)/2, if one exists.

    Such n are the sums (i+1) + (i+2) + ... + (i+k); at most one k fits.
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    disc = 8 * n + (2 * i + 1) ** 2
    s = isqrt(disc)
    if s * s != disc:
        return None
    k = (s - 2 * i - 1) // 2
    if k >= 1 and k * (k + 2 * i + 1) == 2 * n:
        return k
    return None


def central_coeff(n: int) -> int:
    """c_{n,0}: equals 2*(-1)^k when n = k(k+1)/2, else 0."""
    k = trapezoidal_k(n, 0)
    if k is None:
        return 0
    return 2 if k % 2 == 0 else -2


def offcentral_coeff(n: int, i: int) -> int:
    """c_{n,i} for i >= 1.

    (-1)^k when n = k(k + 2i + 1)/2, and (-1)^(k-1) when n = k(k + 2i - 1)/2;
    the two cases never fire together, which the code asserts rather than
    assumes.
    """
    if i < 1:
        raise ValueError("offcentral_coeff needs i >= 1; use central_coeff for i = 0")
    k_up = trapezoidal_k(n, i)
    k_dn = trapezoidal_k(n, i - 1)
    if k_up is not None and k_dn is not None:
        raise AssertionError(
            f"trapezoidal cases collided at n={n}, i={i}: k={k_up} and k={k_dn}")
    if k_up is not None:
        return 1 if k_up % 2 == 0 else -1
    if k_dn is not None:
        return -1 if k_dn % 2 == 0 else 1
    return 0


def divisor_coeff(n: int, i: int) -> int:
    """a_{n,i}: the number of divisors d of n with

        (i + sqrt(2n + i^2)) / 2  <  d  <=  i + sqrt(2n + i^2),

    decided by exact squared comparisons (no radicals are ever formed).
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    s = 2 * n + i * i
    count = 0
    for d in arith.divisors(n):
        lo = 2 * d - i
        if not (lo > 0 and lo * lo > s):
            continue
        hi = d - i
        if hi <= 0 or hi * hi <= s:
            count += 1
    return count


def divisor_coeff_vector(n: int) -> list[int]:
    """[a_{n,0}, ..., a_{n,n-1}] in one pass.

    Each divisor d contributes to a contiguous range of i (the interval
    conditions of divisor_coeff are linear in i once squared), so the vector
    is a sum of interval indicators: O(d(n)) updates plus one prefix sum.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    diff = [0] * (n + 1)
    for d in arith.divisors(n):
        # d > (i + sqrt(2n+i^2))/2  <=>  2di <= 2d^2 - n - 1
        # d <= i + sqrt(2n+i^2)     <=>  2di >= d^2 - 2n
        num = d * d - 2 * n
        lo = max(0, -(-num // (2 * d)))
        hi = min(n - 1, (2 * d * d - n - 1) // (2 * d))
        if lo <= hi:
            diff[lo] += 1
            diff[hi + 1] -= 1
    out = []
    run = 0
    for x in diff[:-1]:
        run += x
        out.append(run)
    return out


def count_poly(n: int) -> LaurentPoly:
    """C_n(q) = c_{n,0} q^n + sum_i c_{n,i} (q^(n+i) + q^(n-i))."""
    if n < 1:
        raise ValueError("need n >= 1")
    coeffs = {}
    c0 = central_coeff(n)
    if c0:
        coeffs[n] = c0
    for i in range(1, n + 1):
        c = offcentral_coeff(n, i)
        if c:
            coeffs[n + i] = c
            coeffs[n - i] = c
    return LaurentPoly(coeffs)


def reduced_poly(n: int) -> LaurentPoly:
    """P_n(q) = a_{n,0} q^(n-1) + sum_i a_{n,i} (q^(n-1+i) + q^(n-1-i)).

    Satisfies C_n = (q - 1)^2 P_n; the tests enforce that identity."""
    if n < 1:
        raise ValueError("need n >= 1")
    a = divisor_coeff_vector(n)
    coeffs = {}
    if a[0]:
        coeffs[n - 1] = a[0]
    for i in range(1, n):
        if a[i]:
            coeffs[n - 1 + i] = a[i]
            coeffs[n - 1 - i] = a[i]
    return LaurentPoly(coeffs)


@dataclass(frozen=True)
class CoeffTables:
    """Both coefficient families of a single n, with the linking relations.

    c[i] = c_{n,i} for 0 <= i <= n;  a[i] = a_{n,i} for 0 <= i <= n-1.
    """

    n: int
    c: tuple[int, ...]
    a: tuple[int, ...]

    @classmethod
    def build(cls, n: int) -> "CoeffTables":
        c = [central_coeff(n)] + [offcentral_coeff(n, i) for i in range(1, n + 1)]
        return cls(n, tuple(c), tuple(divisor_coeff_vector(n)))

    def a_at(self, i: int) -> int:
        """a_{n,i} with the boundary convention a_{n,n} = a_{n,n+1} = 0."""
        return self.a[i] if 0 <= i < self.n else 0

    def check_linking(self) -> None:
        """c_{n,0} = -2a_{n,0} + 2a_{n,1} and
        c_{n,i} = a_{n,i+1} - 2a_{n,i} + a_{n,i-1} for 1 <= i <= n."""
        lhs0 = self.c[0]
        rhs0 = -2 * self.a_at(0) + 2 * self.a_at(1)
        if lhs0 != rhs0:
            raise VerificationError(f"second difference failed at n={self.n}, i=0: "
                                    f"{lhs0} != {rhs0}")
        for i in range(1, self.n + 1):
            rhs = self.a_at(i + 1) - 2 * self.a_at(i) + self.a_at(i - 1)
            if self.c[i] != rhs:
                raise VerificationError(f"second difference failed at n={self.n}, "
                                        f"i={i}: {self.c[i]} != {rhs}")


# -- generating series along fixed i --------------------------------------

def divisor_coeff_series(i: int, order: int) -> TruncatedSeries:
    """sum_n a_{n,i} t^n as a theta-like sum:

        sum_{k>=1} (-1)^(k-1) t^(k(k+1)/2 + ki) / (1 - t^k).
    """
    if i < 0:
        raise ValueError("need i >= 0")
    out = [0] * (order + 1)
    k = 1
    while k * (k + 1) // 2 + k * i <= order:
        base = k * (k + 1) // 2 + k * i
        sgn = 1 if k % 2 == 1 else -1
        for e in range(base, order + 1, k):
            out[e] += sgn
        k += 1
    return TruncatedSeries(order, out)


def c_coeff_series(i: int, order: int) -> TruncatedSeries:
    """sum_n c_{n,i} t^n.

    i = 0:  2 sum_{k>=1} (-1)^k t^(k(k+1)/2)
    i >= 1: sum_{k>=1} (-1)^k (t^(k(k+2i+1)/2) - t^(k(k+2i-1)/2))
    """
    if i < 0:
        raise ValueError("need i >= 0")
    out = [0] * (order + 1)
    k = 1
    if i == 0:
        while k * (k + 1) // 2 <= order:
            out[k * (k + 1) // 2] += 2 * (-1) ** k
            k += 1
    else:
        while k * (k + 2 * i - 1) <= 2 * order:
            sgn = (-1) ** k
            up = k * (k + 2 * i + 1) // 2
            dn = k * (k + 2 * i - 1) // 2
            if up <= order:
                out[up] += sgn
            out[dn] -= sgn
            k += 1
    return TruncatedSeries(order, out)


def check_reduced_generating_identity(order: int) -> None:
    """Verify  sum_n (P_n(q)/q^(n-1)) t^n  =
    sum_{k>=1} (-1)^(k-1) t^(k(k+1)/2) (1 + t^k) / ((1 - q t^k)(1 - q^(-1) t^k))
    as series over Laurent polynomials, through t^order.

    1/((1-qs)(1-s/q)) expands to sum_j (q^j + q^(j-2) + ... + q^(-j)) s^j,
    which is balanced_power_sum(j).
    """
    rhs: list[LaurentPoly] = [LaurentPoly.zero() for _ in range(order + 1)]
    k = 1
    while k * (k + 1) // 2 <= order:
        base = k * (k + 1) // 2
        sgn = 1 if k % 2 == 1 else -1
        j = 0
        while base + j * k <= order:
            block = balanced_power_sum(j)
            if sgn < 0:
                block = -block
            e1 = base + j * k
            rhs[e1] = rhs[e1] + block
            e2 = e1 + k
            if e2 <= order:
                rhs[e2] = rhs[e2] + block
            j += 1
        k += 1
    for n in range(1, order + 1):
        lhs = reduced_poly(n).shift(-(n - 1))
        if lhs != rhs[n]:
            raise VerificationError(
                f"reduced generating identity failed at t^{n}: "
                f"{lhs.pretty()} != {rhs[n].pretty()}")
