"""Values of C_n and P_n at roots of unity, and section sums of P_n.

The value of C_n at a primitive d-th root of unity (d = 2, 3, 4, 6) is
determined by lattice representation counts:

    C_n(-1) = r(n)                                  r = x^2 + y^2 count
    C_n(w3) = -3 lambda(n) w3^n
    C_n(i)  = (-1)^floor((n+1)/2) r'(n) i^n         r' = x^2 + 2y^2 count
    C_n(-w3) = r(n), (r(n)/4) w3, -(r(n)/2) w3^2    for n = 0, 1, 2 mod 3

with all stated divisions exact (checked, never rounded).  Order-6 values
live in the order-3 basis since -w3 generates the same ring.

Dividing out the root power gives the integer sequences
a_d(n) = C_n(w)/w^n; the k-section of P_n (sum of coefficients at exponents
divisible by k) has closed forms in sigma, r, r', r'' and lambda.
"""

from __future__ import annotations

from .cyclotomic import CycInt
from . import arith
from . import coeffs

ROOT_ORDERS = (2, 3, 4, 6)
SECTION_KS = (1, 2, 3, 4, 6)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


def omega(d: int) -> int | CycInt:
    """A primitive d-th root of unity as carried by count_at_root."""
    if d == 2:
        return -1
    if d == 3:
        return CycInt.root(3)
    if d == 4:
        return CycInt.root(4)
    if d == 6:
        return -CycInt.root(3)
    raise ValueError(f"d must be one of {ROOT_ORDERS}, got {d}")


def count_at_root(n: int, d: int) -> int | CycInt:
    """C_n at a primitive d-th root of unity, in closed form.

    Plain int for d = 2, an order-4 cyclotomic integer for d = 4, and an
    order-3 one for d = 3 and d = 6.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if d == 2:
        return arith.r2(n)
    if d == 3:
        w = CycInt.root(3)
        return w ** n * (-3 * arith.lambda_fn(n))
    if d == 4:
        w = CycInt.root(4)
        sign = -1 if ((n + 1) // 2) % 2 else 1
        return w ** n * (sign * arith.r_prime(n))
    if d == 6:
        r = arith.r2(n)
        w = CycInt.root(3)
        m = n % 3
        if m == 0:
            return CycInt.from_int(r, 3)
        if m == 1:
            return w * _exact_div(r, 4, f"C_{n} at order-6 root")
        return w * w * (-_exact_div(r, 2, f"C_{n} at order-6 root"))
    raise ValueError(f"d must be one of {ROOT_ORDERS}, got {d}")


def reduced_at_root(n: int, d: int) -> int | CycInt:
    """P_n at a primitive d-th root of unity (P_n = C_n/(q-1)^2)."""
    if n < 1:
        raise ValueError("need n >= 1")
    if d == 2:
        return _exact_div(arith.r2(n), 4, f"P_{n}(-1)")
    if d == 3:
        w = CycInt.root(3)
        return w ** (n - 1) * arith.lambda_fn(n)
    if d == 4:
        w = CycInt.root(4)
        sign = -1 if ((n - 1) // 2) % 2 else 1
        return w ** (n - 1) * (sign * _exact_div(arith.r_prime(n), 2, f"P_{n}(i)"))
    if d == 6:
        w = CycInt.root(3)
        val = count_at_root(n, 6)
        return val * (w * w)  # 1/(-w3 - 1)^2 = w3^2
    raise ValueError(f"d must be one of {ROOT_ORDERS}, got {d}")


def root_sequence(n: int, d: int) -> int:
    """a_d(n) = C_n(w)/w^n as a rational integer.

        a_2(n) = (-1)^n r(n)
        a_3(n) = -3 lambda(n)
        a_4(n) = (-1)^floor((n+1)/2) r'(n)
        a_6(n) = (-1)^n r(n), (-1)^n r(n)/4, (-1)^(n+1) r(n)/2
                 for n = 0, 1, 2 mod 3
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if d == 2:
        r = arith.r2(n)
        return -r if n % 2 else r
    if d == 3:
        return -3 * arith.lambda_fn(n)
    if d == 4:
        sign = -1 if ((n + 1) // 2) % 2 else 1
        return sign * arith.r_prime(n)
    if d == 6:
        r = arith.r2(n)
        sign = -1 if n % 2 else 1
        m = n % 3
        if m == 0:
            return sign * r
        if m == 1:
            return sign * _exact_div(r, 4, f"a_6({n})")
        return -sign * _exact_div(r, 2, f"a_6({n})")
    raise ValueError(f"d must be one of {ROOT_ORDERS}, got {d}")


# -- sections of P_n -------------------------------------------------------

def section_direct(n: int, k: int) -> int:
    """Sum of the coefficients of P_n at exponents divisible by k,
    straight off the polynomial."""
    if k not in SECTION_KS:
        raise ValueError(f"k must be one of {SECTION_KS}, got {k}")
    p = coeffs.reduced_poly(n)
    return sum(c for e, c in p.items() if e % k == 0)


def section_formula(n: int, k: int) -> int:
    """The same section sums from the closed formulas.

    Every division is checked exact; a remainder would mean a wrong input
    to the formula and raises instead of rounding.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if k not in SECTION_KS:
        raise ValueError(f"k must be one of {SECTION_KS}, got {k}")
    sig = arith.sigma(n)
    if k == 1:
        return sig
    if k == 2:
        quarter = _exact_div(arith.r2(n), 4, f"r({n})/4")
        return _exact_div(sig + quarter, 2, f"s_2({n})")
    if k == 3:
        third = _exact_div(arith.r_hex(n), 3, f"r''({n})/3")
        return _exact_div(sig + third, 3, f"s_3({n})")
    if k == 4:
        quarter = _exact_div(arith.r2(n), 4, f"r({n})/4")
        # i^(n-1) + i^(1-n) is 2, 0, -2, 0 as n-1 = 0, 1, 2, 3 mod 4
        trace = (2, 0, -2, 0)[(n - 1) % 4]
        sign = -1 if ((n - 1) // 2) % 2 else 1
        term = sign * _exact_div(arith.r_prime(n) * trace, 2, f"r'({n}) term")
        return _exact_div(sig + quarter + term, 4, f"s_4({n})")
    # k == 6, by residue of n mod 3
    lam = arith.lambda_fn(n)
    three_quarters = 3 * _exact_div(arith.r2(n), 4, f"r({n})/4")
    m = n % 3
    if m == 0:
        return _exact_div(sig - three_quarters - lam, 6, f"s_6({n})")
    if m == 1:
        return _exact_div(sig + three_quarters + 2 * lam, 6, f"s_6({n})")
    return _exact_div(sig + three_quarters - lam, 6, f"s_6({n})")
