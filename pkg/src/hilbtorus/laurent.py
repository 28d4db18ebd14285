"""Laurent polynomials in one variable with exact integer coefficients.

The counting polynomials handled here are sparse (a handful of terms spread
over a wide exponent range), so coefficients are stored as a dict from
exponent to nonzero integer coefficient.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class LaurentPoly:
    """An immutable Laurent polynomial  sum_e c_e q^e  over the integers.

    >>> p = LaurentPoly({2: 1, 0: -2, -2: 1})
    >>> str(p)
    'q^2 - 2 + q^-2'
    >>> p * LaurentPoly.monomial(2)
    LaurentPoly({4: 1, 2: -2, 0: 1})
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    clean[int(e)] = int(c)
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        """The single term coeff * q^exponent."""
        return cls({exponent: coeff})

    @classmethod
    def from_int(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    # -- inspection --------------------------------------------------------

    def coeff(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def support(self) -> tuple[int, ...]:
        """Exponents with nonzero coefficient, ascending."""
        return tuple(sorted(self._coeffs))

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._coeffs.items())

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            if other == 0:
                return not self._coeffs
            return self._coeffs == {0: other}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{e}: {c}" for e, c in sorted(self._coeffs.items(), reverse=True))
        return "LaurentPoly({%s})" % inner

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return _raw({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        if len(self._coeffs) > len(other._coeffs):
            a, b = other._coeffs, self._coeffs
        else:
            a, b = self._coeffs, other._coeffs
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            # only unit monomials +-q^e can be inverted in this ring
            if len(self._coeffs) == 1:
                (e, c), = self._coeffs.items()
                if c in (1, -1):
                    return _raw({e * k: c if k % 2 else 1})
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k (shift every exponent by k)."""
        if k == 0:
            return self
        return _raw({e + k: c for e, c in self._coeffs.items()})

    # -- structure ---------------------------------------------------------

    def is_palindromic(self) -> bool:
        """True when the coefficients read the same from both ends of the support.

        Formally: c_e == c_(lo+hi-e) for all e, where [lo, hi] spans the
        support.  The zero polynomial counts as palindromic.
        """
        if not self._coeffs:
            return True
        lo, hi = self.min_exp, self.max_exp
        return all(c == self.coeff(lo + hi - e) for e, c in self._coeffs.items())

    # -- evaluation --------------------------------------------------------

    def evaluate_int(self, q0: int) -> int:
        """Exact value at an integer point.

        Negative exponents only make sense at q0 = 1 or -1; anything else
        (including q0 = 0) is rejected rather than rounded.
        """
        if q0 == 0:
            raise ValueError("evaluation at 0 is undefined for Laurent polynomials")
        total = 0
        for e, c in self._coeffs.items():
            if e >= 0:
                total += c * q0 ** e
            elif q0 == 1:
                total += c
            elif q0 == -1:
                total += c if e % 2 == 0 else -c
            else:
                raise ValueError(
                    f"negative exponent {e} cannot be evaluated exactly at q0={q0}")
        return total

    def evaluate(self, x):
        """Evaluate at an element of any ring supporting ** with int exponents.

        Used with cyclotomic integers, where roots of unity are units and
        negative exponents are fine.
        """
        total = None
        for e, c in self._coeffs.items():
            term = (x ** e) * c
            total = term if total is None else total + term
        if total is None:
            return 0 * x  # zero of the target ring
        return total

    # -- formatting --------------------------------------------------------

    def pretty(self, var: str = "q") -> str:
        """Human layout, descending exponents:  q^4 - q^3 - q + 1.

        >>> LaurentPoly({4: 1, 3: -1, 1: -1, 0: 1}).pretty()
        'q^4 - q^3 - q + 1'
        >>> LaurentPoly({1: 1, 0: -2, -1: 1}).pretty()
        'q - 2 + q^-1'
        >>> LaurentPoly.zero().pretty()
        '0'
        """
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.pretty()


def _raw(coeffs: dict[int, int]) -> LaurentPoly:
    # internal constructor for dicts already free of zeros
    p = LaurentPoly.__new__(LaurentPoly)
    p._coeffs = coeffs
    return p


def _coerce(x) -> LaurentPoly | None:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    return None


def balanced_power_sum(k: int) -> LaurentPoly:
    """q^k + q^(k-2) + ... + q^(-k), the balanced geometric block of width k+1.

    These are exactly the coefficients of 1/(1 - (q + 1/q) t + t^2) as a
    series in t.

    >>> balanced_power_sum(2)
    LaurentPoly({2: 1, 0: 1, -2: 1})
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    return _raw({e: 1 for e in range(-k, k + 1, 2)})


if __name__ == "__main__":
    import doctest

    doctest.testmod()
