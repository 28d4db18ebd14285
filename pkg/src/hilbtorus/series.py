"""Truncated power series with exact coefficients.

A series is a tuple of coefficients for t^0 .. t^order (order inclusive).
Coefficients may be plain ints or any ring element interoperating with int
via +, -, * (LaurentPoly does); int 0 doubles as the universal zero pad.
"""

from __future__ import annotations

from typing import Sequence


class TruncatedSeries:
    """A power series known exactly up to and including t^order.

    >>> t = TruncatedSeries.monomial(1, 4)
    >>> ((1 - t) * (1 - t)).coeffs
    (1, -2, 1, 0, 0)
    >>> (1 - t).invert().coeffs
    (1, 1, 1, 1, 1)
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence = ()):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = list(coeffs)
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [1])

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        if 0 <= exponent <= order:
            cs[exponent] = coeff
        return cls(order, cs)

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient t^{n} outside truncation order {self.order}")
        return self.coeffs[n]

    def prefix(self, order: int) -> "TruncatedSeries":
        """Re-truncate to a smaller order."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"

    # -- arithmetic --------------------------------------------------------

    def _zip_order(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        n = self._zip_order(other)
        return TruncatedSeries(n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, [-c if c else 0 for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return TruncatedSeries(self.order, [c * other for c in self.coeffs])
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        n = self._zip_order(other)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if not b:
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse as a series; requires constant term exactly 1.

        The recurrence b_k = -sum_{j>=1} a_j b_{k-j} walks only the nonzero
        a_j, so inverting a sparse polynomial costs O(order * #terms).
        """
        a = self.coeffs
        if not a[0] == 1:
            raise ValueError("series inversion requires constant term 1")
        nonzero = [(j, aj) for j, aj in enumerate(a) if j > 0 and aj]
        out: list = [0] * (self.order + 1)
        out[0] = 1
        for k in range(1, self.order + 1):
            acc = 0
            for j, aj in nonzero:
                if j > k:
                    break
                b = out[k - j]
                if b:
                    acc = acc + aj * b
            out[k] = -acc if acc else 0
        return TruncatedSeries(self.order, out)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k (k >= 0), truncating at the same order."""
        if k < 0:
            raise ValueError("t-shift must be by a nonneg exponent")
        return TruncatedSeries(self.order, [0] * k + list(self.coeffs[: self.order + 1 - k]))


def _coerce(x, order: int) -> TruncatedSeries | None:
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, int):
        return TruncatedSeries(order, [x])
    return None


if __name__ == "__main__":
    import doctest

    doctest.testmod()
