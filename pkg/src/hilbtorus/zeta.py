"""Local zeta functions of the Hilbert schemes, and their global shadow.

Over F_q the motive decomposes so that

    Z_n(t) = prod_e (1 - q^e t)^(-m(e)),    m(n + i) = m(n - i) = c_{n,i},

i.e. positive multiplicity means the factor sits in the denominator.  The
exponent list satisfies a functional-equation certificate (palindromy,
total degree zero, even central multiplicity), and replacing each local
factor by a shifted Riemann zeta gives the Hasse-Weil product
zeta_H(s) = prod_s0 zeta(s - s0)^m(s0) with the same exponents.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import VerificationError
from . import coeffs


@dataclass(frozen=True)
class ZetaRational:
    """Factored form of the local zeta function of the n-point Hilbert scheme.

    factors maps the q-exponent e to its multiplicity m(e); m(e) > 0 is a
    denominator factor (1 - q^e t)^m, m(e) < 0 a numerator factor.
    """

    n: int
    factors: tuple[tuple[int, int], ...]  # (e, m), e ascending, m != 0

    def multiplicity(self, e: int) -> int:
        for ee, m in self.factors:
            if ee == e:
                return m
        return 0

    def denominator_exponents(self) -> list[int]:
        """q-exponents of denominator factors, repeated by multiplicity."""
        out = []
        for e, m in self.factors:
            if m > 0:
                out.extend([e] * m)
        return out

    def numerator_exponents(self) -> list[int]:
        out = []
        for e, m in self.factors:
            if m < 0:
                out.extend([e] * (-m))
        return out

    def pretty(self) -> str:
        """Display like (1 - q t)(1 - q^2 t) / ((1 - t)(1 - q^3 t)^2)."""
        num_exps = self.numerator_exponents()
        den_exps = self.denominator_exponents()
        num = _factor_string(num_exps) or "1"
        den = _factor_string(den_exps)
        if not den:
            return num
        if len(set(den_exps)) > 1:
            den = f"({den})"
        return f"{num} / {den}"


def _factor_string(exponents: list[int]) -> str:
    counts = Counter(exponents)
    parts = []
    for e in sorted(counts):
        if e == 0:
            base = "(1 - t)"
        elif e == 1:
            base = "(1 - q t)"
        else:
            base = f"(1 - q^{e} t)"
        parts.append(base if counts[e] == 1 else f"{base}^{counts[e]}")
    return "".join(parts)


def build_local_zeta(n: int) -> ZetaRational:
    """Assemble Z_n(t) from the closed-form coefficients of C_n."""
    table = coeffs.CoeffTables.build(n)
    acc: dict[int, int] = {}
    if table.c[0]:
        acc[n] = table.c[0]
    for i in range(1, n + 1):
        ci = table.c[i]
        if ci:
            acc[n + i] = acc.get(n + i, 0) + ci
            acc[n - i] = acc.get(n - i, 0) + ci
    factors = tuple(sorted((e, m) for e, m in acc.items() if m))
    return ZetaRational(n, factors)


def zeta_series_check(n: int, q0: int, terms: int) -> None:
    """Verify t Z'/Z = sum_m C_n(q0^m) t^m through t^terms, exactly.

    The log-derivative of the factored form is
    sum_e m(e) q0^e t / (1 - q0^e t), whose t^m coefficient is
    sum_e m(e) q0^(e m); the point count at F_{q0^m} comes from the
    closed-form polynomial instead.
    """
    if q0 < 2:
        raise ValueError("q0 should be a prime power >= 2")
    z = build_local_zeta(n)
    cn = coeffs.count_poly(n)
    for m in range(1, terms + 1):
        lhs = sum(mult * q0 ** (e * m) for e, mult in z.factors)
        rhs = cn.evaluate_int(q0 ** m)
        if lhs != rhs:
            raise VerificationError(
                f"zeta log-derivative mismatch for n={n}, q0={q0}, t^{m}: "
                f"{lhs} != {rhs}")


@dataclass(frozen=True)
class FunctionalEquationCertificate:
    n: int
    palindromic: bool
    multiplicity_sum: int
    central_multiplicity: int

    @property
    def ok(self) -> bool:
        return (self.palindromic and self.multiplicity_sum == 0
                and self.central_multiplicity % 2 == 0)


def functional_equation_check(n: int) -> FunctionalEquationCertificate:
    """The three finite checks behind the functional equation
    Z(1/(q^2n t)) = Z(t) up to the usual monomial:

      (1) m(e) = m(2n - e) for every e,
      (2) sum_e m(e) = 0 (the rational function has total degree zero),
      (3) m(n) is even (the central factor splits symmetrically).

    Raises VerificationError if any fails; returns the certificate.
    """
    z = build_local_zeta(n)
    mm = dict(z.factors)
    palin = all(mm.get(2 * n - e, 0) == m for e, m in z.factors)
    cert = FunctionalEquationCertificate(
        n=n,
        palindromic=palin,
        multiplicity_sum=sum(m for _, m in z.factors),
        central_multiplicity=mm.get(n, 0),
    )
    if not cert.ok:
        raise VerificationError(
            f"functional equation certificate failed for n={n}: {cert}")
    return cert


@dataclass(frozen=True)
class HasseWeilExponents:
    """zeta_H(s) = prod_s0 zeta(s - s0)^m(s0); exponents are the same
    multiplicities as in the local factored form, shifted to s0 in [0, 2n].
    """

    n: int
    exponents: tuple[tuple[int, int], ...]  # (s0, m), s0 ascending

    def pretty(self) -> str:
        num, den = [], []
        for s0, m in self.exponents:
            base = "zeta(s)" if s0 == 0 else f"zeta(s - {s0})"
            text = base if abs(m) == 1 else f"{base}^{abs(m)}"
            (num if m > 0 else den).append(text)
        top = " ".join(num) or "1"
        if not den:
            return top
        return f"{top} / {' '.join(den)}"


def hasse_weil(n: int) -> HasseWeilExponents:
    """Exponent bookkeeping for the product of shifted Riemann zetas.

    Symmetric under s0 -> 2n - s0, matching the invariance of the completed
    product under s -> 2n - s.
    """
    z = build_local_zeta(n)
    return HasseWeilExponents(n, z.factors)
