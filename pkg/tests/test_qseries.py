"""Tests for the exact product expansions.

Small product coefficients are frozen by hand (the first few factors can be
multiplied out on paper), the packed big-int kernels are cross-checked
against naive TruncatedSeries arithmetic, and the eta-quotient expander is
pinned to the classical discriminant-series coefficients.
"""

import pytest

from hilbtorus.laurent import LaurentPoly
from hilbtorus.qseries import (
    ABS_QUARTIC_ETA_SPEC,
    ROOT_ETA_SPECS,
    ROOT_TRACE,
    EtaQuotientSpec,
    eta_quotient_series,
    expand_master_product,
    expand_master_product_reference,
    expand_root_product,
    gauss_series,
    gauss_theta_series,
    phi_series,
    psi_series,
)
from hilbtorus.series import TruncatedSeries


def test_master_product_first_rows():
    s = expand_master_product(6)
    assert s.coeff(0) == LaurentPoly.one()
    assert s.coeff(1) == LaurentPoly({1: 1, 0: -2, -1: 1})
    assert s.coeff(2) == LaurentPoly({2: 1, 1: -1, -1: -1, -2: 1})


def test_master_product_rows_are_balanced():
    s = expand_master_product(16)
    for n in range(1, 17):
        row = s.coeff(n)
        assert row.is_palindromic()
        assert row.evaluate_int(1) == 0
        assert row.max_exp == n
        assert row.min_exp == -n


def test_master_product_matches_reference():
    assert expand_master_product(12) == expand_master_product_reference(12)


# signed root-sequence prefixes, n = 1..10, multiplied out by hand from the
# first few product factors
ROOT_PREFIXES = {
    2: [-4, 4, 0, 4, -8, 0, 0, 4, -4, 8],
    3: [-3, 0, 6, -3, 0, 0, -6, 0, 6, 0],
    4: [-2, -2, 4, 2, 0, -4, 0, 2, -6, 0],
    6: [-1, -2, 0, 1, 4, 0, 0, -2, -4, 2],
}


@pytest.mark.parametrize("d", sorted(ROOT_TRACE))
def test_root_product_prefixes(d):
    s = expand_root_product(d, 10)
    assert s.coeff(0) == 1
    assert [s.coeff(n) for n in range(1, 11)] == ROOT_PREFIXES[d]


def test_root_product_rejects_other_orders():
    with pytest.raises(ValueError):
        expand_root_product(5, 10)


def test_root_product_matches_naive_series():
    order = 40
    for d, u in ROOT_TRACE.items():
        acc = TruncatedSeries(order, [1])
        for i in range(1, order + 1):
            num = TruncatedSeries.monomial(0, order) - TruncatedSeries.monomial(i, order)
            den = (TruncatedSeries.monomial(0, order)
                   - TruncatedSeries.monomial(i, order, u)
                   + TruncatedSeries.monomial(2 * i, order))
            acc = acc * num * num * den.invert()
        assert acc == expand_root_product(d, order), d


def test_gauss_series_is_signed_square_theta():
    order = 300
    assert gauss_series(order) == gauss_theta_series(order)


def test_gauss_theta_prefix():
    s = gauss_theta_series(9)
    assert s.coeffs == (1, -2, 0, 0, 2, 0, 0, 0, 0, -2)


def test_gauss_series_matches_naive_quotient():
    order = 40
    num = TruncatedSeries(order, [1])
    den = TruncatedSeries(order, [1])
    for i in range(1, order + 1):
        one = TruncatedSeries.monomial(0, order)
        ti = TruncatedSeries.monomial(i, order)
        num = num * (one - ti)
        den = den * (one + ti)
    assert num * den.invert() == gauss_series(order)


def test_phi_series():
    assert phi_series(1, 10).coeffs == (1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0)
    assert phi_series(1, 10, negate_arg=True).coeffs == (1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0)
    assert phi_series(2, 10).coeffs == (1, 0, 2, 0, 0, 0, 0, 0, 2, 0, 0)
    with pytest.raises(ValueError):
        phi_series(0, 5)


def test_psi_series():
    assert psi_series(1, 10).coeffs == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1)
    assert psi_series(2, 10).coeffs == (1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        psi_series(0, 5)


def test_phi_split_identity():
    # phi(q^4) + 2q psi(q^8) collects the even and odd squares of phi(q)
    order = 200
    even = phi_series(4, order)
    odd = psi_series(8, order).shift(1) * 2
    assert even + odd == phi_series(1, order)
    assert even - odd == phi_series(1, order, negate_arg=True)


def test_eta_spec_prefactors():
    for spec in (*ROOT_ETA_SPECS.values(), ABS_QUARTIC_ETA_SPEC):
        assert spec.validate() == 0
    assert EtaQuotientSpec(((1, 24),)).validate() == 1


def test_eta_spec_rejects_bad_prefactor():
    with pytest.raises(ValueError):
        EtaQuotientSpec(((1, 1),)).validate()
    with pytest.raises(ValueError):
        EtaQuotientSpec(((1, -24),)).validate()
    with pytest.raises(ValueError):
        EtaQuotientSpec(((0, 24),)).validate()


def test_eta_discriminant_series():
    # eta(z)^24 expands to the discriminant series, whose first coefficients
    # are the classical 1, -24, 252, -1472, 4830, -6048
    s = eta_quotient_series(EtaQuotientSpec(((1, 24),)), 6)
    assert s.coeffs == (0, 1, -24, 252, -1472, 4830, -6048)


def test_eta_quotient_matches_naive_product():
    order = 30
    spec = EtaQuotientSpec(((1, 2), (2, 1), (4, -1)))
    acc = TruncatedSeries(order, [1])
    one = TruncatedSeries.monomial(0, order)
    for scale, e in spec.factors:
        for j in range(scale, order + 1, scale):
            factor = one - TruncatedSeries.monomial(j, order)
            if e > 0:
                for _ in range(e):
                    acc = acc * factor
            else:
                for _ in range(-e):
                    acc = acc * factor.invert()
    assert acc == eta_quotient_series(spec, order)


@pytest.mark.parametrize("d", sorted(ROOT_ETA_SPECS))
def test_root_products_equal_eta_quotients(d):
    order = 200
    assert eta_quotient_series(ROOT_ETA_SPECS[d], order) == expand_root_product(d, order)


def test_abs_quartic_eta_series():
    order = 200
    quartic = expand_root_product(4, order)
    absolute = eta_quotient_series(ABS_QUARTIC_ETA_SPEC, order)
    for n in range(order + 1):
        assert absolute.coeff(n) == abs(quartic.coeff(n)), n
