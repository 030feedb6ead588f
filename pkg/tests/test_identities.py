from fractions import Fraction
from math import factorial

import pytest

from genocchi.basis import to_bernoulli_basis, to_euler_basis, to_genocchi_basis
from genocchi.exact_arith import harmonic
from genocchi.identities import (
    EXACT,
    MISMATCH,
    NOT_APPLICABLE,
    REGISTRY,
    check,
    dilated_genocchi,
    harmonic_c,
    harmonic_c_closed,
    identity_ids,
    lhs,
    lhs_harmonic_sum,
    lhs_product_sum,
    lhs_weighted_sum,
    rhs_theorem,
    summarize,
    verify,
    verify_foundation,
    verify_suite,
)
from genocchi.polynomial import Polynomial
from genocchi.sequences import genocchi_poly

from conftest import random_rational

F = Fraction


def test_lhs_examples():
    # G_0(x) x + G_1(x) with G_0(x) = 0, G_1(x) = 1
    assert lhs_product_sum(1) == Polynomial([1])
    assert lhs_weighted_sum(1) == Polynomial([1])
    # G_1(x) x / (1 * 1)
    assert lhs_harmonic_sum(2) == Polynomial([0, 1])
    assert dilated_genocchi(2) == Polynomial([F(-1, 2), 2])
    with pytest.raises(ValueError):
        lhs_harmonic_sum(1)


def test_lhs_outside_domain_is_not_applicable():
    report = check("thm2.6", "derived", 1)
    assert report.status == NOT_APPLICABLE
    assert report.residual is None
    assert report.to_json()["residual"] == []


def test_unknown_identity_and_reading():
    with pytest.raises(KeyError):
        lhs("eq99", 3)
    with pytest.raises(KeyError):
        rhs_theorem("thm2.1", "creative", 3)
    with pytest.raises(ValueError):
        identity_ids("everything")


def test_foundation_holds():
    reports = verify_foundation(20)
    assert reports
    bad = [(r.identity, r.reading, r.n) for r in reports if r.status != EXACT and r.reading == "as-printed"]
    assert bad == []
    with pytest.raises(ValueError):
        verify_foundation(1)


def test_eq17_reading_outcome():
    s = summarize(verify("eq17", range(1, 13)))["eq17"]
    assert s["exact_readings"] == ["as-printed"]
    assert s["failed_readings"] == {"prefactor-wide": 1}


def test_eq22_is_weighted_sum():
    for n in range(21):
        assert dilated_genocchi(n) == lhs_weighted_sum(n)


def test_eq21_other_shift():
    y = F(-5, 3)
    assert check("eq21", "as-printed", 7, y=y).status == EXACT
    assert lhs("eq21", 4, y=y) == genocchi_poly(4).shift(y)


def test_verify_ordering():
    reports = verify("thm2.1", [3, 1, 2, 1])
    assert [(r.n, r.reading) for r in reports] == [
        (n, reading) for n in (1, 2, 3) for reading in ("as-printed", "derived", "tail-outside")
    ]


def test_report_invariants():
    for r in verify_suite("theorems", 6):
        if r.status == NOT_APPLICABLE:
            assert r.lhs is None and r.note
            continue
        assert r.residual == r.lhs - r.rhs
        assert (r.status == EXACT) == r.residual.is_zero()


def test_residual_matches_pointwise_recomputation(rng):
    for r in verify_suite("all", 6):
        if r.status == NOT_APPLICABLE:
            continue
        for _ in range(10):
            x = random_rational(rng)
            left = lhs(r.identity, r.n).eval(x)
            right = rhs_theorem(r.identity, r.reading, r.n).eval(x)
            assert r.residual.eval(x) == left - right


@pytest.mark.parametrize(
    "identity, expand",
    [
        ("thm2.1", to_bernoulli_basis),
        ("thm2.3", to_euler_basis),
        ("thm2.4", to_genocchi_basis),
        ("thm2.5", to_bernoulli_basis),
        ("thm2.6", to_genocchi_basis),
    ],
)
def test_derived_reading_matches_basis_expansion(identity, expand):
    spec = REGISTRY[identity]
    for n in range(spec.n_min, 11):
        left = lhs(identity, n)
        assert expand(rhs_theorem(identity, "derived", n)) == expand(left)


def test_printed_theorems_fail_at_smallest_index():
    summary = summarize(verify_suite("theorems", 8))
    for identity in ("thm2.1", "cor2.1", "thm2.3", "cor2.3", "thm2.4", "cor2.4", "thm2.5"):
        assert summary[identity]["failed_readings"]["as-printed"] == 1
    for identity in ("thm2.6", "cor2.6"):
        assert summary[identity]["failed_readings"]["as-printed"] == 2
    assert summary["cor2.5"]["not_applicable_readings"] == ["as-printed"]
    for identity, entry in summary.items():
        assert "derived" in entry["exact_readings"], identity


def test_cor25_printed_is_singular():
    r = check("cor2.5", "as-printed", 3)
    assert r.status == NOT_APPLICABLE
    assert r.note


def test_harmonic_c_examples():
    assert harmonic_c(5, 0) == 0
    assert harmonic_c(3, 1) == F(1, 2)
    # C_(n-1) = (n-1)! H_(n-1)
    for n in range(2, 16):
        assert harmonic_c(n, n - 1) == factorial(n - 1) * harmonic(n - 1)
    with pytest.raises(ValueError):
        harmonic_c(3, 3)


def test_eq26_literal_is_off_by_factor_n():
    for n in range(1, 16):
        for k in range(1, n + 1):
            assert harmonic_c(n, k - 1) / factorial(k) * n == harmonic_c_closed(n, k)
    assert check("eq26", "derived", 12).status == EXACT
    assert check("eq26", "as-printed", 1).status == EXACT
    assert check("eq26", "as-printed", 2).status == MISMATCH
