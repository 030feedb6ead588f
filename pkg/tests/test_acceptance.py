"""Acceptance gate.  Each test prints one PASS/FAIL line and tags itself
with its criterion number; the terminal summary lists them together."""
import subprocess
import sys
from contextlib import contextmanager
from fractions import Fraction
from math import factorial
from pathlib import Path

import pytest

from genocchi.basis import (
    PUBLISHED_CUBIC,
    PUBLISHED_QUADRATIC,
    BasisKind,
    from_basis,
    genocchi_change_matrix,
    matrix_discrepancies,
    to_basis,
)
from genocchi.cli import _json, build_report, ledger_of
from genocchi.identities import (
    EXACT,
    NOT_APPLICABLE,
    check,
    harmonic_c,
    harmonic_c_closed,
    lhs,
    rhs_theorem,
    summarize,
    verify_suite,
)
from genocchi.integrals import t_closed, t_oracle, t_recurrence
from genocchi.polynomial import Polynomial
from genocchi.sequences import (
    FAMILIES,
    euler_number,
    genocchi_number,
    genocchi_poly,
    number,
    poly,
    series_oracle,
)

from conftest import random_polynomial, random_rational

LEDGER = Path(__file__).resolve().parent.parent / "discrepancy_ledger.json"
THEOREMS = ["thm2.1", "cor2.1", "thm2.3", "cor2.3", "thm2.4", "cor2.4", "thm2.5", "cor2.5", "thm2.6", "cor2.6"]


@pytest.fixture
def criterion(record_property):
    @contextmanager
    def gate(number, title):
        record_property("criterion", (number, title))
        try:
            yield
        except BaseException:
            print(f"FAIL criterion {number}: {title}")
            raise
        print(f"PASS criterion {number}: {title}")

    return gate


def test_c01_number_list(criterion):
    with criterion(1, "Genocchi number list and vanishing odd terms"):
        assert [genocchi_number(n) for n in range(1, 9)] == [1, -1, 0, 1, 0, -3, 0, 17]
        assert all(genocchi_number(2 * n + 1) == 0 for n in range(1, 21))


def test_c02_oracle_equivalence(criterion):
    with criterion(2, "recurrence equals series oracle, n <= 40"):
        for family in FAMILIES:
            assert [number(family, n) for n in range(41)] == series_oracle(family, 40), family


def test_c03_euler_bridge(criterion):
    with criterion(3, "G_(n+1)/(n+1) = E_n, n <= 40"):
        for n in range(41):
            assert Fraction(genocchi_number(n + 1), n + 1) == euler_number(n)


def test_c04_difference_equation(criterion):
    with criterion(4, "(G_(n+1)(x+1) + G_(n+1)(x))/(n+1) = 2x^n, n <= 30"):
        for n in range(31):
            g = genocchi_poly(n + 1)
            assert (g.shift(1) + g) / (n + 1) == Polynomial.monomial(n, 2)


def test_c05_mean_value(criterion):
    with criterion(5, "int_0^1 G_n = -2 G_(n+1)/(n+1), n <= 20"):
        for n in range(1, 21):
            assert genocchi_poly(n).integrate(0, 1) == Fraction(-2 * genocchi_number(n + 1), n + 1)


def test_c06_moment_three_paths(criterion):
    with criterion(6, "T(m,n): oracle, recurrence and closed form agree"):
        for m in range(1, 16):
            for n in range(0, 16):
                assert t_oracle(m, n) == t_recurrence(m, n), (m, n)
        for m in range(1, 16):
            for n in range(1, 16):
                assert t_closed(m, n, "as-printed") == t_oracle(m, n), (m, n)


def test_c07_addition_and_dilation(criterion, rng):
    with criterion(7, "addition theorem at 5 random y and dilation identity, n <= 20"):
        for _ in range(5):
            y = random_rational(rng)
            for n in range(21):
                assert check("eq21", "as-printed", n, y=y).status == EXACT, (y, n)
                assert genocchi_poly(n).shift(y) == sum(
                    (genocchi_poly(k) * (Fraction(factorial(n), factorial(k) * factorial(n - k)) * y ** (n - k))
                     for k in range(n + 1)),
                    Polynomial(),
                )
        for n in range(21):
            weighted = sum(
                (genocchi_poly(l) * Polynomial.monomial(n - l, Fraction(1, factorial(l) * factorial(n - l)))
                 for l in range(n + 1)),
                Polynomial(),
            )
            assert genocchi_poly(n).dilate(2) / factorial(n) == weighted


def test_c08_basis_round_trips(criterion, rng):
    with criterion(8, "basis round trips and unit self-expansions"):
        kinds = [BasisKind.BERNOULLI, BasisKind.EULER, BasisKind.GENOCCHI]
        for _ in range(200):
            p = random_polynomial(rng, 12)
            for kind in kinds:
                assert from_basis(to_basis(p, kind)) == p
        for kind in kinds:
            family = kind.value
            for k in range(kind.start, 13):
                e = to_basis(poly(family, k), kind)
                assert e.indexed() == [(j, 1 if j == k else 0) for j in range(kind.start, k + 1)]


def test_c09_published_matrices(criterion):
    with criterion(9, "quadratic matrix exact; cubic differs only at g_(1,4)"):
        quad = genocchi_change_matrix(2)
        assert [list(r) for r in quad.entries] == [list(r) for r in PUBLISHED_QUADRATIC]
        cubic = genocchi_change_matrix(3)
        differing = [
            (i + 1, j + 1)
            for i, row in enumerate(PUBLISHED_CUBIC)
            for j, value in enumerate(row)
            if cubic.entries[i][j] != value
        ]
        assert differing == [(1, 4)]
        assert cubic.entries[0][3] == 1
        report = build_report("all", 3)
        assert [d.get("entry") for d in matrix_discrepancies(cubic)] == [[1, 4]]
        assert any(d.get("entry") == [1, 4] for d in report["discrepancies"])


def test_c10_theorem_audit(criterion, rng):
    with criterion(10, "theorem audit: residuals, deterministic summary, committed ledger"):
        reports = [r for r in verify_suite("theorems", 12) if r.identity in THEOREMS]
        assert {r.identity for r in reports} == set(THEOREMS)
        for r in reports:
            if r.status == NOT_APPLICABLE:
                continue
            left = lhs(r.identity, r.n)
            right = rhs_theorem(r.identity, r.reading, r.n)
            for _ in range(10):
                x = random_rational(rng)
                assert r.residual.eval(x) == left.eval(x) - right.eval(x), (r.identity, r.reading, r.n)
        first = summarize(reports)
        assert first == summarize([r for r in verify_suite("theorems", 12) if r.identity in THEOREMS])
        assert _json(ledger_of(build_report("all", 12))) == LEDGER.read_text(encoding="utf-8")


def test_c11_harmonic_constants(criterion):
    with criterion(11, "C_(k-1)/k! = C(n,k)(H_(n-1) - H_(n-k))/(n-k+1), 1 <= k <= n <= 15"):
        failures = [
            (n, k)
            for n in range(1, 16)
            for k in range(1, n + 1)
            if harmonic_c(n, k - 1) / factorial(k) != harmonic_c_closed(n, k)
        ]
        assert failures == [], f"first failing (n, k) = {failures[0]}"


def test_c12_cli_determinism(criterion, tmp_path):
    with criterion(12, "verify --suite all --max-n 12 is byte-identical with exit code 0"):
        outputs = []
        for i in range(2):
            path = tmp_path / f"report{i}.json"
            result = subprocess.run(
                [sys.executable, "-m", "genocchi", "verify", "--suite", "all", "--max-n", "12", "--report", str(path)],
                capture_output=True,
            )
            assert result.returncode == 0, result.stderr
            outputs.append((path.read_bytes(), result.stdout))
        assert outputs[0] == outputs[1]
