"""Bernoulli, Euler and Genocchi numbers and polynomials.

Numbers come from linear recurrences obtained by evaluating the Appell
expansion ``P_n(x) = sum_k C(n,k) P_k x^(n-k)`` at ``x = 1``:

* ``B_n(1) - B_n = [n == 1]`` with ``B_0 = 1``,
* ``E_n(1) + E_n = 2 [n == 0]``,
* ``G_n(1) + G_n = 2 [n == 1]`` with ``G_0 = 0``.

:func:`series_oracle` recomputes the numbers independently by truncated
division of the generating functions ``t/(e^t-1)``, ``2/(e^t+1)`` and
``2t/(e^t+1)``; it shares no code with the recurrences.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Literal, Sequence, TypeVar

from .exact_arith import binomial, factorial, kronecker
from .polynomial import Polynomial

Family = Literal["bernoulli", "euler", "genocchi"]
FAMILIES: tuple[str, ...] = ("bernoulli", "euler", "genocchi")


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")


def _next_bernoulli(table: list[Fraction]) -> Fraction:
    # B_m from sum_{k<=m} C(m+1,k) B_k = [m+1 == 1], valid for m >= 1
    m = len(table)
    s = sum((binomial(m + 1, k) * table[k] for k in range(m)), Fraction(0))
    return (kronecker(1, m + 1) - s) / (m + 1)


def _next_euler(table: list[Fraction]) -> Fraction:
    n = len(table)
    s = sum((binomial(n, k) * table[k] for k in range(n)), Fraction(0))
    return (2 * kronecker(0, n) - s) / 2


def _next_genocchi(table: list[Fraction]) -> Fraction:
    n = len(table)
    s = sum((binomial(n, k) * table[k] for k in range(n)), Fraction(0))
    return (2 * kronecker(1, n) - s) / 2


_SEEDS = {
    "bernoulli": (Fraction(1), _next_bernoulli),
    "euler": (Fraction(1), _next_euler),
    "genocchi": (Fraction(0), _next_genocchi),
}


class SequenceCache:
    """Write-once memo tables for the three families.

    Tables only ever grow.  Growth happens under a lock; readers that hit
    an already populated index never block.
    """

    def __init__(self):
        self._numbers: dict[str, list[Fraction]] = {f: [seed] for f, (seed, _) in _SEEDS.items()}
        self._polys: dict[str, dict[int, Polynomial]] = {f: {} for f in FAMILIES}
        self._lock = threading.RLock()

    def number(self, family: str, n: int) -> Fraction:
        _check_family(family)
        _check_index(n)
        table = self._numbers[family]
        if n < len(table):
            return table[n]
        with self._lock:
            step = _SEEDS[family][1]
            while len(table) <= n:
                table.append(step(table))
            return table[n]

    def numbers(self, family: str, n_max: int) -> list[Fraction]:
        self.number(family, n_max)
        return list(self._numbers[family][: n_max + 1])

    def poly(self, family: str, n: int) -> Polynomial:
        _check_family(family)
        _check_index(n)
        cached = self._polys[family].get(n)
        if cached is not None:
            return cached
        nums = self.numbers(family, n)
        p = Polynomial(binomial(n, k) * nums[k] for k in range(n, -1, -1))
        with self._lock:
            return self._polys[family].setdefault(n, p)


_cache = SequenceCache()


def bernoulli_number(n: int) -> Fraction:
    return _cache.number("bernoulli", n)


def euler_number(n: int) -> Fraction:
    """E_n = E_n(0); rational, not the integer secant numbers."""
    return _cache.number("euler", n)


def genocchi_number(n: int) -> Fraction:
    return _cache.number("genocchi", n)


def number(family: str, n: int) -> Fraction:
    return _cache.number(family, n)


def bernoulli_poly(n: int) -> Polynomial:
    return _cache.poly("bernoulli", n)


def euler_poly(n: int) -> Polynomial:
    return _cache.poly("euler", n)


def genocchi_poly(n: int) -> Polynomial:
    """G_n(x), of degree n - 1 (the zero polynomial for n = 0)."""
    return _cache.poly("genocchi", n)


def poly(family: str, n: int) -> Polynomial:
    return _cache.poly(family, n)


# Genocchi polynomials as published (ascending coefficients), kept verbatim.
PUBLISHED_GENOCCHI_POLYS = {
    1: (1,),
    2: (-1, 2),
    3: (0, -3, 3),
    4: (-1, 0, -6, 4),
}


def published_poly_discrepancies() -> list[dict]:
    out = []
    for n, coeffs in sorted(PUBLISHED_GENOCCHI_POLYS.items()):
        computed = genocchi_poly(n)
        if computed != Polynomial(coeffs):
            out.append(
                {
                    "object": f"G_{n}(x)",
                    "computed": computed.to_strings(),
                    "published": Polynomial(coeffs).to_strings(),
                    "reason": f"sum_k C({n},k) G_k x^({n}-k) with G_{n} = {genocchi_number(n)}",
                }
            )
    return out


# generating-function oracle

T = TypeVar("T", Fraction, Polynomial)


def series_divide(numer: Sequence[T], denom: Sequence[Fraction], order: int) -> list[T]:
    """Coefficients 0..order of numer/denom as truncated formal power series.

    ``numer`` may hold rationals or polynomials (coefficients in Q[x]);
    ``denom`` must have an invertible constant term.
    """
    if denom[0] == 0:
        raise ZeroDivisionError("series denominator has zero constant term")
    inv0 = 1 / Fraction(denom[0])
    quot: list = []
    for n in range(order + 1):
        acc = numer[n] if n < len(numer) else numer[0] * 0
        for k in range(1, min(n, len(denom) - 1) + 1):
            if denom[k]:
                acc = acc - quot[n - k] * denom[k]
        quot.append(acc * inv0)
    return quot


def _gf_parts(family: str, order: int):
    """(shift, denominator) with gf = c t**shift / denominator, c = 1 or 2."""
    _check_family(family)
    if family == "bernoulli":
        # t/(e^t - 1) = 1 / sum t^k/(k+1)!
        return 0, [Fraction(1, factorial(k + 1)) for k in range(order + 1)]
    den = [Fraction(1, factorial(k)) for k in range(order + 1)]
    den[0] += 1  # e^t + 1
    numer_shift = 1 if family == "genocchi" else 0
    return numer_shift, den


def series_oracle(family: str, order: int) -> list[Fraction]:
    """Numbers 0..order read off the truncated generating function."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    shift, den = _gf_parts(family, order)
    scale = 1 if family == "bernoulli" else 2
    numer = [Fraction(0)] * (order + 1)
    if shift <= order:
        numer[shift] = Fraction(scale)
    coeffs = series_divide(numer, den, order)
    return [c * factorial(n) for n, c in enumerate(coeffs)]


def series_poly_oracle(family: str, order: int) -> list[Polynomial]:
    """Polynomials 0..order read off ``gf(t) * e^(xt)`` with Q[x] coefficients."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    shift, den = _gf_parts(family, order)
    scale = 1 if family == "bernoulli" else 2
    # t^shift * e^(xt) has coefficient x^(n-shift)/(n-shift)! at t^n
    numer = [
        Polynomial.monomial(n - shift, Fraction(scale, factorial(n - shift)))
        if n >= shift
        else Polynomial()
        for n in range(order + 1)
    ]
    coeffs = series_divide(numer, den, order)
    return [c.scale(factorial(n)) for n, c in enumerate(coeffs)]
