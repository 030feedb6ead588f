"""Exact scalars: normalized rationals and the combinatorial helpers.

Python ints are arbitrary precision, so ``Integer`` is just ``int`` and
``Rational`` is :class:`fractions.Fraction`, which normalizes eagerly
(gcd 1, positive denominator) after every operation.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction]


def rat(num: int, den: int = 1) -> Fraction:
    """Return the normalized rational ``num/den``.

    >>> rat(-3, -6)
    Fraction(1, 2)
    """
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in rat({num}, {den})")
    return Fraction(num, den)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return _binomial(n, min(k, n - k))


@lru_cache(maxsize=None)
def _binomial(n: int, k: int) -> int:
    if k == 0:
        return 1
    return _binomial(n, k - 1) * (n - k + 1) // k


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial: n must be non-negative, got {n}")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def falling(n: int, k: int) -> int:
    """Falling factorial n(n-1)...(n-k+1); 1 for k = 0."""
    out = 1
    for i in range(k):
        out *= n - i
    return out


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise ValueError(f"harmonic: n must be non-negative, got {n}")
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def kronecker(n: int, m: int) -> int:
    return 1 if n == m else 0


def power0(base: Scalar, exp: int) -> Fraction:
    """``base**exp`` with the convention 0**0 = 1."""
    if exp == 0:
        return Fraction(1)
    return Fraction(base) ** exp


def format_rational(q: Scalar, *, machine: bool = False) -> str:
    """Render ``q`` as "p/q"; integers drop "/1" unless ``machine`` is set."""
    q = Fraction(q)
    if q.denominator == 1 and not machine:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer. Accepts the unicode minus sign."""
    token = text.strip().replace("−", "-")
    if not token:
        raise ValueError("empty rational literal")
    num, sep, den = token.partition("/")
    try:
        if sep:
            return rat(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc
