"""Moment integrals of Genocchi, Bernoulli and Euler polynomials on [0, 1].

``T(m, n) = int_0^1 G_m(x) x^n dx`` is available three ways:

* :func:`t_oracle` integrates the product polynomial directly,
* :func:`t_recurrence` uses integration by parts,
  ``T(m, n) = -G_{m+1}/(m+1) - n/(m+1) T(m+1, n-1)`` down to
  ``T(m, 0) = -2 G_{m+1}/(m+1)``,
* :func:`t_closed` sums the unrolled recurrence in closed form.

The closed form has two typographic readings (whether the tail term sits
under the ``1/(n+1)`` prefactor); both are exposed so the grid sweep can
decide between them.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import NamedTuple

from .exact_arith import binomial
from .polynomial import Polynomial
from .sequences import bernoulli_poly, euler_poly, genocchi_number, genocchi_poly

T_READINGS = ("as-printed", "prefactor-wide")


class MomentKey(NamedTuple):
    m: int
    n: int


_memo: dict[MomentKey, Fraction] = {}
_memo_lock = threading.Lock()


def _check(m: int, n: int, m_min: int = 1, n_min: int = 0) -> None:
    if m < m_min or n < n_min:
        raise ValueError(f"moment index out of range: m={m} (>= {m_min}), n={n} (>= {n_min})")


def t_oracle(m: int, n: int) -> Fraction:
    _check(m, n)
    return (genocchi_poly(m) * Polynomial.monomial(n)).integrate(0, 1)


def t_recurrence(m: int, n: int) -> Fraction:
    _check(m, n)
    key = MomentKey(m, n)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    # iterate upward from the base column instead of recursing
    value = -2 * genocchi_number(m + n + 1) / (m + n + 1)
    for step in range(1, n + 1):
        mm, nn = m + n - step, step
        value = -genocchi_number(mm + 1) / (mm + 1) - Fraction(nn, mm + 1) * value
    with _memo_lock:
        return _memo.setdefault(key, value)


def t_closed(m: int, n: int, reading: str = "as-printed") -> Fraction:
    """Closed form of T(m, n) for m, n >= 1."""
    _check(m, n, 1, 1)
    if reading not in T_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    body = sum(
        (
            Fraction((-1) ** j * binomial(n + 1, j), binomial(m + j, m)) * genocchi_number(m + j)
            for j in range(1, n + 1)
        ),
        Fraction(0),
    )
    tail = 2 * (-1) ** (n + 1) * genocchi_number(n + m + 1) / ((n + m + 1) * binomial(n + m, m))
    if reading == "as-printed":
        return body / (n + 1) + tail
    return (body + tail) / (n + 1)


def i_moment(m: int, n: int) -> Fraction:
    """int_0^1 B_m(x) x^n dx."""
    _check(m, n, 0, 0)
    return (bernoulli_poly(m) * Polynomial.monomial(n)).integrate(0, 1)


def j_moment(m: int, n: int) -> Fraction:
    """int_0^1 E_m(x) x^n dx."""
    _check(m, n, 0, 0)
    return (euler_poly(m) * Polynomial.monomial(n)).integrate(0, 1)


def moment_grid(kind: str, m_max: int, n_max: int) -> list[tuple[int, int, Fraction]]:
    """Cells (m, n, value) in row-major order. ``kind`` is T, T-closed, I or J."""
    kind = kind.upper()
    if kind == "T":
        return [(m, n, t_recurrence(m, n)) for m in range(1, m_max + 1) for n in range(n_max + 1)]
    if kind == "T-CLOSED":
        return [(m, n, t_closed(m, n)) for m in range(1, m_max + 1) for n in range(1, n_max + 1)]
    if kind == "I":
        return [(m, n, i_moment(m, n)) for m in range(m_max + 1) for n in range(n_max + 1)]
    if kind == "J":
        return [(m, n, j_moment(m, n)) for m in range(m_max + 1) for n in range(n_max + 1)]
    raise ValueError(f"unknown integral kind {kind!r}")
