"""Registry of Genocchi identities with exact symbolic verification.

Each identity has one left-hand side and one or more *readings* of its
right-hand side.  A reading is one way of parsing a formula whose
typesetting is ambiguous or whose printed form is under audit.  The
verifier builds both sides as exact polynomials and reports the residual
``lhs - rhs`` for every (reading, n); it never decides which reading was
meant, it only reports which ones hold.

Conventions used when transcribing printed formulas:

* empty sums are zero and ``0**0 = 1``;
* Genocchi numbers with negative index are zero (no negative powers in
  the generating function);
* a product whose explicit factor is zero vanishes even if the other
  factor (e.g. ``E_{-1}``) is undefined;
* a term that is genuinely singular makes the reading *not applicable*
  at that n rather than a mismatch.

Identity ids follow the numbering used throughout the project (``eq7``,
``thm2.4``, ``cor2.4`` ...); suites are ``foundation`` (independently
derivable facts that must hold) and ``theorems`` (statements under audit).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Callable, Iterable

from .exact_arith import (
    binomial as C,
    factorial as fact,
    format_rational,
    harmonic as H,
    kronecker as delta,
)
from .integrals import T_READINGS, t_closed, t_oracle
from .polynomial import Polynomial, linear_combination
from .sequences import (
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    euler_poly,
    genocchi_number,
    genocchi_poly,
    series_poly_oracle,
)

ZERO = Fraction(0)
EXACT, MISMATCH, NOT_APPLICABLE = "exact", "mismatch", "not_applicable"
# rows of T(m, n) packed into one polynomial per n: coefficient of x^(m-1)
EQ17_M_MAX = 15
DEFAULT_Y = Fraction(3, 7)
DEFAULT_B = Fraction(-2, 5)


class NotApplicable(Exception):
    """A reading has no meaning at this n (singular or out-of-range term)."""


def G(j: int) -> Fraction:
    return ZERO if j < 0 else genocchi_number(j)


def E(j: int) -> Fraction:
    if j < 0:
        raise NotApplicable(f"E_{j} is undefined")
    return euler_number(j)


def cE(c, j: int) -> Fraction:
    """c * E_j, zero when c is zero even if E_j is undefined."""
    if c == 0:
        return ZERO
    return c * E(j)


def gE(j: int) -> Fraction:
    """G_j rewritten through Euler numbers, G_j = j E_(j-1)."""
    return cE(j, j - 1)


def _sum(terms: Iterable) -> Fraction:
    return sum(terms, ZERO)


def _poly_sum(terms: Iterable[Polynomial]) -> Polynomial:
    return sum(terms, Polynomial())


def _expand(coeffs: dict[int, Fraction], basis: Callable[[int], Polynomial]) -> Polynomial:
    ks = sorted(coeffs)
    return linear_combination([coeffs[k] for k in ks], [basis(k) for k in ks])


def _gx_via_euler(k: int) -> Polynomial:
    # G_k(x) = k E_(k-1)(x)
    return euler_poly(k - 1).scale(k) if k >= 1 else Polynomial()


# left-hand sides


def lhs_product_sum(n: int) -> Polynomial:
    """sum_{l=0}^{n} G_l(x) x^(n-l)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _poly_sum(genocchi_poly(l) * Polynomial.monomial(n - l) for l in range(n + 1))


def lhs_weighted_sum(n: int) -> Polynomial:
    """sum_{l=0}^{n} G_l(x) x^(n-l) / (l! (n-l)!)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _poly_sum(
        genocchi_poly(l) * Polynomial.monomial(n - l, Fraction(1, fact(l) * fact(n - l)))
        for l in range(n + 1)
    )


def lhs_harmonic_sum(n: int) -> Polynomial:
    """sum_{k=1}^{n-1} G_k(x) x^(n-k) / (k (n-k))."""
    if n < 2:
        raise ValueError(f"harmonic product sum is empty for n = {n}; need n >= 2")
    return _poly_sum(
        genocchi_poly(k) * Polynomial.monomial(n - k, Fraction(1, k * (n - k))) for k in range(1, n)
    )


def dilated_genocchi(n: int) -> Polynomial:
    """G_n(2x) / n!."""
    return genocchi_poly(n).dilate(2) / fact(n)


# foundation identities


def _eq3_lhs(n: int, b: Fraction = DEFAULT_B) -> Polynomial:
    prim = genocchi_poly(n).antiderivative()
    return prim - prim.eval(b)


def _eq3_rhs(n: int, b: Fraction = DEFAULT_B) -> Polynomial:
    g = genocchi_poly(n + 1)
    return (g - g.eval(b)) / (n + 1)


def _eq17_lhs(n: int) -> Polynomial:
    return Polynomial(t_oracle(m, n) for m in range(1, EQ17_M_MAX + 1))


def _eq17_rhs(reading: str):
    def build(n: int) -> Polynomial:
        return Polynomial(t_closed(m, n, reading) for m in range(1, EQ17_M_MAX + 1))

    return build


def _eq21_lhs(n: int, y: Fraction = DEFAULT_Y) -> Polynomial:
    return genocchi_poly(n).shift(y)


def _eq21_rhs(n: int, y: Fraction = DEFAULT_Y) -> Polynomial:
    y = Fraction(y)
    return _poly_sum(genocchi_poly(k) * (C(n, k) * y ** (n - k)) for k in range(n + 1))


# thm2.1 and cor2.1: product sum in the Bernoulli basis


def _thm21_rhs(n: int, tail_outside: bool, delta_coeff: bool, euler: bool) -> Polynomial:
    const = ZERO
    for k in range(1, n):
        if euler:
            inner = _sum(
                (-1) ** j * Fraction((k + j) * C(n - k + 1, j), (n - k + 1) * C(k + j, j)) * E(k + j - 1)
                for j in range(1, n - k + 1)
            )
            tail = 2 * (-1) ** (n - k + 1) * E(n) / C(n, k)
            dangling = -2 * E(k)
        else:
            inner = _sum(
                (-1) ** j * Fraction(C(n - k + 1, j), (n - k + 1) * C(k + j, k)) * G(k + j)
                for j in range(1, n - k + 1)
            )
            tail = 2 * (-1) ** (n - k + 1) * G(n + 1) / ((n + 1) * C(n, k))
            dangling = -2 * G(k + 1) / (k + 1)
        const += inner + tail
        if not tail_outside:
            const += dangling
    if tail_outside:
        const += -2 * E(n) if euler else -2 * G(n + 1) / (n + 1)

    g = gE if euler else G
    coeffs = {0: const}
    for k in range(1, n + 1):
        pref = Fraction(C(n + 2, k), n + 2)
        if delta_coeff:
            s = 2 - _sum(g(l - k + 1) for l in range(k - 1, n)) - 2 * g(n - k + 1)
        else:
            s = _sum(2 - g(l - k + 1) - g(n - k + 1) for l in range(k - 1, n))
        coeffs[k] = pref * s
    return _expand(coeffs, bernoulli_poly)


# thm2.3 and cor2.3: product sum in the Euler basis


def _thm23_rhs(n: int, variant: str, euler: bool) -> Polynomial:
    g = gE if euler else G
    coeffs = {}
    for k in range(n + 1):
        if variant == "derived":
            b = C(n + 1, k) * (1 if k < n else 0) - Fraction(C(n + 1, k), 2) * _sum(
                g(l - k) for l in range(k, n)
            )
        else:
            if euler:
                # printed: (l-k) E_(l-k-1) - (n-k) E_(n-k-1)
                head = _sum(cE(l - k, l - k - 1) for l in range(k, n))
                tail_one = cE(n - k, n - k - 1)
            else:
                head = _sum(G(l - k) for l in range(k, n))
                tail_one = G(n - k)
            times = (n - k) if variant == "as-printed" else 1
            b = (n + 1) * C(n, k) - Fraction(C(n + 1, k), 2) * (head - times * tail_one)
        coeffs[k] = b
    return _expand(coeffs, euler_poly)


# thm2.4: weighted product sum in the Genocchi basis


def _thm24_rhs(n: int, variant: str) -> Polynomial:
    coeffs = {}
    for l in range(1, n + 1):
        pref = Fraction(2) ** (l - 2) / fact(l)
        inner = ZERO
        for j in range(l - 1, n + 1):
            if variant == "as-printed":
                num = 2 - G(l - j + 1)
            elif variant == "proof-index":
                num = 2 - G(j - l + 1)
            else:
                num = 2 * delta(1, j - l + 1) - G(j - l + 1)
            inner += num / (fact(j - l + 1) * fact(n - j))
        coeffs[l] = pref * inner + Fraction(2) ** (l - 2) / (fact(l) * fact(n - l + 1)) * G(n - l + 1)
    return _expand(coeffs, genocchi_poly)


# thm2.5 and cor2.5: weighted product sum in the Bernoulli basis


def _thm25_const(n: int, weighted: bool, euler: bool) -> Fraction:
    first = -2 * E(n) if euler else -2 * G(n + 1) / (n + 1)
    if weighted:
        first /= fact(n)
    const = first
    for l in range(1, n):
        for j in range(1, n - l + 1):
            w = Fraction((-1) ** j, fact(l) * fact(n - l + 1))
            if euler:
                const += w * Fraction((l + j) * C(n - l + 1, j), C(l + j, l)) * E(l + j - 1)
            else:
                const += w * Fraction(C(n - l + 1, j), C(l + j, l)) * G(l + j)
        if euler:
            tail = 2 * (-1) ** (n - l + 1) * E(n) / C(n, l)
        else:
            tail = 2 * (-1) ** (n - l + 1) * G(n + 1) / ((n + 1) * C(n, l))
        if weighted:
            tail /= fact(l) * fact(n - l)
        const += tail
    return const


def _thm25_rhs(n: int, variant: str, euler: bool) -> Polynomial:
    weighted = variant in ("weighted-moments", "derived")
    coeffs = {0: _thm25_const(n, weighted, euler)}
    for k in range(1, n + 1):
        pref = Fraction(2) ** (k - 1) / fact(k)
        inner = ZERO
        for l in range(k - 1, n + 1):
            i = l - k + 1
            two = 2 * delta(1, i) if variant == "derived" else 2
            if not euler:
                inner += (two - G(i)) / (fact(i) * fact(n - l))
            elif variant == "as-printed":
                if i == 0:
                    raise NotApplicable("term 2/(l-k+1) is singular at l = k-1")
                inner += (Fraction(2, i) - E(i - 1)) / (fact(i - 1) * fact(n - l))
            else:
                # 2/(i (i-1)!) read as 2/i!, and E_(i-1)/(i-1)! = G_i/i! vanishes at i = 0
                inner += (Fraction(two, fact(i)) - (gE(i) / fact(i))) / fact(n - l)
        if euler:
            tail = pref / fact(n - k) * E(n - k)
        else:
            tail = pref / fact(n - k + 1) * G(n - k + 1)
        coeffs[k] = pref * inner - tail
    return _expand(coeffs, bernoulli_poly)


# thm2.6 and cor2.6: harmonic product sum in the Genocchi basis


def harmonic_c(n: int, k: int) -> Fraction:
    """The constant C_k from its defining sum, C_0 = 0.

    C_k = (sum_{j=1}^{k} prod_{i=1..k, i != j} (n - i)) / (n - k)
    """
    if k == 0:
        return ZERO
    if not 1 <= k <= n - 1:
        raise ValueError(f"C_k is defined for 0 <= k <= n-1, got k={k}, n={n}")
    total = sum(prod(n - i for i in range(1, k + 1) if i != j) for j in range(1, k + 1))
    return Fraction(total, n - k)


def harmonic_c_closed(n: int, k: int) -> Fraction:
    """Closed form offered for C_(k-1)/k!: C(n,k) (H_(n-1) - H_(n-k)) / (n-k+1)."""
    return Fraction(C(n, k), n - k + 1) * (H(n - 1) - H(n - k))


def _power_coeff_harmonic(n: int, i: int) -> Fraction:
    # coefficient of G_i x^(n-i) after expanding each G_k(x) by the Appell formula
    return _sum(Fraction(C(k, i), k * (n - k)) for k in range(max(i, 1), n))


def _thm26_coeffs(n: int, variant: str, euler: bool) -> dict[int, Fraction]:
    coeffs = {}
    for k in range(1, n + 1):
        if variant == "derived":
            # (p^(k-1)(1) + p^(k-1)(0)) / (2 k!) applied to each power x^(n-i)
            coeffs[k] = _sum(
                G(i) * _power_coeff_harmonic(n, i) * Fraction(C(n - i, k - 1) * (1 + delta(n - i, k - 1)), 2 * k)
                for i in range(0, n - k + 2)
            )
            continue
        if variant == "as-printed":
            harm = Fraction(C(n, k), 2 * (n - k + 1)) * (H(n - 1) - H(n - k))
        else:
            harm = harmonic_c(n, k - 1) / (2 * fact(k))
        if euler:
            s = _sum((Fraction(2, l - k + 1) - E(l - k)) / (n - l) for l in range(k, n))
        else:
            s = _sum((2 - G(l - k + 1)) / ((n - l) * (l - k + 1)) for l in range(k, n))
        coeffs[k] = harm - Fraction(C(n, k), 2 * n) * s
    return coeffs


def _thm26_rhs(n: int, variant: str, euler: bool) -> Polynomial:
    return _expand(_thm26_coeffs(n, variant, euler), _gx_via_euler if euler else genocchi_poly)


def _eq26_lhs(n: int) -> Polynomial:
    return Polynomial(harmonic_c(n, k - 1) / fact(k) for k in range(1, n + 1))


def _eq26_rhs(variant: str):
    def build(n: int) -> Polynomial:
        if variant == "as-printed":
            return Polynomial(harmonic_c_closed(n, k) for k in range(1, n + 1))
        return Polynomial(
            Fraction(C(n - 1, k - 1), k * (n - k + 1)) * (H(n - 1) - H(n - k)) for k in range(1, n + 1)
        )

    return build


# registry


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    description: str
    suite: str
    n_min: int
    lhs: Callable[..., Polynomial]
    readings: dict[str, Callable[..., Polynomial]] = field(default_factory=dict)
    n_max: int | None = None

    def in_domain(self, n: int) -> bool:
        return n >= self.n_min and (self.n_max is None or n <= self.n_max)


def _build_registry() -> dict[str, IdentitySpec]:
    specs = [
        IdentitySpec(
            "eq2",
            "d/dx G_n(x) = n G_(n-1)(x)",
            "foundation",
            1,
            lambda n: genocchi_poly(n).derivative(1),
            {"as-printed": lambda n: genocchi_poly(n - 1).scale(n)},
        ),
        IdentitySpec(
            "eq3",
            "int_b^x G_n(t) dt = (G_(n+1)(x) - G_(n+1)(b)) / (n+1)",
            "foundation",
            0,
            _eq3_lhs,
            {"as-printed": _eq3_rhs},
        ),
        IdentitySpec(
            "eq4",
            "G_n(x) = sum_k C(n,k) G_k x^(n-k), checked against the generating function",
            "foundation",
            0,
            lambda n: series_poly_oracle("genocchi", n)[n],
            {"as-printed": genocchi_poly},
        ),
        IdentitySpec(
            "eq5",
            "int_0^1 G_n(x) dx = -2 G_(n+1) / (n+1)",
            "foundation",
            1,
            lambda n: Polynomial.constant(genocchi_poly(n).integrate(0, 1)),
            {"as-printed": lambda n: Polynomial.constant(-2 * G(n + 1) / (n + 1))},
        ),
        IdentitySpec(
            "eq7",
            "(G_(n+1)(x+1) + G_(n+1)(x)) / (n+1) = 2 x^n",
            "foundation",
            0,
            lambda n: (genocchi_poly(n + 1).shift(1) + genocchi_poly(n + 1)) / (n + 1),
            {"as-printed": lambda n: Polynomial.monomial(n, 2)},
        ),
        IdentitySpec(
            "eq13.bernoulli",
            "B_n(x) = sum_k C(n,k) B_k x^(n-k), checked against the generating function",
            "foundation",
            0,
            lambda n: series_poly_oracle("bernoulli", n)[n],
            {"as-printed": bernoulli_poly},
        ),
        IdentitySpec(
            "eq13.euler",
            "E_n(x) = sum_k C(n,k) E_k x^(n-k), checked against the generating function",
            "foundation",
            0,
            lambda n: series_poly_oracle("euler", n)[n],
            {"as-printed": euler_poly},
        ),
        IdentitySpec(
            "eq14.bernoulli",
            "B_n(1) - B_n = [n == 1]",
            "foundation",
            0,
            lambda n: Polynomial.constant(bernoulli_poly(n).eval(1) - bernoulli_number(n)),
            {"as-printed": lambda n: Polynomial.constant(delta(1, n))},
        ),
        IdentitySpec(
            "eq14.euler",
            "E_n(1) + E_n = 2 [n == 0]",
            "foundation",
            0,
            lambda n: Polynomial.constant(euler_poly(n).eval(1) + euler_number(n)),
            {"as-printed": lambda n: Polynomial.constant(2 * delta(0, n))},
        ),
        IdentitySpec(
            "eq17",
            f"closed form of T(m,n) for m = 1..{EQ17_M_MAX}, packed as sum_m T(m,n) x^(m-1)",
            "foundation",
            1,
            _eq17_lhs,
            {r: _eq17_rhs(r) for r in T_READINGS},
        ),
        IdentitySpec(
            "eq21",
            "G_n(x+y) = sum_k C(n,k) G_k(x) y^(n-k)",
            "foundation",
            0,
            _eq21_lhs,
            {"as-printed": _eq21_rhs},
        ),
        IdentitySpec(
            "eq22",
            "G_n(2x)/n! = sum_k G_k(x) x^(n-k) / (k! (n-k)!)",
            "foundation",
            0,
            dilated_genocchi,
            {"as-printed": lhs_weighted_sum},
        ),
        IdentitySpec(
            "eq29",
            "G_(n+1)/(n+1) = E_n",
            "foundation",
            0,
            lambda n: Polynomial.constant(G(n + 1) / (n + 1)),
            {"as-printed": lambda n: Polynomial.constant(euler_number(n))},
        ),
        IdentitySpec(
            "thm2.1",
            "sum_l G_l(x) x^(n-l) expanded in Bernoulli polynomials",
            "theorems",
            1,
            lhs_product_sum,
            {
                "as-printed": lambda n: _thm21_rhs(n, False, False, False),
                "tail-outside": lambda n: _thm21_rhs(n, True, False, False),
                "derived": lambda n: _thm21_rhs(n, True, True, False),
            },
        ),
        IdentitySpec(
            "cor2.1",
            "Euler-number form of thm2.1",
            "theorems",
            1,
            lhs_product_sum,
            {
                "as-printed": lambda n: _thm21_rhs(n, False, False, True),
                "tail-outside": lambda n: _thm21_rhs(n, True, False, True),
                "derived": lambda n: _thm21_rhs(n, True, True, True),
            },
        ),
        IdentitySpec(
            "thm2.3",
            "sum_l G_l(x) x^(n-l) expanded in Euler polynomials",
            "theorems",
            1,
            lhs_product_sum,
            {v: (lambda v: lambda n: _thm23_rhs(n, v, False))(v) for v in ("as-printed", "single-tail", "derived")},
        ),
        IdentitySpec(
            "cor2.3",
            "Euler-number form of thm2.3",
            "theorems",
            1,
            lhs_product_sum,
            {v: (lambda v: lambda n: _thm23_rhs(n, v, True))(v) for v in ("as-printed", "single-tail", "derived")},
        ),
        IdentitySpec(
            "thm2.4",
            "sum_l G_l(x) x^(n-l) / (l!(n-l)!) expanded in Genocchi polynomials",
            "theorems",
            1,
            lhs_weighted_sum,
            {v: (lambda v: lambda n: _thm24_rhs(n, v))(v) for v in ("as-printed", "proof-index", "derived")},
        ),
        IdentitySpec(
            "cor2.4",
            "G_n(2x)/n! equals the right-hand side of thm2.4",
            "theorems",
            1,
            dilated_genocchi,
            {v: (lambda v: lambda n: _thm24_rhs(n, v))(v) for v in ("as-printed", "proof-index", "derived")},
        ),
        IdentitySpec(
            "thm2.5",
            "sum_l G_l(x) x^(n-l) / (l!(n-l)!) expanded in Bernoulli polynomials",
            "theorems",
            1,
            lhs_weighted_sum,
            {
                v: (lambda v: lambda n: _thm25_rhs(n, v, False))(v)
                for v in ("as-printed", "weighted-moments", "derived")
            },
        ),
        IdentitySpec(
            "cor2.5",
            "Euler-number form of thm2.5",
            "theorems",
            1,
            lhs_weighted_sum,
            {
                v: (lambda v: lambda n: _thm25_rhs(n, v, True))(v)
                for v in ("as-printed", "merged-factorial", "derived")
            },
        ),
        IdentitySpec(
            "thm2.6",
            "sum_k G_k(x) x^(n-k) / (k(n-k)) expanded in Genocchi polynomials",
            "theorems",
            2,
            lhs_harmonic_sum,
            {
                v: (lambda v: lambda n: _thm26_rhs(n, v, False))(v)
                for v in ("as-printed", "proof-constant", "derived")
            },
        ),
        IdentitySpec(
            "cor2.6",
            "Euler-polynomial form of thm2.6, using G_k(x) = k E_(k-1)(x)",
            "theorems",
            2,
            lhs_harmonic_sum,
            {
                v: (lambda v: lambda n: _thm26_rhs(n, v, True))(v)
                for v in ("as-printed", "proof-constant", "derived")
            },
        ),
        IdentitySpec(
            "eq26",
            "C_(k-1)/k! = C(n,k)(H_(n-1) - H_(n-k))/(n-k+1), packed as sum_k (...) x^(k-1)",
            "theorems",
            1,
            _eq26_lhs,
            {v: _eq26_rhs(v) for v in ("as-printed", "derived")},
        ),
    ]
    return {s.id: s for s in specs}


REGISTRY: dict[str, IdentitySpec] = _build_registry()
SUITES = ("foundation", "theorems", "all")


def identity_ids(suite: str = "all") -> list[str]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [i for i, s in REGISTRY.items() if suite == "all" or s.suite == suite]


def get_identity(identity_id: str) -> IdentitySpec:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def lhs(identity_id: str, n: int, **params) -> Polynomial:
    spec = get_identity(identity_id)
    if not spec.in_domain(n):
        raise NotApplicable(f"{identity_id} is not defined at n = {n}")
    return spec.lhs(n, **params)


def rhs_theorem(identity_id: str, reading: str, n: int, **params) -> Polynomial:
    """Right-hand side of ``identity_id`` under ``reading`` at index n.

    ``params`` are forwarded to identities with a free parameter
    (``y`` for eq21, ``b`` for eq3).
    """
    spec = get_identity(identity_id)
    if reading not in spec.readings:
        raise KeyError(f"unknown reading {reading!r} for {identity_id}; have {sorted(spec.readings)}")
    if not spec.in_domain(n):
        raise NotApplicable(f"{identity_id} is not defined at n = {n}")
    return spec.readings[reading](n, **params)


# reports


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    reading: str
    n: int
    status: str
    lhs: Polynomial | None = None
    rhs: Polynomial | None = None
    residual: Polynomial | None = None
    note: str | None = None

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "reading": self.reading,
            "n": self.n,
            "status": self.status,
            "residual": self.residual.to_strings() if self.residual is not None else [],
        }
        if self.note:
            out["note"] = self.note
        return out


def check(identity_id: str, reading: str, n: int, **params) -> IdentityReport:
    spec = get_identity(identity_id)
    if not spec.in_domain(n):
        return IdentityReport(identity_id, reading, n, NOT_APPLICABLE, note=f"n < {spec.n_min}")
    try:
        left = spec.lhs(n, **params)
        right = rhs_theorem(identity_id, reading, n, **params)
    except NotApplicable as exc:
        return IdentityReport(identity_id, reading, n, NOT_APPLICABLE, note=str(exc))
    residual = left - right
    status = EXACT if residual.is_zero() else MISMATCH
    return IdentityReport(identity_id, reading, n, status, left, right, residual)


def verify(identity_id: str, n_range: Iterable[int], **params) -> list[IdentityReport]:
    """Reports for every (n, reading), ordered by n then reading id."""
    spec = get_identity(identity_id)
    return [
        check(identity_id, reading, n, **params)
        for n in sorted(set(n_range))
        for reading in sorted(spec.readings)
    ]


def verify_suite(suite: str, n_max: int) -> list[IdentityReport]:
    reports = []
    for identity_id in identity_ids(suite):
        spec = get_identity(identity_id)
        reports.extend(verify(identity_id, range(spec.n_min, n_max + 1)))
    return reports


def verify_foundation(n_max: int) -> list[IdentityReport]:
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    return verify_suite("foundation", n_max)


def summarize(reports: Iterable[IdentityReport]) -> dict:
    """Per identity: readings exact on every applicable n, and first failures."""
    table: dict[str, dict[str, list[IdentityReport]]] = {}
    for r in reports:
        table.setdefault(r.identity, {}).setdefault(r.reading, []).append(r)
    out = {}
    for identity_id in sorted(table):
        exact, failed, inapplicable = [], {}, []
        for reading in sorted(table[identity_id]):
            rows = table[identity_id][reading]
            bad = [r.n for r in rows if r.status == MISMATCH]
            if bad:
                failed[reading] = min(bad)
            elif any(r.status == EXACT for r in rows):
                exact.append(reading)
            else:
                inapplicable.append(reading)
        out[identity_id] = {
            "exact_readings": exact,
            "failed_readings": failed,
            "not_applicable_readings": inapplicable,
        }
    return out


def all_identities_hold(summary: dict) -> bool:
    return all(entry["exact_readings"] for entry in summary.values())


def format_residual(p: Polynomial) -> str:
    return ", ".join(format_rational(c) for c in p.coeffs) or "0"
