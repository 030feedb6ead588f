"""Expansions in the Bernoulli, Euler and Genocchi bases.

The coefficient formulas come from linear functionals that pick out one
basis element each:

* Bernoulli: ``int_0^1 B_m = [m == 0]`` and ``B_m(1) - B_m(0) = [m == 1]``,
  so ``a_0 = int_0^1 p`` and ``a_k = (p^(k-1)(1) - p^(k-1)(0)) / k!``.
* Euler: ``(E_m(1) + E_m(0))/2 = [m == 0]``, so
  ``b_k = (p^(k)(1) + p^(k)(0)) / (2 k!)``.
* Genocchi: ``(G_m(1) + G_m(0))/2 = [m == 1]``, so
  ``a_k = (p^(k-1)(1) + p^(k-1)(0)) / (2 k!)`` for ``k = 1..deg p + 1``.

The upper-triangular change-of-basis matrix gives a second, independent
route to the Genocchi coefficients by back-substitution.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact_arith import factorial, format_rational
from .polynomial import Polynomial, linear_combination
from .sequences import bernoulli_poly, euler_poly, genocchi_poly


class BasisKind(str, Enum):
    POWER = "power"
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"

    @property
    def start(self) -> int:
        """Index of the first basis element (Genocchi bases begin at G_1)."""
        return 1 if self is BasisKind.GENOCCHI else 0

    def element(self, k: int) -> Polynomial:
        if self is BasisKind.POWER:
            return Polynomial.monomial(k)
        if self is BasisKind.BERNOULLI:
            return bernoulli_poly(k)
        if self is BasisKind.EULER:
            return euler_poly(k)
        return genocchi_poly(k)


@dataclass(frozen=True)
class BasisExpansion:
    """Coefficient ``coefficients[i]`` multiplies basis element ``start + i``."""

    kind: BasisKind
    coefficients: tuple[Fraction, ...]

    @property
    def start(self) -> int:
        return self.kind.start

    def coefficient(self, k: int) -> Fraction:
        i = k - self.start
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def indexed(self) -> list[tuple[int, Fraction]]:
        return [(self.start + i, c) for i, c in enumerate(self.coefficients)]


def _size(p: Polynomial) -> int:
    return max(p.degree, 0) + 1


def to_bernoulli_basis(p: Polynomial) -> BasisExpansion:
    coeffs = [p.integrate(0, 1)]
    for k in range(1, _size(p)):
        d = p.derivative(k - 1)
        coeffs.append((d.eval(1) - d.eval(0)) / factorial(k))
    return BasisExpansion(BasisKind.BERNOULLI, tuple(coeffs))


def to_euler_basis(p: Polynomial) -> BasisExpansion:
    coeffs = []
    for k in range(_size(p)):
        d = p.derivative(k)
        coeffs.append((d.eval(1) + d.eval(0)) / (2 * factorial(k)))
    return BasisExpansion(BasisKind.EULER, tuple(coeffs))


def to_genocchi_basis(p: Polynomial) -> BasisExpansion:
    coeffs = []
    for k in range(1, _size(p) + 1):
        d = p.derivative(k - 1)
        coeffs.append((d.eval(1) + d.eval(0)) / (2 * factorial(k)))
    return BasisExpansion(BasisKind.GENOCCHI, tuple(coeffs))


def to_power_basis(p: Polynomial) -> BasisExpansion:
    return BasisExpansion(BasisKind.POWER, p.coeffs or (Fraction(0),))


_EXPANDERS = {
    BasisKind.POWER: to_power_basis,
    BasisKind.BERNOULLI: to_bernoulli_basis,
    BasisKind.EULER: to_euler_basis,
    BasisKind.GENOCCHI: to_genocchi_basis,
}


def to_basis(p: Polynomial, kind: BasisKind | str) -> BasisExpansion:
    return _EXPANDERS[BasisKind(kind)](p)


def from_basis(e: BasisExpansion) -> Polynomial:
    kind = BasisKind(e.kind)
    elements = [kind.element(k) for k, _ in e.indexed()]
    return linear_combination(e.coefficients, elements)


@dataclass(frozen=True)
class BasisMatrix:
    """Upper-triangular matrix whose column j (1-based) holds G_j(x) in powers of x.

    ``entries[i][j]`` is the coefficient of x**i in G_{j+1}(x).
    """

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [[format_rational(v, machine=True) for v in row] for row in self.entries],
        }

    def to_latex(self) -> str:
        size = self.n + 1
        powers = ["1", "x"] + [f"x^{{{i}}}" for i in range(2, size)]
        rows = [" & ".join(_latex_rational(v) for v in row) for row in self.entries]
        return "\n".join(
            [
                r"p\left( x\right) =\left(",
                r"\begin{array}{" + "c" * size + "}",
                " & ".join(powers[:size]),
                r"\end{array}",
                r"\right) \left(",
                r"\begin{array}{" + "c" * size + "}",
                " \\\\\n".join(rows),
                r"\end{array}",
                r"\right) \left(",
                r"\begin{array}{c}",
                " \\\\\n".join(f"C_{{{j}}}" for j in range(1, size + 1)),
                r"\end{array}",
                r"\right)",
            ]
        )


def _latex_rational(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    sign = "-" if v < 0 else ""
    return f"{sign}\\frac{{{abs(v.numerator)}}}{{{v.denominator}}}"


# Matrices as published for the quadratic and cubic cases, kept verbatim so
# that disagreements with the generated polynomials can be reported.
PUBLISHED_CUBIC = (
    (1, -1, 0, -1),
    (0, 2, -3, 0),
    (0, 0, 3, -6),
    (0, 0, 0, 4),
)
PUBLISHED_QUADRATIC = (
    (1, -1, 0),
    (0, 2, -3),
    (0, 0, 3),
)


def matrix_discrepancies(m: BasisMatrix) -> list[dict]:
    """Entries where ``m`` differs from the published quadratic/cubic matrices."""
    published = {2: PUBLISHED_QUADRATIC, 3: PUBLISHED_CUBIC}
    out = []
    for size_n, table in published.items():
        if m.n < size_n:
            continue
        for i, row in enumerate(table):
            for j, value in enumerate(row):
                if m.entries[i][j] != value:
                    out.append(
                        {
                            "entry": [i + 1, j + 1],
                            "computed": format_rational(m.entries[i][j], machine=True),
                            "published": format_rational(value, machine=True),
                            "published_case": "cubic" if size_n == 3 else "quadratic",
                            "reason": f"column {j + 1} is G_{j + 1}(x) = {genocchi_poly(j + 1)}",
                        }
                    )
    return out


def genocchi_change_matrix(n: int) -> BasisMatrix:
    if n < 0:
        raise ValueError(f"matrix size index must be non-negative, got {n}")
    columns = [genocchi_poly(j) for j in range(1, n + 2)]
    entries = tuple(tuple(col[i] for col in columns) for i in range(n + 1))
    return BasisMatrix(n, entries)


def solve_upper_triangular(m: BasisMatrix, p: Polynomial) -> list[Fraction]:
    """Back-substitute ``m @ c = coeffs(p)`` for the Genocchi coordinates c."""
    if p.degree > m.n:
        raise ValueError(f"polynomial degree {p.degree} exceeds matrix order {m.n}")
    size = m.n + 1
    rhs = [p[i] for i in range(size)]
    c = [Fraction(0)] * size
    for i in range(size - 1, -1, -1):
        diag = m.entries[i][i]
        if diag == 0:
            raise ZeroDivisionError(f"singular diagonal entry at row {i}")
        acc = rhs[i] - sum((m.entries[i][j] * c[j] for j in range(i + 1, size)), Fraction(0))
        c[i] = acc / diag
    return c
