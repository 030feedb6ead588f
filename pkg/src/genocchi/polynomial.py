"""Dense univariate polynomials over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact_arith import Scalar, binomial, factorial, format_rational, parse_rational


class Polynomial:
    """Immutable polynomial with ascending rational coefficients.

    Trailing zeros are trimmed on construction, so two polynomials are
    equal exactly when their coefficient tuples are.  The zero polynomial
    has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Polynomial:
        if n < 0:
            raise ValueError("negative monomial degree")
        return cls([0] * n + [c])

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        """Parse comma-separated ascending coefficients, e.g. "-1,2" for 2x-1."""
        tokens = text.split(",")
        coeffs = []
        for tok in tokens:
            try:
                coeffs.append(parse_rational(tok))
            except ValueError:
                raise ValueError(f"bad coefficient token {tok.strip()!r}") from None
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        """Coefficient of x**i (zero beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if i == 0:
                body = mag
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == "1" else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # ring operations

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c) -> Polynomial:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1) / Fraction(c))

    def scale(self, c: Scalar) -> Polynomial:
        c = Fraction(c)
        return Polynomial(c * a for a in self.coeffs)

    # calculus

    def __call__(self, x: Scalar) -> Fraction:
        return self.eval(x)

    def eval(self, x: Scalar) -> Fraction:
        """Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, k: int = 1) -> Polynomial:
        if k < 0:
            raise ValueError(f"derivative order must be non-negative, got {k}")
        if k == 0:
            return self
        # d^k/dx^k x^i = i!/(i-k)! x^(i-k)
        return Polynomial(
            self.coeffs[i] * (factorial(i) // factorial(i - k))
            for i in range(k, len(self.coeffs))
        )

    def antiderivative(self) -> Polynomial:
        """The primitive vanishing at 0."""
        return Polynomial([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def integrate(self, a: Scalar, b: Scalar) -> Fraction:
        """Definite integral from ``a`` to ``b``."""
        prim = self.antiderivative()
        return prim.eval(b) - prim.eval(a)

    def shift(self, c: Scalar) -> Polynomial:
        """q(x) = p(x + c), expanding each (x + c)^i binomially."""
        c = Fraction(c)
        if c == 0:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(i + 1):
                out[j] += a * binomial(i, j) * c ** (i - j)
        return Polynomial(out)

    def dilate(self, c: Scalar) -> Polynomial:
        """q(x) = p(c*x)."""
        c = Fraction(c)
        return Polynomial(a * c**i for i, a in enumerate(self.coeffs))

    def to_strings(self) -> list[str]:
        """JSON form: coefficient strings, always "p/q"."""
        return [format_rational(c, machine=True) for c in self.coeffs]


def _coerce(other):
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, (int, Fraction)):
        return Polynomial.constant(other)
    return NotImplemented


X = Polynomial([0, 1])


def shift_taylor(p: Polynomial, c: Scalar) -> Polynomial:
    """p(x + c) = sum_k p^(k)(c) x^k / k!; independent of :meth:`Polynomial.shift`."""
    c = Fraction(c)
    return Polynomial(p.derivative(k).eval(c) / factorial(k) for k in range(len(p.coeffs)))


def linear_combination(coeffs: Sequence[Scalar], polys: Sequence[Polynomial]) -> Polynomial:
    out = [Fraction(0)] * max((len(p.coeffs) for p in polys), default=0)
    for c, p in zip(coeffs, polys):
        c = Fraction(c)
        if c == 0:
            continue
        for i, a in enumerate(p.coeffs):
            out[i] += c * a
    return Polynomial(out)
