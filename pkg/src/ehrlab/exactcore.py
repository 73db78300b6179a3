"""
Exact arithmetic core: rationals, dense univariate polynomials, interpolation,
power sums, fraction-free determinants and binomial coefficients.

Integers are Python ints and rationals are fractions.Fraction (always in
lowest terms with a positive denominator), so nothing here can overflow or
round. Every value is immutable.

Wire format for polynomials: a JSON array of "p/q" strings in ascending
degree, integers rendered "p/1".
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import DegenerateInterpolationError, InconsistentComputationError, NonSquareMatrixError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

# Degree of the zero polynomial.
ZERO_DEGREE = -math.inf


# ---- Rational codec ----
def format_rational(value: Scalar) -> str:
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer) into a Fraction."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        denominator = int(den)
        if denominator <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return Fraction(int(num), denominator)
    return Fraction(int(text))


def factorial(n: int) -> int:
    return math.factorial(n)


# =============================================================================
# Polynomials
# =============================================================================

@dataclass(frozen=True)
class UniPolynomial:
    """Dense polynomial with rational coefficients, ascending degree, trimmed."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    # ---- Constructors ----
    @classmethod
    def zero(cls) -> "UniPolynomial":
        return cls(())

    @classmethod
    def constant(cls, value: Scalar) -> "UniPolynomial":
        return cls((Fraction(value),))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> "UniPolynomial":
        return cls(tuple([Fraction(0)] * degree + [Fraction(coefficient)]))

    @classmethod
    def linear(cls, shift: Scalar, slope: Scalar = 1) -> "UniPolynomial":
        """slope * x + shift"""
        return cls((Fraction(shift), Fraction(slope)))

    # ---- Inspection ----
    @property
    def degree(self) -> Union[int, float]:
        return len(self.coefficients) - 1 if self.coefficients else ZERO_DEGREE

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def has_negative_coefficient(self) -> bool:
        return any(c < 0 for c in self.coefficients)

    def min_coefficient(self) -> Tuple[Fraction, int]:
        """Smallest coefficient and the lowest degree where it occurs."""
        if not self.coefficients:
            return Fraction(0), 0
        value = min(self.coefficients)
        return value, self.coefficients.index(value)

    # ---- Evaluation ----
    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    # ---- Arithmetic ----
    def __add__(self, other: Union["UniPolynomial", Scalar]) -> "UniPolynomial":
        other = _as_polynomial(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return UniPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "UniPolynomial":
        return UniPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["UniPolynomial", Scalar]) -> "UniPolynomial":
        return self + (-_as_polynomial(other))

    def __rsub__(self, other: Scalar) -> "UniPolynomial":
        return _as_polynomial(other) - self

    def __mul__(self, other: Union["UniPolynomial", Scalar]) -> "UniPolynomial":
        if not isinstance(other, UniPolynomial):
            return UniPolynomial(tuple(c * other for c in self.coefficients))
        if not self.coefficients or not other.coefficients:
            return UniPolynomial.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UniPolynomial(tuple(out))

    __rmul__ = __mul__

    # ---- Serialization ----
    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "UniPolynomial":
        return cls(tuple(parse_rational(s) for s in data))

    def render(self, var: str = "n") -> str:
        """Human-readable form, highest degree first, explicit fractions."""
        if not self.coefficients:
            return "0"
        parts: List[str] = []
        for degree in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if degree == 0:
                body = str(mag)
            else:
                power = var if degree == 1 else f"{var}^{degree}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _as_polynomial(value: Union[UniPolynomial, Scalar]) -> UniPolynomial:
    return value if isinstance(value, UniPolynomial) else UniPolynomial.constant(value)


def polynomial_product(factors: Iterable[UniPolynomial]) -> UniPolynomial:
    acc = UniPolynomial.constant(1)
    for f in factors:
        acc = acc * f
    return acc


def shifted_factors(*shifts: int) -> UniPolynomial:
    """(x + s1)(x + s2)... ; repeated shifts give powers."""
    return polynomial_product(UniPolynomial.linear(s) for s in shifts)


# =============================================================================
# Interpolation and power sums
# =============================================================================

def interpolate_polynomial(points: Sequence[Tuple[int, Scalar]]) -> UniPolynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton divided differences, then expansion into the monomial basis.
    """
    if not points:
        raise DegenerateInterpolationError("degenerate interpolation nodes: no points")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DegenerateInterpolationError("degenerate interpolation nodes")
    coeffs = [Fraction(y) for _, y in points]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])

    poly = UniPolynomial.constant(coeffs[-1])
    for i in range(n - 2, -1, -1):
        poly = poly * UniPolynomial.linear(-xs[i]) + coeffs[i]
    return poly


def power_sum_polynomial(ell: int) -> UniPolynomial:
    """p(n) = sum_{j=1}^{n+1} j**ell, recovered from its values at n = 0..ell+1."""
    if ell < 0:
        raise ValueError(f"exponent must be non-negative, got {ell}")
    points = []
    running = 0
    for n in range(ell + 2):
        running += (n + 1) ** ell
        points.append((n, running))
    return interpolate_polynomial(points)


# =============================================================================
# Integer matrices
# =============================================================================

@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"matrix of shape {self.rows}x{self.cols} needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("matrix rows have different lengths")
        return cls(len(rows), cols, tuple(int(v) for r in rows for v in r))

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    The pivot for column k is the first row at or below k with a nonzero
    entry in that column.
    """
    if m.rows != m.cols:
        raise NonSquareMatrixError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                quotient, remainder = divmod(num, prev)
                if remainder:
                    raise InconsistentComputationError("Bareiss step produced a non-exact division")
                a[i][j] = quotient
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient n(n-1)...(n-k+1)/k!."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    falling = 1
    for i in range(k):
        falling *= n - i
    quotient, remainder = divmod(falling, math.factorial(k))
    if remainder:
        raise InconsistentComputationError(f"binomial({n}, {k}) division was not exact")
    return quotient
