"""Exact univariate polynomials in ``t`` with rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class RationalPolynomial:
    """Immutable polynomial with :class:`~fractions.Fraction` coefficients.

    Coefficients are stored in ascending degree order and trimmed, so the
    zero polynomial has an empty coefficient tuple and ``degree == -1``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value: Number) -> "RationalPolynomial":
        return cls([value])

    @classmethod
    def variable(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, m: int) -> Fraction:
        if 0 <= m < len(self._coeffs):
            return self._coeffs[m]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, t: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def evaluate_int(self, t: int) -> int:
        """Evaluate at ``t`` and insist the result is an integer."""
        value = self(t)
        if value.denominator != 1:
            raise ArithmeticError(f"polynomial value at t={t} is not integral: {value}")
        return value.numerator

    def shift(self, h: int) -> "RationalPolynomial":
        """Return the polynomial ``t -> self(t + h)``."""
        result = RationalPolynomial()
        linear = RationalPolynomial([h, 1])
        for c in reversed(self._coeffs):
            result = result * linear + c
        return result

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        size = max(len(a), len(b))
        return RationalPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "RationalPolynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return RationalPolynomial(c / other for c in self._coeffs)

    def __pow__(self, exponent: int) -> "RationalPolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = RationalPolynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for m in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[m]
            if c == 0:
                continue
            mono = "" if m == 0 else ("t" if m == 1 else f"t^{m}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def all_positive(self) -> bool:
        """True iff the polynomial is nonzero and every stored coefficient is > 0."""
        return bool(self._coeffs) and all(c > 0 for c in self._coeffs)

    def dominated_by(self, other: "RationalPolynomial") -> bool:
        """Coefficientwise ``self <= other``."""
        diff = other - self
        return all(c >= 0 for c in diff.coefficients)


def interpolate(points: Sequence[tuple[int, Number]]) -> RationalPolynomial:
    """Lagrange interpolation through ``(t, value)`` pairs, exactly.

    Raises ``ValueError`` for an empty point list and :class:`DuplicateNodeError`
    when two points share a ``t`` value.
    """
    if not points:
        raise ValueError("interpolation needs at least one point")
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateNodeError(f"duplicate interpolation nodes in {sorted(xs)}")
    result = RationalPolynomial()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = RationalPolynomial([1])
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * RationalPolynomial([-xj, 1])
            denom *= xi - xj
        result = result + basis * Fraction(yi, 1) / denom
    return result


class DuplicateNodeError(ValueError):
    """Two interpolation points share the same abscissa."""
