"""
Exact dense integer polynomials.

IntPoly stores coefficients in ascending powers (a0 first) as arbitrary-size
Python ints, with no trailing zeros. It houses independence polynomials,
their reduced forms, Chebyshev polynomials and iterates P^m.
"""

import cmath
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from ..utils.error_handler import (
    CoefficientOverflowError,
    NumericOverflowError,
    PolynomialError,
    PolynomialParseError,
)

logger = logging.getLogger('indatt.polynomials.intpoly')

Exact = Union[int, Fraction]

LOG2_10 = math.log2(10)
_max_coefficient_bits = int(1_000_000 * LOG2_10) + 1
_max_parse_degree = 100_000

# Below this many coefficient pairs the schoolbook product wins
KRONECKER_THRESHOLD = 4096


def set_max_coefficient_digits(digits: int) -> None:
    """
    Set the coefficient-size guard.

    Args:
        digits: Largest number of decimal digits any coefficient may reach
    """
    global _max_coefficient_bits
    if digits < 1:
        raise PolynomialError(f"max_coefficient_digits must be positive, got {digits}")
    _max_coefficient_bits = int(digits * LOG2_10) + 1
    logger.debug(f"Coefficient guard set to {digits} digits")


def max_coefficient_digits() -> int:
    return int(_max_coefficient_bits / LOG2_10)


def set_max_parse_degree(degree: int) -> None:
    """
    Set the largest exponent parse_poly accepts.

    Args:
        degree: Largest exponent a parsed term may carry
    """
    global _max_parse_degree
    if degree < 1:
        raise PolynomialError(f"max_degree must be positive, got {degree}")
    _max_parse_degree = degree
    logger.debug(f"Parse degree limit set to {degree}")


def max_parse_degree() -> int:
    return _max_parse_degree


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _guard(coeffs: Sequence[int]) -> None:
    for c in coeffs:
        if c.bit_length() > _max_coefficient_bits:
            digits = int(c.bit_length() / LOG2_10)
            raise CoefficientOverflowError(
                f"Coefficient with ~{digits} digits exceeds the guard of {max_coefficient_digits()} digits",
                details={"digits": digits, "limit": max_coefficient_digits()}
            )


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, a0 first."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        stripped = _strip(int(c) for c in self.coeffs)
        object.__setattr__(self, 'coeffs', stripped)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def identity(cls) -> "IntPoly":
        """The polynomial z."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def has_positive_coefficients(self) -> bool:
        """True iff every stored coefficient is strictly positive."""
        return bool(self.coeffs) and all(c > 0 for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return add(self, other)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return subtract(self, other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_poly(self)


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPoly(tuple(a.coefficient(i) + b.coefficient(i) for i in range(n)))


def subtract(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPoly(tuple(a.coefficient(i) - b.coefficient(i) for i in range(n)))


def scale(p: IntPoly, c: int) -> IntPoly:
    return IntPoly(tuple(c * x for x in p.coeffs))


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _kronecker_nonnegative(a: Sequence[int], b: Sequence[int]) -> list:
    """Product of two non-negative coefficient lists by packing into one integer."""
    if not any(a) or not any(b):
        return [0] * (len(a) + len(b) - 1)
    bits = max(a).bit_length() + max(b).bit_length() + min(len(a), len(b)).bit_length() + 1
    width = (bits + 3) // 4
    fmt = f'0{width}x'

    def pack(coeffs):
        return int(''.join(format(c, fmt) for c in reversed(coeffs)), 16)

    length = len(a) + len(b) - 1
    digits = format(pack(a) * pack(b), 'x').zfill(width * length)
    return [int(digits[k:k + width], 16) for k in range(len(digits) - width, -1, -width)][:length]


def _kronecker(a: Sequence[int], b: Sequence[int]) -> list:
    # Split into positive and negative parts so every packed product is non-negative
    a_pos = [max(c, 0) for c in a]
    a_neg = [max(-c, 0) for c in a]
    b_pos = [max(c, 0) for c in b]
    b_neg = [max(-c, 0) for c in b]
    length = len(a) + len(b) - 1
    out = [0] * length
    for x, y, sign in ((a_pos, b_pos, 1), (a_neg, b_neg, 1), (a_pos, b_neg, -1), (a_neg, b_pos, -1)):
        if any(x) and any(y):
            for i, c in enumerate(_kronecker_nonnegative(x, y)):
                out[i] += sign * c
    return out


def multiply(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    Exact product of two polynomials.

    Raises:
        CoefficientOverflowError: If a product coefficient exceeds the guard
    """
    if a.is_zero() or b.is_zero():
        return IntPoly()
    if len(a.coeffs) * len(b.coeffs) <= KRONECKER_THRESHOLD or min(len(a.coeffs), len(b.coeffs)) < 8:
        out = _schoolbook(a.coeffs, b.coeffs)
    else:
        out = _kronecker(a.coeffs, b.coeffs)
    _guard(out)
    return IntPoly(tuple(out))


def power(p: IntPoly, e: int) -> IntPoly:
    """p raised to a non-negative integer power by repeated squaring."""
    if e < 0:
        raise PolynomialError(f"Negative exponent: {e}")
    result = IntPoly.constant(1)
    base = p
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def compose(outer: IntPoly, inner: IntPoly) -> IntPoly:
    """outer(inner(z)) by Horner's scheme."""
    if outer.is_zero():
        return IntPoly()
    result = IntPoly.constant(outer.coeffs[-1])
    for c in reversed(outer.coeffs[:-1]):
        result = add(multiply(result, inner), IntPoly.constant(c))
    return result


def iterate(p: IntPoly, m: int) -> IntPoly:
    """m-fold self-composition p^m; p^0 is z."""
    if m < 0:
        raise PolynomialError(f"Negative iteration count: {m}")
    result = IntPoly.identity()
    for step in range(m):
        result = compose(p, result)
        logger.debug(f"Iterate {step + 1}/{m}: degree {result.degree}")
    return result


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def derivative_k(p: IntPoly, k: int) -> IntPoly:
    for _ in range(k):
        p = derivative(p)
    return p


def reduced(i: IntPoly) -> IntPoly:
    """
    The reduced independence polynomial I - 1.

    Raises:
        PolynomialError: If the constant term is not 1
    """
    if i.coefficient(0) != 1:
        raise PolynomialError(
            f"Reduced form needs constant term 1, got {i.coefficient(0)}",
            details={"poly": format_poly(i)}
        )
    return subtract(i, IntPoly.constant(1))


def evaluate(p: IntPoly, z: complex) -> complex:
    """
    Horner evaluation at a complex point in double precision.

    The rounding error is bounded by the usual backward-error estimate
    |error| <= 2 d eps sum |a_i| |z|^i; it is not checked here.

    Raises:
        NumericOverflowError: If the value or a coefficient is not finite
    """
    z = complex(z)
    acc = 0j
    try:
        for c in reversed(p.coeffs):
            acc = acc * z + float(c)
    except OverflowError as e:
        raise NumericOverflowError(f"Overflow evaluating polynomial at {z}: {e}")
    if not cmath.isfinite(acc):
        raise NumericOverflowError(f"Non-finite value evaluating polynomial at {z}",
                                   details={"z": z})
    return acc


def evaluate_exact(p: IntPoly, x: Exact) -> Exact:
    """Exact Horner evaluation at an integer or rational point."""
    acc: Exact = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def _synthetic_divide(coeffs: Sequence[int], x: int) -> Tuple[list, int]:
    """Divide by (z - x); returns (quotient ascending, remainder)."""
    quotient = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        carry = carry * x + coeffs[i]
        quotient[i - 1] = carry
    remainder = carry * x + coeffs[0]
    return quotient, remainder


def multiplicity_at(p: IntPoly, x: int) -> int:
    """
    Largest k with (z - x)^k dividing p.

    Raises:
        PolynomialError: For the zero polynomial (every k divides it)
    """
    if p.is_zero():
        raise PolynomialError("Multiplicity of a root of the zero polynomial is undefined")
    coeffs = list(p.coeffs)
    k = 0
    while len(coeffs) > 1:
        quotient, remainder = _synthetic_divide(coeffs, x)
        if remainder != 0:
            break
        k += 1
        coeffs = quotient
    return k


def estimate_iterate_digits(p: IntPoly, m: int) -> float:
    """
    Upper estimate of the decimal digits of the largest coefficient of p^m.

    Uses ||p o q||_1 <= sum |a_i| ||q||_1^i in log space, exact for
    positive coefficients where ||p^m||_1 = p^m(1).
    """
    logs = [(i, math.log10(abs(c))) for i, c in enumerate(p.coeffs) if c != 0]
    if not logs:
        return 0.0
    level = 0.0
    for _ in range(m):
        terms = [lc + i * level for i, lc in logs]
        top = max(terms)
        level = top + math.log10(sum(10 ** (t - top) for t in terms))
    return level


_TERM = re.compile(r'^(?P<coef>\d+)?(?P<star>\*)?(?P<var>z(?:\^(?P<exp>\d+))?)?$')


def parse_poly(text: str) -> IntPoly:
    """
    Parse the textual format "1+16z+20z^2+8z^3+z^4".

    Raises:
        PolynomialParseError: If the text is not a polynomial in z
    """
    s = ''.join(text.split())
    if not s:
        raise PolynomialParseError("Empty polynomial text")
    terms = re.findall(r'[+-]?[^+-]*', s)
    coeffs = {}
    seen = False
    for term in terms:
        if term == '':
            continue
        sign = -1 if term[0] == '-' else 1
        body = term[1:] if term[0] in '+-' else term
        match = _TERM.match(body)
        if not body or not match or (match.group('coef') is None and match.group('var') is None):
            raise PolynomialParseError(f"Malformed term '{term}' in '{text}'", details={"text": text})
        if match.group('star') and not (match.group('coef') and match.group('var')):
            raise PolynomialParseError(f"Malformed term '{term}' in '{text}'", details={"text": text})
        coef = int(match.group('coef')) if match.group('coef') is not None else 1
        if match.group('var') is None:
            exp = 0
        else:
            exp = int(match.group('exp')) if match.group('exp') is not None else 1
        if exp > _max_parse_degree:
            raise PolynomialParseError(
                f"Exponent {exp} in '{text}' exceeds the maximum degree {_max_parse_degree}",
                details={"text": text, "max_degree": _max_parse_degree},
            )
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
        seen = True
    if not seen:
        raise PolynomialParseError(f"No terms in '{text}'", details={"text": text})
    top = max(coeffs)
    return IntPoly(tuple(coeffs.get(i, 0) for i in range(top + 1)))


def format_poly(p: IntPoly) -> str:
    """Print in ascending powers, omitting zero terms and unit coefficients."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        magnitude = abs(c)
        if i == 0:
            term = str(magnitude)
        else:
            var = "z" if i == 1 else f"z^{i}"
            term = var if magnitude == 1 else f"{magnitude}{var}"
        if c < 0:
            parts.append("-" + term)
        else:
            parts.append(("+" if parts else "") + term)
    return "".join(parts)
