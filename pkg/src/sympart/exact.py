"""Exact scalar layer: rationals, binomials, factorials, Bernoulli numbers.

``fractions.Fraction`` is the rational type throughout. It normalises to
lowest terms with a positive denominator on construction and after every
operation, and ``str`` gives the wire form ``p/q`` (or ``p`` when ``q == 1``).
"""

from fractions import Fraction
from functools import lru_cache
import math
import re

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class DomainError(ValueError):
    """An argument outside the mathematical domain of an operation."""


def parse_rational(text):
    """Parse ``"p"`` or ``"p/q"`` (optional sign, no whitespace) into a Fraction."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise DomainError(f"malformed rational: {text!r}")
    value = Fraction(text)
    return value


def format_rational(value):
    return str(Fraction(value))


def parse_point(text):
    """Comma-separated rationals, e.g. ``"1,-2,3/4"``."""
    if not text.strip():
        raise DomainError("empty point")
    return tuple(parse_rational(part) for part in text.split(","))


def binomial(a, b):
    """C(a, b), zero when ``b`` is outside ``[0, a]``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def factorial(a):
    if a < 0:
        raise DomainError(f"factorial of negative integer {a}")
    return math.factorial(a)


@lru_cache(maxsize=None)
def bernoulli(k):
    """k-th Bernoulli number with ``B_1 = -1/2``.

    Uses ``sum_{j=0}^{k} C(k+1, j) B_j = 0`` for ``k >= 1``. Odd ``k >= 3``
    short-circuits to zero. The recursion goes through the cache in
    increasing ``k`` so deep calls never stack.
    """
    if k < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {k}")
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(-1, 2)
    if k % 2:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(k):
        acc += math.comb(k + 1, j) * bernoulli(j)
    return -acc / (k + 1)


def bernoulli_table(k_max):
    return [bernoulli(k) for k in range(k_max + 1)]


def common_denominator(values):
    """Least common multiple of the denominators of ``values`` (1 if empty)."""
    return math.lcm(*(Fraction(v).denominator for v in values)) if values else 1
