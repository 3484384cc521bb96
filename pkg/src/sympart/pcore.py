"""Point evaluation of the alternating subset-sum polynomial P_n.

``P_n(x) = sum over nonempty S of (-1)**(|S|+1) * (sum_{j in S} x_j)**n``.

Two independent evaluators: ``eval_P`` enumerates subsets directly, and
``eval_P_recursive`` peels off the last coordinate with
``P_n(x^m) = -sum_{k=1}^{n-1} C(n,k) x_m**(n-k) P_k(x^{m-1})``.
"""

from fractions import Fraction
from functools import lru_cache
import math

import numpy as np

from . import kernels
from .exact import DomainError, binomial, common_denominator

DEFAULT_MAX_VARS = 22


class CapacityError(DomainError):
    """Subset enumeration would exceed the configured variable cap."""


def chi(x):
    """Product of the coordinates."""
    return math.prod((Fraction(v) for v in x), start=Fraction(1))


def _as_point(x):
    xs = tuple(Fraction(v) for v in x)
    if not xs:
        raise DomainError("point must have at least one coordinate")
    return xs


def _integer_scaling(xs):
    """Return ``(ys, L)`` with integer ``ys = L * xs``."""
    L = common_denominator(xs)
    return [int(v * L) for v in xs], L


def _signed_power_sum_int(ys, n):
    """``sum_S sign(S) * (sum_S y)**n`` over all subsets of integer ``ys``."""
    if sum(abs(v) for v in ys) < kernels.INT64_SAFE:
        sums, signs = kernels.signed_subset_sums(np.asarray(ys, dtype=np.int64))
        # merge equal subset sums before the big-integer powers
        values, inverse = np.unique(sums, return_inverse=True)
        weights = np.zeros(values.shape[0], dtype=np.int64)
        np.add.at(weights, inverse, signs.astype(np.int64))
        return sum(int(w) * int(v) ** n for v, w in zip(values, weights) if w and v)
    # big coordinates: same doubling construction on Python ints
    acc = {0: -1}
    for v in ys:
        nxt = dict(acc)
        for s, w in acc.items():
            nxt[s + v] = nxt.get(s + v, 0) - w
        acc = nxt
    return sum(w * s**n for s, w in acc.items() if w and s)


def eval_P(n, x, max_vars=DEFAULT_MAX_VARS):
    """P_n at the rational point ``x`` by inclusion-exclusion over subsets.

    Coordinates are scaled to integers by their common denominator ``L``
    (``P_n`` is homogeneous of degree ``n``), subset sums come from the
    enumeration kernel, and coinciding sums are merged before the exact
    ``n``-th powers are taken.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    xs = _as_point(x)
    if len(xs) > max_vars:
        raise CapacityError(f"m={len(xs)} exceeds subset-enumeration cap {max_vars}")
    ys, L = _integer_scaling(xs)
    return Fraction(_signed_power_sum_int(ys, n), L**n)


def eval_P_recursive(n, x):
    """P_n via the last-coordinate recursion; base case ``P_k(x_1) = x_1**k``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    xs = _as_point(x)

    @lru_cache(maxsize=None)
    def P(k, m):
        if m == 1:
            return xs[0] ** k
        xm = xs[m - 1]
        total = Fraction(0)
        for j in range(1, k):
            total += binomial(k, j) * xm ** (k - j) * P(j, m - 1)
        return -total

    return P(n, len(xs))
