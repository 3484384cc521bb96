"""The normalised cofactor T_r of P_{r+m} and its power-sum expansion.

``P_n(x^m) = (-1)**(m+1) * n!/(n-m)! * chi_m * T_{n-m}(x^m)``.

``eval_T_via_P`` inverts that relation (needs every ``x_j != 0``);
``eval_T_direct`` uses the composition sum

    T_r / r! = sum over k_1..k_m >= 1, sum k_j = r + m, of prod x_j**(k_j-1) / k_j!

which is defined everywhere. ``compute_T_poly`` recovers the coefficients of
T_r in the basis of power-sum monomials by exact interpolation.
"""

from fractions import Fraction
from functools import lru_cache
import math
import random

import numpy as np

from . import kernels
from .exact import DomainError, factorial
from .linalg import SingularMatrixError, solve
from .pcore import _as_point, _integer_scaling, chi, eval_P
from .symfunc import PowerSumPoly, eval_poly, partitions_of, power_sums

SAMPLE_LOW, SAMPLE_HIGH = 1, 10**4
HOLDOUT_POINTS = 5
MAX_RESAMPLES = 5


class InterpolationError(RuntimeError):
    """Sampling failed to produce a verified power-sum representation."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def eval_T_via_P(r, x):
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    xs = _as_point(x)
    c = chi(xs)
    if c == 0:
        raise ZeroDivisionError("eval_T_via_P needs every coordinate nonzero; use eval_T_direct")
    m = len(xs)
    n = r + m
    sign = 1 if m % 2 else -1
    return sign * Fraction(factorial(r), factorial(n)) * eval_P(n, xs) / c


@lru_cache(maxsize=128)
def _composition_table(r, m):
    """Compositions of r+m into m parts with their multinomial weights."""
    n = r + m
    K = kernels.compositions(n, m)
    fact = np.array([math.factorial(i) for i in range(n + 1)], dtype=object)
    denom = np.ones(K.shape[0], dtype=object)
    for j in range(m):
        denom = denom * fact[K[:, j]]
    return K, math.factorial(n) // denom


def eval_T_direct(r, x):
    """T_r from the composition sum, on integer-scaled coordinates.

    With ``x = y / L`` the inner products become ``prod y_j**(k_j-1) / L**r``
    and the weights ``(r+m)!/prod k_j!`` are integers, so the whole sum is
    carried out in Python integers.
    """
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    xs = _as_point(x)
    m = len(xs)
    ys, L = _integer_scaling(xs)
    K, weights = _composition_table(r, m)
    terms = weights.copy()
    for j, y in enumerate(ys):
        pw = np.array([y**e for e in range(r + 1)], dtype=object)
        terms = terms * pw[K[:, j] - 1]
    total = int(terms.sum()) if terms.shape[0] else 0
    return Fraction(total * factorial(r), factorial(r + m) * L**r)


def _monomial_row(basis, e):
    return [math.prod((e[k - 1] for k in mono), start=Fraction(1)) for mono in basis]


def interpolate_powersum(evaluate, w, seed=42, m=None):
    """Recover the weight-``w`` power-sum polynomial behind ``evaluate``.

    ``evaluate`` maps a point with ``m = max(w, 1)`` coordinates to a
    Fraction. The p(w) unknown coefficients are solved from p(w) seeded
    integer sample points, then checked on ``HOLDOUT_POINTS`` fresh points.
    """
    if w < 0:
        raise DomainError(f"weight must be >= 0, got {w}")
    m = max(w, 1) if m is None else m
    K = max(w, 1)
    basis = partitions_of(w)
    rng = random.Random(seed)

    def draw():
        return tuple(rng.randint(SAMPLE_LOW, SAMPLE_HIGH) for _ in range(m))

    for _ in range(MAX_RESAMPLES):
        pts = [draw() for _ in basis]
        A = [_monomial_row(basis, power_sums(p, K)) for p in pts]
        b = [Fraction(evaluate(p)) for p in pts]
        try:
            coeffs = solve(A, b)
            break
        except SingularMatrixError:
            continue
    else:
        raise InterpolationError(f"sample matrix singular after {MAX_RESAMPLES} draws (w={w})")

    poly = PowerSumPoly(dict(zip(basis, coeffs)))
    for _ in range(HOLDOUT_POINTS):
        p = draw()
        want = Fraction(evaluate(p))
        got = eval_poly(poly, power_sums(p, K))
        if want != got:
            raise InterpolationError(
                f"held-out point disagrees (w={w})",
                witness={"point": p, "expected": want, "actual": got},
            )
    return poly


@lru_cache(maxsize=None)
def compute_T_poly(r, seed=42):
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    return interpolate_powersum(lambda x: eval_T_direct(r, x), r, seed)


def T_values(x, r_max):
    """``[T_0(x), ..., T_{r_max}(x)]`` from the truncated series product.

    ``T_r / r!`` is the ``t**r`` coefficient of ``prod_j sum_k x_j**k t**k / (k+1)!``,
    the composition sum regrouped one coordinate at a time. Cost is
    ``O(m r_max**2)`` instead of a composition count.
    """
    xs = _as_point(x)
    inv_fact = [Fraction(1, factorial(k + 1)) for k in range(r_max + 1)]
    acc = [Fraction(1)] + [Fraction(0)] * r_max
    for v in xs:
        series = [inv_fact[k] * v**k for k in range(r_max + 1)]
        acc = [sum((acc[i] * series[j - i] for i in range(j + 1)), Fraction(0))
               for j in range(r_max + 1)]
    return [factorial(r) * acc[r] for r in range(r_max + 1)]
