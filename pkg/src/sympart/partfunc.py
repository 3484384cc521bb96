"""Restricted partition function W(s, d) and its polynomial part W_1.

``W_1(s, d) = 1/((m-1)! pi_m) * sum_{r<m} C(m-1, r) f_r(d) s**(m-1-r)`` where
``f_r(d) = (sigma_1 + sum_i B d_i)**r`` is expanded umbrally: after the
multinomial expansion each ``(B d_i)**j`` becomes ``B_j d_i**j``, with a
separate umbra for every generator.
"""

from fractions import Fraction
from functools import lru_cache
import math

import numpy as np

from . import kernels
from .exact import DomainError, bernoulli, binomial, factorial
from .report import VerificationReport
from .trec import interpolate_powersum


def _as_tuple(d):
    ds = tuple(Fraction(v) for v in d)
    if not ds:
        raise DomainError("generator tuple must be nonempty")
    return ds


def _generators(d):
    """Validate a tuple of positive integer generators."""
    out = []
    for v in d:
        q = Fraction(v)
        if q.denominator != 1 or q <= 0:
            raise DomainError(f"generators must be positive integers, got {v}")
        out.append(int(q))
    if not out:
        raise DomainError("generator tuple must be nonempty")
    return tuple(out)


def f_values(d, r_max):
    """``[f_0(d), ..., f_{r_max}(d)]`` in one pass.

    The multinomial sum over ``(j_0, j_1, ..., j_m)`` factorises one
    generator at a time: keep ``g[j] = sum sigma_1**j_0/j_0! * prod B_{j_i}
    d_i**j_i / j_i!`` over the generators seen so far, then ``f_r = r! g[r]``.
    """
    ds = _as_tuple(d)
    sigma1 = sum(ds)
    g = [sigma1**j / factorial(j) for j in range(r_max + 1)]
    bern = [bernoulli(t) / factorial(t) for t in range(r_max + 1)]
    for di in ds:
        umbra = [bern[t] * di**t for t in range(r_max + 1)]
        g = [
            sum((g[j - t] * umbra[t] for t in range(j + 1) if umbra[t]), Fraction(0))
            for j in range(r_max + 1)
        ]
    return [factorial(r) * g[r] for r in range(r_max + 1)]


def eval_f(r, d):
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    return f_values(d, r)[r]


@lru_cache(maxsize=None)
def compute_f_poly(r, seed=42):
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    return interpolate_powersum(lambda d: eval_f(r, d), r, seed)


def eval_W1(s, d):
    ds = _generators(d)
    s = Fraction(s)
    m = len(ds)
    f = f_values(ds, m - 1)
    total = sum((binomial(m - 1, r) * f[r] * s ** (m - 1 - r) for r in range(m)), Fraction(0))
    return total / (factorial(m - 1) * math.prod(ds))


def w1_coefficients(d):
    """Coefficients ``[a_0, ..., a_{m-1}]`` of ``W_1(s, d) = sum a_k s**k``."""
    ds = _generators(d)
    m = len(ds)
    f = f_values(ds, m - 1)
    scale = Fraction(1, factorial(m - 1) * math.prod(ds))
    return [scale * binomial(m - 1, m - 1 - k) * f[m - 1 - k] for k in range(m)]


def denumerant_counts(d, s_max):
    """``[W(0, d), ..., W(s_max, d)]`` as Python ints."""
    ds = _generators(d)
    if s_max < 0:
        return []
    m = len(ds)
    # W(s) <= #{t : sum t_i <= s} = C(s+m, m)
    if math.comb(s_max + m, m) < kernels.INT64_SAFE:
        table = kernels.denumerant_table(np.asarray(ds, dtype=np.int64), s_max)
        return [int(v) for v in table]
    out = [1] + [0] * s_max
    for di in ds:
        for s in range(di, s_max + 1):
            out[s] += out[s - di]
    return out


def count_partitions_brute(s, d):
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    return denumerant_counts(d, s)[s]


def check_parity(d, s_values):
    """``W_1(s - sigma_1/2) == (-1)**(m+1) W_1(-s - sigma_1/2)`` for each s."""
    ds = _generators(d)
    m = len(ds)
    half = Fraction(sum(ds), 2)
    sign = 1 if m % 2 else -1
    rep = VerificationReport("parity", {"d": list(ds), "s_count": len(s_values)})
    for s in s_values:
        s = Fraction(s)
        lhs = eval_W1(s - half, ds)
        rhs = sign * eval_W1(-s - half, ds)
        rep.check_equal({"d": list(ds), "s": s}, rhs, lhs)
    return rep


def check_w1_recursion(d, s_values):
    """``W_1(s, d) - W_1(s - d_m, d) == W_1(s, d without d_m)``, ``m >= 2``."""
    ds = _generators(d)
    if len(ds) < 2:
        raise DomainError("recursion needs at least two generators")
    rep = VerificationReport("w1_recursion", {"d": list(ds)})
    for s in s_values:
        s = Fraction(s)
        lhs = eval_W1(s, ds) - eval_W1(s - ds[-1], ds)
        rhs = eval_W1(s, ds[:-1])
        rep.check_equal({"d": list(ds), "s": s}, rhs, lhs)
    return rep


def proximity_report(d, windows=3):
    """Track ``max |W - W_1|`` over consecutive windows of length lcm(d).

    Passes when the last window's maximum does not exceed the first's (no
    drift). The per-window maxima and the overall bound are recorded in
    ``params``.
    """
    ds = _generators(d)
    period = math.lcm(*ds)
    s_max = windows * period
    counts = denumerant_counts(ds, s_max)
    coeffs = w1_coefficients(ds)
    maxima = []
    for w in range(windows):
        lo, hi = w * period, (w + 1) * period if w < windows - 1 else s_max + 1
        worst = Fraction(0)
        for s in range(lo, hi):
            w1 = sum((c * s**k for k, c in enumerate(coeffs)), Fraction(0))
            worst = max(worst, abs(counts[s] - w1))
        maxima.append(worst)
    rep = VerificationReport(
        "proximity",
        {"d": list(ds), "lcm": period, "window_max": maxima, "bound": max(maxima)},
    )
    rep.check(maxima[-1] <= maxima[0], {"d": list(ds)}, f"<= {maxima[0]}", maxima[-1])
    return rep
