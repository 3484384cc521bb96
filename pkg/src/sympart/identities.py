"""Coefficient machinery for the odd-ratio relation and its collapsed form.

Write ``a_j = g_j / g_1**j`` for a sequence ``g`` (the f-family or the
T-family). The universal relation reads

    a_{2n-1} = sum_{k=1}^{2n-1} (-1)**(k+1) C(2n-1, k) a_{2n-1-k}.

Repeatedly substituting it into its own odd-index terms leaves only even
ratios:

    a_{2n-1} = sum_{r=1}^{n} (-1)**(r+1) C_{n,r} a_{2(n-r)}.

Each contribution to ``C_{n,r}`` is a product of binomials read off one
chain of substitutions: even steps ``C(N, 2k)`` followed by a final odd
step ``C(N', 2k'-1)``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import logging
import random

from .exact import DomainError, binomial
from .partfunc import f_values
from .report import VerificationReport
from .trec import eval_T_direct

log = logging.getLogger(__name__)

# integer coefficients printed for n = 2, 3, 4, on (a_{2n-2}, ..., a_0)
PRINTED_EQ16 = {2: (3, -2), 3: (5, -20, 16), 4: (7, -70, 336, -272)}


@lru_cache(maxsize=None)
def _expand_odd(N):
    """Signed binomial chains expressing ``a_N`` (N odd) through even ratios.

    Returns a tuple of ``(sign, factors, target)`` with ``factors`` a tuple of
    ``(upper, lower)`` binomial arguments and ``target`` the even index of the
    ratio the chain lands on.
    """
    out = []
    for k in range(1, N + 1):
        c = binomial(N, k)
        if not c:
            continue
        if k % 2:
            out.append((1, ((N, k),), N - k))
        else:
            for sign, factors, target in _expand_odd(N - k):
                out.append((-sign, ((N, k),) + factors, target))
    return tuple(out)


def cnr_terms(n, r):
    """The binomial-product chains contributing to ``C_{n,r}``."""
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n, got n={n}, r={r}")
    target = 2 * (n - r)
    return [(s, f) for s, f, t in _expand_odd(2 * n - 1) if t == target]


def _chain_value(factors):
    v = 1
    for a, b in factors:
        v *= binomial(a, b)
    return v


def cnr_recursive(n, r):
    """C_{n,r} from the recursive elimination of odd ratios."""
    signed = sum(s * _chain_value(f) for s, f in cnr_terms(n, r))
    return signed if r % 2 else -signed


def cnr_term_count(n, r):
    return sum(1 for _, f in cnr_terms(n, r) if _chain_value(f))


def cnr_closed(n, r):
    """The four explicitly printed rows, for r = 1..4."""
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n, got n={n}, r={r}")
    C = binomial
    N = 2 * n - 1
    if r == 1:
        return C(N, 1)
    if r == 2:
        return C(N, 2) * C(N - 2, 1) - C(N, 3)
    if r == 3:
        return (C(N, 2) * C(N - 2, 2) * C(N - 4, 1) - C(N, 2) * C(N - 2, 3)
                - C(N, 4) * C(N - 4, 1) + C(N, 5))
    if r == 4:
        return (C(N, 2) * C(N - 2, 2) * C(N - 4, 2) * C(N - 6, 1)
                - C(N, 2) * C(N - 2, 4) * C(N - 6, 1)
                - C(N, 4) * C(N - 4, 2) * C(N - 6, 1)
                - C(N, 2) * C(N - 2, 2) * C(N - 4, 3)
                + C(N, 2) * C(N - 2, 5)
                + C(N, 4) * C(N - 4, 3)
                + C(N, 6) * C(N - 6, 1)
                - C(N, 7))
    raise DomainError(f"closed form printed only for r <= 4, got r={r}")


@dataclass
class CnrTable:
    entries: dict = field(default_factory=dict)
    term_counts: dict = field(default_factory=dict)

    @classmethod
    def build(cls, n_max):
        table = cls()
        for n in range(1, n_max + 1):
            for r in range(1, n + 1):
                table.entries[(n, r)] = cnr_recursive(n, r)
                table.term_counts.setdefault(r, cnr_term_count(n, r))
        return table

    def rows(self):
        return [
            {"n": n, "r": r, "value": str(v), "terms": self.term_counts[r]}
            for (n, r), v in sorted(self.entries.items())
        ]


def eliminate_odd_ratios(n):
    """Coefficients of ``a_{2n-1}`` on ``a_{2n-2}, a_{2n-4}, ..., a_0``.

    Forward substitution: build the even-ratio expansion of ``a_1, a_3, ...``
    in turn, each from the already reduced lower ones. Independent of the
    chain enumeration behind ``cnr_recursive``.
    """
    reduced = {}
    for N in range(1, 2 * n, 2):
        vec = {}
        for k in range(1, N + 1):
            c = binomial(N, k)
            if k % 2:
                vec[N - k] = vec.get(N - k, 0) + c
            else:
                for idx, v in reduced[N - k].items():
                    vec[idx] = vec.get(idx, 0) - c * v
        reduced[N] = vec
    top = reduced[2 * n - 1]
    return tuple(top.get(2 * (n - r), 0) for r in range(1, n + 1))


def verify_eq28_equivalence(n):
    """Collapsed form with ``cnr_recursive`` against direct elimination."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    rep = VerificationReport("eq28", {"n": n})
    direct = eliminate_odd_ratios(n)
    collapsed = tuple((-1) ** (r + 1) * cnr_recursive(n, r) for r in range(1, n + 1))
    rep.check_equal({"n": n, "part": "coefficients"}, list(direct), list(collapsed))
    for r in range(1, n + 1):
        rep.check_equal({"n": n, "r": r, "part": "term_count"}, 2 ** (r - 1), cnr_term_count(n, r))
        rep.check({"n": n, "r": r, "part": "positive"}, cnr_recursive(n, r) > 0, "> 0",
                  cnr_recursive(n, r))
    if n in PRINTED_EQ16:
        rep.check_equal({"n": n, "part": "printed"}, list(PRINTED_EQ16[n]), list(collapsed))
    rep.params["coefficients"] = list(collapsed)
    return rep


def random_positive_point(rng, m, hi=50, max_den=6):
    return tuple(Fraction(rng.randint(1, hi), rng.randint(1, max_den)) for _ in range(m))


@lru_cache(maxsize=4096)
def _T_values_direct(x, r_max):
    return tuple(eval_T_direct(r, x) for r in range(r_max + 1))


def family_values(family, x, r_max):
    """``[g_0, ..., g_{r_max}]`` at ``x`` for ``family`` in {"T", "f"}."""
    if family == "T":
        return list(_T_values_direct(tuple(x), r_max))
    if family == "f":
        return f_values(x, r_max)
    raise DomainError(f"unknown family {family!r} (expected 'T' or 'f')")


def relation26_holds(g, n):
    """Check the universal relation for ``g_0..g_{2n-1}``; returns (lhs, rhs)."""
    N = 2 * n - 1
    g1 = g[1]
    ratio = [g[j] / g1**j for j in range(N + 1)]
    rhs = sum(((-1) ** (k + 1) * binomial(N, k) * ratio[N - k] for k in range(1, N + 1)),
              Fraction(0))
    return ratio[N], rhs


def verify_relation26(family, n, m, seed=42, trials=50):
    if n < 1 or m < 1 or trials < 1:
        raise DomainError("need n >= 1, m >= 1, trials >= 1")
    params = {"family": family, "n": n, "m": m, "seed": seed, "trials": trials}
    if 2 * n > m:
        params["outside_stated_range"] = True
        log.warning("relation26: n=%d exceeds m/2 for m=%d", n, m)
    rep = VerificationReport(f"relation26.{family}", params)
    rng = random.Random(f"relation26:{family}:{n}:{m}:{seed}")
    for _ in range(trials):
        x = random_positive_point(rng, m)
        g = family_values(family, x, 2 * n - 1)
        lhs, rhs = relation26_holds(g, n)
        rep.check_equal({"family": family, "n": n, "x": x}, rhs, lhs)
    return rep
