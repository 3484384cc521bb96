"""Property suites over the conjectures, bounds, power-sum relations and lemmas.

Every suite is deterministic in ``(seed, parameters)``: randomness comes from
a ``random.Random`` seeded with a string built from the suite name, its
parameters and ``seed``.
"""

from fractions import Fraction
import random

from .exact import DomainError, factorial
from .identities import random_positive_point, verify_eq28_equivalence, verify_relation26
from .partfunc import check_parity, compute_f_poly
from .pcore import chi, eval_P, eval_P_recursive
from .report import VerificationReport
from .symfunc import flip_even_signs, power_sums
from .trec import T_values, compute_T_poly

__all__ = [
    "BOUNDS",
    "check_eq2",
    "check_eq12",
    "check_lemma1",
    "check_lemma2",
    "check_lemma3",
    "verify_bounds",
    "verify_conjecture1",
    "verify_conjecture2",
    "verify_eq28_equivalence",
    "verify_eq28_suite",
    "verify_lemmas",
    "verify_parity_suite",
    "verify_power_sum_relations",
]


def _rng(name, *params):
    return random.Random(":".join(str(p) for p in (name,) + params))


def random_rational(rng, lo=-20, hi=20, max_den=7, nonzero=False):
    while True:
        v = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if v or not nonzero:
            return v


def verify_conjecture1(max_r=7, seed=42):
    """``T_r == flip_even_signs(f_r)`` as exact power-sum polynomials."""
    if max_r < 2:
        raise DomainError(f"max_r must be >= 2, got {max_r}")
    rep = VerificationReport("conjecture1", {"max_r": max_r, "seed": seed})
    outcomes = {}
    for r in range(2, max_r + 1):
        t_poly = compute_T_poly(r, seed)
        flipped = flip_even_signs(compute_f_poly(r, seed))
        ok = rep.check(t_poly == flipped, {"r": r}, t_poly.to_json(), flipped.to_json())
        outcomes[str(r)] = "pass" if ok else "fail"
    rep.params["outcomes"] = outcomes
    return rep


def verify_conjecture2(m, seed=42, trials=50):
    """Relation (odd-ratio identity) for the T-family, every ``1 <= n <= m/2``."""
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    rep = VerificationReport("conjecture2", {"m": m, "seed": seed, "trials": trials})
    outcomes = {}
    for n in range(1, m // 2 + 1):
        sub = verify_relation26("T", n, m, seed, trials)
        outcomes[str(n)] = sub.status
        rep.absorb(sub)
    rep.params["outcomes"] = outcomes
    return rep


def _bounds(r, m):
    m = Fraction(m)
    table = {
        2: (1 + 1 / (3 * m), Fraction(4, 3)),
        3: (1 + 1 / m, Fraction(2)),
        4: (Fraction(13, 15) + 2 / m + 1 / (3 * m**2), Fraction(2, 3) * (5 - 1 / (5 * m))),
        5: (Fraction(1, 3) + Fraction(10, 3) / m + Fraction(5, 3) / m**2,
            2 * (3 - 1 / (3 * m))),
        6: (Fraction(8, 9) + 5 / m + 3 / m**2 + Fraction(16, 63) / m**7,
            Fraction(8, 3) * (Fraction(31, 7) - 1 / m)),
        7: (Fraction(2, 9) + 7 / m + 7 / m**2 + Fraction(16, 9) / m**7,
            Fraction(4, 3) * (19 - 7 / m)),
    }
    return table[r]


BOUNDS = _bounds


def verify_bounds(max_r, m, seed=42, trials=200):
    """``lower(m) <= T_r/T_1**r <= upper(m)`` at positive integer points in [1, 50]."""
    if not 2 <= max_r <= 7:
        raise DomainError(f"max_r must be in 2..7, got {max_r}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    rep = VerificationReport("bounds", {"max_r": max_r, "m": m, "seed": seed, "trials": trials})
    if m == 1:
        for r in range(2, max_r + 1):
            lo, hi = _bounds(r, 1)
            single = Fraction(2**r, r + 1)
            rep.check(lo == hi == single, {"r": r, "m": 1, "part": "coincide"},
                      single, f"[{lo}, {hi}]")
    rng = _rng("bounds", max_r, m, seed)
    for trial in range(trials):
        # first trial sits on the equal-coordinates edge
        x = (1,) * m if trial == 0 else tuple(rng.randint(1, 50) for _ in range(m))
        T = T_values(x, max_r)
        for r in range(2, max_r + 1):
            ratio = T[r] / T[1] ** r
            lo, hi = _bounds(r, m)
            rep.check(lo <= ratio <= hi, {"r": r, "x": x}, f"[{lo}, {hi}]", ratio)
    return rep


def _relations(m, E):
    """Triples (name, printed expression, true power sum) for the given m.

    Transcribed as printed. The m = 3 expression for E6 disagrees with
    Newton's identities by ``E2**3/12``; it is kept as printed so the
    suite reports the discrepancy instead of hiding it.
    """
    E1, E2, E3 = E[0], E[1], E[2]
    if m == 1:
        return [(f"E{k}", E1**k, E[k - 1]) for k in range(2, 7)]
    if m == 2:
        return [
            ("E3", Fraction(1, 2) * (3 * E2 - E1**2) * E1, E[2]),
            ("E4", E1**2 * E2 + Fraction(1, 2) * (E2**2 - E1**4), E[3]),
            ("E5", Fraction(1, 4) * (5 * E2**2 - E1**4) * E1, E[4]),
            ("E6", Fraction(1, 4) * (E2**2 + 6 * E1**2 * E2 - 3 * E1**4) * E2, E[5]),
        ]
    if m == 3:
        return [
            ("E4", Fraction(1, 6) * (E1**4 + 3 * E2**2 - 6 * E1**2 * E2 + 8 * E1 * E3), E[3]),
            ("E5", Fraction(1, 6) * (E1**5 - 5 * E1**3 * E2 + 5 * E1**2 * E3 + 5 * E2 * E3), E[4]),
            ("E6", Fraction(1, 12) * (E1**6 + 2 * E2**3 + 4 * E3**2 - 9 * E1**2 * E2**2
                                      + 12 * E1 * E2 * E3 - 3 * E1**4 * E2 + 4 * E1**3 * E3),
             E[5]),
        ]
    raise DomainError(f"supplementary relations are printed for m in 1..3, got {m}")


def verify_power_sum_relations(m, seed=42, trials=200):
    if m not in (1, 2, 3):
        raise DomainError(f"m must be 1, 2 or 3, got {m}")
    rep = VerificationReport("relations", {"m": m, "seed": seed, "trials": trials})
    rng = _rng("relations", m, seed)
    for _ in range(trials):
        x = tuple(random_rational(rng) for _ in range(m))
        E = power_sums(x, 6)
        for name, printed, actual in _relations(m, E):
            rep.check_equal({"m": m, "x": x, "relation": name}, actual, printed)
    return rep


def _random_mn(rng, max_n, max_m, min_m=1):
    m = rng.randint(min_m, max_m)
    n = rng.randint(1, max_n)
    return n, m


def check_lemma1(max_n, max_m, seed=42, trials=200):
    """Any zero coordinate forces P_n = 0."""
    rep = VerificationReport("lemma1", {"max_n": max_n, "max_m": max_m, "seed": seed})
    rng = _rng("lemma1", max_n, max_m, seed)
    for _ in range(trials):
        n, m = _random_mn(rng, max_n, max_m)
        x = [random_rational(rng) for _ in range(m)]
        x[rng.randrange(m)] = Fraction(0)
        rep.check_equal({"n": n, "x": x}, 0, eval_P(n, x))
    return rep


def check_lemma2(max_n, max_m, seed=42, trials=200):
    """Zero coordinate sum and odd ``n - m`` force P_n = 0."""
    rep = VerificationReport("lemma2", {"max_n": max_n, "max_m": max_m, "seed": seed})
    rng = _rng("lemma2", max_n, max_m, seed)
    for _ in range(trials):
        m = rng.randint(2, max(2, max_m))
        choices = [n for n in range(1, max_n + 1) if (n - m) % 2]
        if not choices:
            continue
        n = rng.choice(choices)
        x = [random_rational(rng, nonzero=True) for _ in range(m - 1)]
        x.append(-sum(x))
        rep.check_equal({"n": n, "x": x}, 0, eval_P(n, x))
    return rep


def check_lemma3(max_n, max_m, seed=42, trials=200):
    """Positive points: sign of P_n is (-1)**(m+1) for n >= m."""
    rep = VerificationReport("lemma3", {"max_n": max_n, "max_m": max_m, "seed": seed})
    rng = _rng("lemma3", max_n, max_m, seed)
    for _ in range(trials):
        m = rng.randint(1, max_m)
        n = rng.randint(m, max(m, max_n))
        x = random_positive_point(rng, m, hi=20)
        value = eval_P(n, x)
        want = 1 if m % 2 else -1
        got = (value > 0) - (value < 0)
        rep.check_equal({"n": n, "x": x}, want, got)
    return rep


def check_eq2(max_m, seed=42, trials=200):
    """P_n = 0 for n < m and P_m = (-1)**(m+1) m! chi_m."""
    rep = VerificationReport("eq2", {"max_m": max_m, "seed": seed})
    rng = _rng("eq2", max_m, seed)
    for _ in range(trials):
        m = rng.randint(1, max_m)
        x = [random_rational(rng) for _ in range(m)]
        for n in range(1, m):
            rep.check_equal({"n": n, "x": x}, 0, eval_P(n, x))
        rep.check_equal({"n": m, "x": x}, (-1) ** (m + 1) * factorial(m) * chi(x), eval_P(m, x))
    return rep


def check_eq12(max_n, max_m, seed=42, trials=200):
    """Last-coordinate recursion agrees with subset enumeration, any sign."""
    rep = VerificationReport("eq12", {"max_n": max_n, "max_m": max_m, "seed": seed})
    rng = _rng("eq12", max_n, max_m, seed)
    for _ in range(trials):
        n, m = _random_mn(rng, max_n, max_m)
        x = [random_rational(rng) for _ in range(m)]
        rep.check_equal({"n": n, "x": x}, eval_P(n, x), eval_P_recursive(n, x))
    return rep


def verify_lemmas(max_n=10, max_m=6, seed=42, trials=200):
    if max_n < max_m or max_m < 1:
        raise DomainError("need max_n >= max_m >= 1")
    rep = VerificationReport("lemmas", {"max_n": max_n, "max_m": max_m, "seed": seed,
                                        "trials": trials})
    parts = {}
    for sub in (
        check_lemma1(max_n, max_m, seed, trials),
        check_lemma2(max_n, max_m, seed, trials),
        check_lemma3(max_n, max_m, seed, trials),
        check_eq2(max_m, seed, trials),
        check_eq12(max_n, max_m, seed, trials),
    ):
        parts[sub.claim] = {"total": sub.total, "status": sub.status}
        rep.absorb(sub)
    rep.params["parts"] = parts
    return rep


def random_generators(rng, m, hi=12):
    return tuple(rng.randint(1, hi) for _ in range(m))


def verify_parity_suite(tuples=20, max_m=5, s_count=20, seed=42):
    """check_parity over seeded random generator tuples and half-integer s."""
    rep = VerificationReport("parity", {"tuples": tuples, "max_m": max_m, "s_count": s_count,
                                        "seed": seed})
    rng = _rng("parity", tuples, max_m, s_count, seed)
    for _ in range(tuples):
        d = random_generators(rng, rng.randint(1, max_m))
        s_values = [Fraction(rng.randint(-60, 60), rng.choice((1, 2))) for _ in range(s_count)]
        rep.absorb(check_parity(d, s_values))
    return rep


def verify_eq28_suite(max_n=8):
    rep = VerificationReport("eq28", {"max_n": max_n})
    for n in range(1, max_n + 1):
        rep.absorb(verify_eq28_equivalence(n))
    return rep

