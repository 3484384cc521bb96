"""Polynomials in the power sums ``E_k = sum_j x_j**k``.

A monomial ``E_1**a_1 * E_2**a_2 * ...`` is stored as the integer partition
with ``a_k`` parts equal to ``k``, as a nondecreasing tuple: ``E1^2*E2`` is
``(1, 1, 2)`` and the constant monomial is ``()``. The same type carries the
sigma-family polynomials; only the printed variable prefix differs.
"""

from collections import Counter
from fractions import Fraction
import json
import math

from .exact import DomainError, format_rational


def weight(monomial):
    return sum(monomial)


def partitions_of(w):
    """All partitions of ``w`` as nondecreasing tuples, in canonical order.

    Canonical order sorts monomials by ``monomial_key``: fewer high-index
    parts first, so for weight 4 the order is
    ``E1^4, E1^2*E2, E2^2, E1*E3, E4``.
    """
    if w < 0:
        raise DomainError(f"weight must be >= 0, got {w}")
    out = []

    def grow(remaining, min_part, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min_part, remaining + 1):
            prefix.append(part)
            grow(remaining - part, part, prefix)
            prefix.pop()

    grow(w, 1, [])
    return sorted(out, key=monomial_key)


def partition_count(w):
    """p(w) from Euler's pentagonal-number recurrence."""
    p = [1] + [0] * w
    for n in range(1, w + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p[w]


def monomial_key(monomial):
    """Sort key: largest index first compared ascending, then multiplicities.

    Reading the exponent vector from the highest index down puts ``E1^4``
    before ``E1^2*E2`` before ``E2^2`` before ``E4``.
    """
    counts = Counter(monomial)
    top = max(counts, default=0)
    return (top, tuple(counts.get(k, 0) for k in range(top, 0, -1)))


def format_monomial(monomial, var="E"):
    if not monomial:
        return "1"
    counts = Counter(monomial)
    parts = []
    for k in sorted(counts):
        a = counts[k]
        parts.append(f"{var}{k}" if a == 1 else f"{var}{k}^{a}")
    return "*".join(parts)


def parse_monomial(text):
    """Inverse of ``format_monomial``; accepts any single-letter-ish prefix."""
    text = text.strip()
    if text == "1":
        return ()
    parts = []
    for factor in text.split("*"):
        name, _, exp = factor.partition("^")
        digits = name.lstrip("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
        if not digits.isdigit() or (exp and not exp.isdigit()):
            raise DomainError(f"malformed monomial factor: {factor!r}")
        parts.extend([int(digits)] * (int(exp) if exp else 1))
    return tuple(sorted(parts))


class PowerSumPoly:
    """Immutable map monomial -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(sorted(mono))
            if any(k < 1 for k in mono):
                raise DomainError(f"power-sum index must be >= 1: {mono}")
            c = clean.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = dict(sorted(clean.items(), key=lambda kv: monomial_key(kv[0])))
        self._hash = None

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, monomial):
        return self._terms.get(tuple(sorted(monomial)), Fraction(0))

    def max_index(self):
        return max((max(m) for m in self._terms if m), default=0)

    def weights(self):
        return {weight(m) for m in self._terms}

    def is_homogeneous(self, w=None):
        ws = self.weights()
        if w is None:
            return len(ws) <= 1
        return ws <= {w}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        merged = dict(self._terms)
        for mono, c in other.items():
            merged[mono] = merged.get(mono, 0) + c
        return PowerSumPoly(merged)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return PowerSumPoly({m: c * v for m, v in self._terms.items()})

    def __call__(self, e):
        return eval_poly(self, e)

    def __repr__(self):
        return f"PowerSumPoly({self.to_dict()})"

    def to_dict(self, var="E"):
        return {format_monomial(m, var): format_rational(c) for m, c in self._terms.items()}

    def to_json(self, var="E"):
        return json.dumps(self.to_dict(var))

    @classmethod
    def from_dict(cls, data):
        return cls({parse_monomial(k): Fraction(v) for k, v in data.items()})

    def common_form(self, var="E"):
        """``(num1*mono1 + ...)/den`` with integer numerators, for display."""
        if not self._terms:
            return "0"
        den = math.lcm(*(c.denominator for c in self._terms.values()))
        pieces = []
        for mono, c in self._terms.items():
            num = c.numerator * (den // c.denominator)
            body = format_monomial(mono, var)
            mag = abs(num)
            if body == "1":
                text = str(mag)
            else:
                text = body if mag == 1 else f"{mag}*{body}"
            sign = "-" if num < 0 else "+"
            pieces.append((sign, text))
        head_sign, head = pieces[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out if den == 1 else f"({out})/{den}"


def add(p, q):
    return p + q


def scale(p, c):
    return p.scale(c)


def equal(p, q):
    return p == q


def power_sums(x, K):
    """``[E_1, ..., E_K]`` at the point ``x`` (all zeros for an empty point)."""
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    xs = [Fraction(v) for v in x]
    out = []
    pw = [Fraction(1)] * len(xs)
    for _ in range(K):
        pw = [a * b for a, b in zip(pw, xs)]
        out.append(sum(pw, Fraction(0)))
    return out


def eval_poly(p, e):
    """Evaluate ``p`` at power-sum values ``e = [E_1, ..., E_K]``."""
    need = p.max_index()
    if need > len(e):
        raise DomainError(f"polynomial uses E{need} but only {len(e)} power sums given")
    total = Fraction(0)
    for mono, c in p.items():
        term = c
        for k in mono:
            term *= e[k - 1]
        total += term
    return total


def flip_even_signs(p):
    """Substitute ``E_k -> -E_k`` for every ``k >= 2``; ``E_1`` is untouched."""
    out = {}
    for mono, c in p.items():
        flips = sum(1 for k in mono if k >= 2)
        out[mono] = -c if flips % 2 else c
    return PowerSumPoly(out)
