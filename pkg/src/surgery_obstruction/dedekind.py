"""Dedekind sums s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)).

Argument order everywhere is ``(q, p)``: the second argument is the modulus.
Two independent evaluation paths exist; ``dedekind_sum_direct`` is the slow
oracle for the reciprocity-driven ``dedekind_sum_fast``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import HypothesisViolated, NotCoprime, NonIntegral
from .numerics import Rational, as_rational, make_rational

DedekindFn = Callable[[int, int], Rational]


@dataclass(frozen=True, slots=True)
class DedekindPair:
    q: int
    p: int

    def __post_init__(self):
        _check_pair(self.q, self.p)


def _check_pair(q: int, p: int) -> None:
    if p < 1:
        raise NotCoprime(f"modulus must be positive, got p={p}")
    if math.gcd(q, p) != 1:
        raise NotCoprime(f"gcd({q}, {p}) = {math.gcd(q, p)}")


def sawtooth(x) -> Rational:
    x = as_rational(x)
    if x.denominator == 1:
        return make_rational(0)
    return x - math.floor(x) - make_rational(1, 2)


def dedekind_sum_direct(q: int, p: int) -> Rational:
    """Literal summation over k = 1..p-1, Theta(p) steps.

    Uses ((k/p)) = (2k - p)/(2p) for 0 < k < p, so the sum is one integer
    accumulation over the common denominator 4p^2.
    """
    _check_pair(q, p)
    total = 0
    for k in range(1, p):
        r = k * q % p
        if r:
            total += (2 * k - p) * (2 * r - p)
    return make_rational(total, 4 * p * p)


def dedekind_row_direct(p: int) -> dict[int, Rational]:
    """``{q: s(q, p)}`` for every q in [1, p) coprime to p, by direct summation.

    Vectorized form of :func:`dedekind_sum_direct` used by the large sweeps.
    """
    if p < 1:
        raise NotCoprime(f"modulus must be positive, got p={p}")
    if p == 1:
        return {}
    qs = np.array([q for q in range(1, p) if math.gcd(q, p) == 1], dtype=np.int64)
    k = np.arange(1, p, dtype=np.int64)
    r = np.outer(k, qs) % p
    # r is never 0 for coprime q, so no sawtooth zero case is needed
    nums = ((2 * k - p)[:, None] * (2 * r - p)).sum(axis=0)
    den = 4 * p * p
    return {int(q): make_rational(int(n), den) for q, n in zip(qs, nums)}


def _reciprocity_rhs(p: int, q: int) -> Rational:
    # -1/4 + (p/q + q/p + 1/(pq))/12 over the common denominator 12pq
    return make_rational(p * p + q * q + 1 - 3 * p * q, 12 * p * q)


@lru_cache(maxsize=1 << 16)
def dedekind_sum_fast(q: int, p: int) -> Rational:
    """Euclidean descent: s(q,p) = R(p,q) - s(p mod q, q), O(log p) steps."""
    _check_pair(q, p)
    sign = 1
    if q % p == 0:
        return make_rational(0)
    q %= p
    total = make_rational(0)
    while p > 1:
        total += sign * _reciprocity_rhs(p, q)
        sign = -sign
        p, q = q, p % q
    return total


def dedekind_sum(q: int, p: int) -> Rational:
    return dedekind_sum_fast(q, p)


def reciprocity_residual(p: int, q: int, s: DedekindFn = dedekind_sum_direct) -> Rational:
    """s(p,q) + s(q,p) minus the closed-form right side; always 0."""
    if p < 1 or q < 1:
        raise NotCoprime(f"reciprocity needs p, q >= 1, got ({p}, {q})")
    _check_pair(q, p)
    return s(p, q) + s(q, p) - _reciprocity_rhs(p, q)


def rearranged_dedekind_sides(m: int, p: int, q: int,
                              s: DedekindFn = dedekind_sum_direct) -> tuple[Rational, Rational]:
    """Both sides of 12s(m,1) - m + 12s(p,q) - p/q = -m - 12s(q,p) + q/p + 1/(pq) - 3."""
    if p < 1 or q < 1:
        raise NotCoprime(f"need p, q >= 1, got ({p}, {q})")
    _check_pair(q, p)
    lhs = 12 * s(m, 1) - m + 12 * s(p, q) - make_rational(p, q)
    rhs = -m - 12 * s(q, p) + make_rational(q, p) + make_rational(1, p * q) - 3
    return lhs, rhs


def rearranged_dedekind_term(m: int, p: int, q: int,
                             s: DedekindFn = dedekind_sum_direct) -> Rational:
    lhs, rhs = rearranged_dedekind_sides(m, p, q, s)
    if lhs != rhs:
        raise ArithmeticError(f"rearrangement fails at m={m}, p={p}, q={q}: {lhs} != {rhs}")
    return lhs


def six_p_s(q: int, p: int, s: DedekindFn = dedekind_sum_fast) -> int:
    v = 6 * p * s(q, p)
    if v.denominator != 1:
        raise NonIntegral(f"6*{p}*s({q},{p}) = {v} is not an integer")
    return v.numerator


def check_nine_p0(p: int) -> int:
    """Return p0 for p = 9*p0 with 3 not dividing p0, else raise."""
    if p < 1 or p % 9 or (p // 9) % 3 == 0:
        raise HypothesisViolated(f"p={p} is not 9*p0 with p0 prime to 3")
    return p // 9


def six_ps_mod3_fact(p: int, q: int, s: DedekindFn = dedekind_sum_fast) -> bool:
    """Whether 6p*s(q,p) = q (mod 3), on the domain p = 9p0, 3 ∤ p0, 3 ∤ q."""
    check_nine_p0(p)
    if q % 3 == 0:
        raise HypothesisViolated(f"q={q} is divisible by 3")
    _check_pair(q, p)
    return (six_p_s(q, p, s) - q) % 3 == 0
