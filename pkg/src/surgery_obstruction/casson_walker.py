"""Casson-Walker invariant of knot surgeries and the two-component link
rational surgery identity.

Two normalizations are in play and every lambda-valued function takes one
explicitly. The link identity itself is written for ``PAPER_P2`` values:
it contains lambda/2, which is a Walker-normalized quantity.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .dedekind import DedekindFn, dedekind_sum_fast
from .errors import DegenerateMatrix, NonHalfInteger, NotCoprime
from .numerics import Rational, as_rational, make_rational


class Normalization(enum.Enum):
    WALKER_P1 = "walker_p1"  # lambda(Poincare sphere) = 1
    PAPER_P2 = "paper_p2"    # lambda(Poincare sphere) = 2

    @property
    def scale(self) -> int:
        return 1 if self is Normalization.WALKER_P1 else 2

    @classmethod
    def parse(cls, text: str) -> Normalization:
        aliases = {"walker": cls.WALKER_P1, "paper": cls.PAPER_P2}
        key = text.strip().lower()
        if key in aliases:
            return aliases[key]
        return cls(key)


def _check_surgery_coefficient(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise NotCoprime(f"surgery coefficient needs p, q > 0, got {p}/{q}")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {math.gcd(p, q)}")


@dataclass(frozen=True, slots=True)
class SurgeryOnKnot:
    """p/q surgery on a knot with second Conway coefficient ``a2``."""

    a2: int
    p: int
    q: int

    def __post_init__(self):
        _check_surgery_coefficient(self.p, self.q)


@dataclass(frozen=True, slots=True)
class FramedLink2:
    """K_x with integral framing m, K_y with framing p/q, linking number ell."""

    m: int
    ell: int
    p: int
    q: int
    a2x: int
    a2y: int
    four_v3: int

    def __post_init__(self):
        _check_surgery_coefficient(self.p, self.q)
        if not isinstance(self.four_v3, int):
            raise NonHalfInteger(f"4*v3 must be an integer, got {self.four_v3!r}")


def lambda_knot_surgery(s: SurgeryOnKnot, n: Normalization,
                        dedekind: DedekindFn = dedekind_sum_fast) -> Rational:
    walker = make_rational(s.q, s.p) * s.a2 - dedekind(s.q, s.p) / 2
    return n.scale * walker


def lambda_orientation_reverse(v) -> Rational:
    return -as_rational(v)


def linking_matrix_signature(m: int, ell: int, p: int, q: int) -> int:
    """Signature of [[m, ell], [ell, p/q]] from the signs of det and trace."""
    _check_surgery_coefficient(p, q)
    det_times_q = m * p - q * ell * ell
    if det_times_q == 0:
        raise DegenerateMatrix(f"det [[{m}, {ell}], [{ell}, {p}/{q}]] = 0")
    if det_times_q < 0:
        return 0
    # definite: the sign of the trace decides which way
    return 2 if m * q + p > 0 else -2


def two_v3_from_a3(a3, a2x: int, a2y: int, ell: int) -> Rational:
    val = -as_rational(a3) + (a2x + a2y) * ell + make_rational(ell ** 3 - ell, 12)
    if (2 * val).denominator != 1:
        raise NonHalfInteger(f"2v3 = {val} is not a half-integer")
    return val


def link_identity_sides(m: int, ell: int, p: int, q: int, a2x: int, a2y: int,
                        lambda_SL, dedekind: DedekindFn = dedekind_sum_fast
                        ) -> tuple[Rational, Rational]:
    """Return (left side, right side without the 2v3 term) of the link identity.

    The identity holds iff ``left - right == 2 v3(L)``.
    """
    _check_surgery_coefficient(p, q)
    lam = as_rational(lambda_SL)
    sigma = linking_matrix_signature(m, ell, p, q)
    k = make_rational(m * p - q * ell * ell, q)
    lhs = k * (lam / 2 - make_rational(sigma, 8))

    pq = make_rational(p, q)
    ell2 = ell * ell
    # s(m, 1) is an empty sum, hence 0 for every integer m
    dedekind_tail = -m + 12 * dedekind(p, q) - pq
    rhs = (pq * a2x
           - make_rational(p, 12 * q)
           + make_rational(p * ell2, 24 * q)
           + m * a2y
           - make_rational(m, 24)
           - make_rational(m, 24 * q * q)
           + make_rational(m * ell2, 24)
           + k / 24 * dedekind_tail)
    return lhs, rhs


def link_identity_residual(L: FramedLink2, lambda_SL, four_v3=None,
                           dedekind: DedekindFn = dedekind_sum_fast) -> Rational:
    """LHS - RHS of the link identity; ``four_v3`` overrides ``L.four_v3``
    (and may be non-integral, for plugging back a solved value)."""
    v = as_rational(L.four_v3 if four_v3 is None else four_v3)
    lhs, rhs = link_identity_sides(L.m, L.ell, L.p, L.q, L.a2x, L.a2y, lambda_SL, dedekind)
    return lhs - (rhs + v / 2)


def lambda_of_link_surgery(p: int, q: int, a2y: int, n: Normalization,
                           dedekind: DedekindFn = dedekind_sum_fast) -> Rational:
    """lambda(S^3_L) taken as -lambda(M), M = p/q surgery on K_y."""
    return lambda_orientation_reverse(
        lambda_knot_surgery(SurgeryOnKnot(a2y, p, q), n, dedekind))


def solve_four_v3(m: int, ell: int, p: int, q: int, a2x: int, a2y: int,
                  n: Normalization, knot_a2y_for_lambda: int | None = None,
                  dedekind: DedekindFn = dedekind_sum_fast) -> Rational:
    """The unique 4v3 making the link identity hold when lambda(S^3_L) = -lambda(M).

    The result need not be an integer; non-integrality means no link with
    these data can exist.
    """
    a2_lam = a2y if knot_a2y_for_lambda is None else knot_a2y_for_lambda
    lam = lambda_of_link_surgery(p, q, a2_lam, n, dedekind)
    lhs, rhs = link_identity_sides(m, ell, p, q, a2x, a2y, lam, dedekind)
    return 2 * (lhs - rhs)
