"""Chirally cosmetic banding verdicts for knots, before and after the
retraction of the distance-one surgery obstruction.

Knot invariants are data: only T(2, k) has built-in values.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .errors import InvalidTorusParameter, MissingCoverData, NotCoprime
from .numerics import Rational, as_rational, format_rational, make_rational

DEFAULT_D_SCALE = make_rational(1, 4)
PRINTED_D_SCALE = make_rational(4)
SIGNATURE_CONVENTION = "right-handed T(2,k) has signature -(k-1)"


class PreErratum(str, enum.Enum):
    NO_BANDING = "NO_BANDING"
    INCONCLUSIVE = "INCONCLUSIVE"


class PostErratum(str, enum.Enum):
    INCONCLUSIVE_ERRATUM = "INCONCLUSIVE_ERRATUM"
    INCONCLUSIVE_HYPOTHESES = "INCONCLUSIVE_HYPOTHESES"


@dataclass(frozen=True, slots=True)
class CoverSurgery:
    """Sigma_2(K) presented as p/q surgery on a knot with a2 = a2_of_core_knot."""

    p: int
    q: int
    a2_of_core_knot: int = 0

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or math.gcd(self.p, self.q) != 1:
            raise NotCoprime(f"cover surgery coefficient {self.p}/{self.q} is not reduced positive")


@dataclass(frozen=True)
class KnotDescriptor:
    name: str
    determinant: int
    signature: int
    a2: int
    quasi_alternating: bool
    branched_cover_surgery: CoverSurgery | None = None

    @classmethod
    def from_json(cls, obj: dict) -> KnotDescriptor:
        cover = obj.get("branched_cover_surgery")
        if cover is not None:
            cover = CoverSurgery(int(cover["p"]), int(cover["q"]),
                                 int(cover.get("a2_of_core_knot", 0)))
        return cls(name=str(obj["name"]), determinant=int(obj["determinant"]),
                   signature=int(obj["signature"]), a2=int(obj["a2"]),
                   quasi_alternating=bool(obj["quasi_alternating"]),
                   branched_cover_surgery=cover)

    @classmethod
    def load(cls, path: str | Path) -> KnotDescriptor:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BandingVerdict:
    pre_erratum: PreErratum
    post_erratum: PostErratum
    surviving_constraint: str | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {"pre_erratum": self.pre_erratum.value,
                "post_erratum": self.post_erratum.value,
                "constraint": self.surviving_constraint,
                "notes": list(self.notes)}


def torus_2k_invariants(k: int) -> KnotDescriptor:
    if k < 3 or k % 2 == 0:
        raise InvalidTorusParameter(f"T(2,k) needs odd k >= 3, got k={k}")
    # Sigma_2(T(2,k)) = L(k,1) = k-surgery on the unknot
    return KnotDescriptor(name=f"T(2,{k})", determinant=k, signature=-(k - 1),
                          a2=(k * k - 1) // 8, quasi_alternating=True,
                          branched_cover_surgery=CoverSurgery(k, 1, 0))


def mv_d_filter(d) -> bool:
    """True when d(Y) lies in {0, ±1}, i.e. a null-homologous distance-one
    surgery from Y to -Y is not excluded."""
    return as_rational(d) in (0, 1, -1)


def signature_to_d(sigma: int, convention_scale=DEFAULT_D_SCALE) -> Rational:
    return as_rational(convention_scale) * sigma


def _det_hypothesis(det: int) -> bool:
    return det % 9 == 0 and (det // 9) % 3 != 0


def corollary_verdict(K: KnotDescriptor, d_scale=DEFAULT_D_SCALE) -> BandingVerdict:
    notes = []
    det_ok = _det_hypothesis(K.determinant)
    sig_ok = K.signature not in (0, 4, -4)
    if not det_ok:
        notes.append(f"det={K.determinant} is not 9d with 3 ∤ d")
    if not sig_ok:
        notes.append(f"signature {K.signature} lies in {{0, ±4}}")
    if not K.quasi_alternating:
        notes.append("not known to be quasi-alternating; d-invariant is not determined by signature")

    if K.name == "T(2,5)":
        notes.append("T(2,5) has a known chirally cosmetic banding")
    elif K.name == "T(2,9)":
        notes.append("T(2,9) is the case left open by the Casson-Gordon bound (k in {5, 9})")

    if not (det_ok and sig_ok and K.quasi_alternating):
        return BandingVerdict(PreErratum.INCONCLUSIVE, PostErratum.INCONCLUSIVE_HYPOTHESES,
                              None, tuple(notes))
    cover = K.branched_cover_surgery
    if cover is None:
        raise MissingCoverData(f"{K.name}: hypotheses hold but no surgery description "
                               "of the double branched cover was supplied")

    d = signature_to_d(K.signature, d_scale)
    if mv_d_filter(d):
        notes.append(f"null-homologous branch open: d = {format_rational(d)} in {{0, ±1}}")
    else:
        notes.append(f"null-homologous branch excluded: d = {format_rational(d)} not in {{0, ±1}}")
    notes.append("non-null-homologous branch relied on the retracted mod-3 contradiction; "
                 "only the constraint survives")
    constraint = f"eps*{cover.q} ≡ ell0 (mod 3) for p={cover.p}, q={cover.q}"
    return BandingVerdict(PreErratum.NO_BANDING, PostErratum.INCONCLUSIVE_ERRATUM,
                          constraint, tuple(notes))


def torus_banding_table(k_max: int) -> list[tuple[int, BandingVerdict]]:
    return [(k, corollary_verdict(torus_2k_invariants(k))) for k in range(3, k_max + 1, 2)]


def format_table(rows: list[tuple[int, BandingVerdict]]) -> str:
    header = ("k", "pre_erratum", "post_erratum", "constraint")
    body = [(str(k), v.pre_erratum.value, v.post_erratum.value, v.surviving_constraint or "-")
            for k, v in rows]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header, *body]]
    lines.append(f"signature convention: {SIGNATURE_CONVENTION}")
    return "\n".join(lines)
