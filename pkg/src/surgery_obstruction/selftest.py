"""Property sweeps over every module, shared by ``selftest`` and the test suite.

Each ``check_*`` function returns a list of counterexamples; an empty list
means the property held on the whole sweep.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from functools import partial
from typing import Callable

from .banding import PostErratum, PreErratum, mv_d_filter, signature_to_d, torus_banding_table
from .casson_walker import (FramedLink2, Normalization, SurgeryOnKnot, lambda_knot_surgery,
                            lambda_of_link_surgery, linking_matrix_signature,
                            link_identity_residual, solve_four_v3)
from .dedekind import (DedekindFn, dedekind_row_direct, dedekind_sum_fast,
                       reciprocity_residual, six_p_s, six_ps_mod3_fact)
from .errors import NonIntegral
from .numerics import make_rational
from .obstruction import (CORRECTED, ERRONEOUS, Classification, admissible_scenarios,
                          constraint_check, derive_congruence)
from .sweeps import ordered_map

ERRATUM_PS = (9, 18, 36, 45, 63, 90)


def nine_p0_values(p_max: int) -> list[int]:
    return [p for p in range(9, p_max + 1, 9) if (p // 9) % 3]


def _oracle_row(p: int, fast: DedekindFn) -> list:
    return [(q, p) for q, v in dedekind_row_direct(p).items() if fast(q, p) != v]


def check_oracle_equivalence(p_max: int, fast: DedekindFn = dedekind_sum_fast) -> list:
    rows = ordered_map(partial(_oracle_row, fast=fast), range(1, p_max + 1))
    bad = [x for row in rows for x in row]
    if fast(7, 1) != 0:
        bad.append((7, 1))
    return bad


class DirectTable:
    """s(q, p) by direct summation for moduli up to ``p_max``, periodic in q."""

    def __init__(self, p_max: int):
        self.rows = {p: dedekind_row_direct(p) for p in range(2, p_max + 1)}

    def __call__(self, q: int, p: int):
        if p == 1:
            return make_rational(0)
        return self.rows[p][q % p]


def check_reciprocity(n_max: int) -> list:
    table = DirectTable(n_max)
    return [(p, q) for p in range(1, n_max + 1) for q in range(1, n_max + 1)
            if math.gcd(p, q) == 1 and reciprocity_residual(p, q, table) != 0]


def _integrality_row(p: int) -> list:
    bad = []
    for q, v in dedekind_row_direct(p).items():
        if (6 * p * v).denominator != 1:
            bad.append((q, p, "direct"))
        try:
            six_p_s(q, p)
        except NonIntegral:
            bad.append((q, p, "fast"))
    return bad


def check_integrality(p_max: int) -> list:
    return [x for row in ordered_map(_integrality_row, range(2, p_max + 1)) for x in row]


def check_mod3_fact(p_max: int, fast: DedekindFn = dedekind_sum_fast) -> list:
    bad = []
    for p in nine_p0_values(p_max):
        for q in range(1, p):
            if math.gcd(p, q) == 1 and not six_ps_mod3_fact(p, q, fast):
                bad.append((p, q))
    return bad


@dataclass
class ErratumSweep:
    scenarios: int
    erroneous_not_contradiction: list
    corrected_mismatch: list
    sigma_eps_violations: list
    eps_m_violations: list
    allowed_9_1: list


def _erratum_for_pq(pq: tuple[int, int], m_bound: int, ell_bound: int) -> tuple:
    p, q = pq
    wrong_err, mismatch, sigma_bad, eps_m_bad, allowed = [], [], [], [], []
    scenarios = admissible_scenarios(p, q, (-m_bound, m_bound), (1, ell_bound))
    for s in scenarios:
        key = (s.p, s.q, s.m, s.ell)
        if derive_congruence(s, ERRONEOUS).classification is not Classification.CONTRADICTION:
            wrong_err.append(key)
        corr = derive_congruence(s, CORRECTED)
        if corr.holds != constraint_check(s):
            mismatch.append(key)
        if linking_matrix_signature(s.m, s.ell, s.p, s.q) != 1 + s.epsilon:
            sigma_bad.append(key)
        if s.epsilon - s.m != -s.q * s.ell0:
            eps_m_bad.append(key)
        if (p, q) == (9, 1) and corr.classification is Classification.ALLOWED:
            allowed.append((s.m, s.ell, s.epsilon))
    return wrong_err, mismatch, sigma_bad, eps_m_bad, allowed, len(scenarios)


def check_erratum(ps=ERRATUM_PS, m_bound: int = 50, ell_bound: int = 50) -> ErratumSweep:
    pairs = [(p, q) for p in ps for q in range(1, p) if math.gcd(p, q) == 1]
    results = ordered_map(partial(_erratum_for_pq, m_bound=m_bound, ell_bound=ell_bound), pairs)
    cols = [[x for r in results for x in r[i]] for i in range(5)]
    return ErratumSweep(sum(r[5] for r in results), *cols)


def random_scenarios(count: int, seed: int, ps=ERRATUM_PS, bound: int = 50) -> list:
    rng = random.Random(seed)
    pool = [s for p in ps for q in range(1, p) if math.gcd(p, q) == 1
            for s in admissible_scenarios(p, q, (-bound, bound), (1, bound))]
    return rng.sample(pool, min(count, len(pool)))


def check_unknown_independence(count: int = 100, seed: int = 0) -> list:
    rng = random.Random(seed + 1)
    bad = []
    for s in random_scenarios(count, seed):
        assignments = set()
        while len(assignments) < 4:
            assignments.add((rng.randint(-20, 20), rng.randint(-20, 20)))
        assignments = sorted(assignments)
        for n in Normalization:
            verdicts = {derive_congruence(s, n, unknowns=[a]) for a in assignments}
            if len({(v.lhs_residue, v.rhs_residue, v.classification) for v in verdicts}) != 1:
                bad.append((s, n, "verdict"))
            for a2x, a2y in assignments:
                v3 = solve_four_v3(s.m, s.ell, s.p, s.q, a2x, a2y, n)
                lam = lambda_of_link_surgery(s.p, s.q, a2y, n)
                link = FramedLink2(s.m, s.ell, s.p, s.q, a2x, a2y, 0)
                if link_identity_residual(link, lam, four_v3=v3) != 0:
                    bad.append((s, n, "plug-back", a2x, a2y))
    return bad


def check_normalization_scaling(count: int = 200, seed: int = 0) -> list:
    rng = random.Random(seed)
    bad = []
    done = 0
    while done < count:
        p, q = rng.randint(1, 500), rng.randint(1, 500)
        if math.gcd(p, q) != 1:
            continue
        s = SurgeryOnKnot(rng.randint(-50, 50), p, q)
        done += 1
        if lambda_knot_surgery(s, Normalization.PAPER_P2) != 2 * lambda_knot_surgery(
                s, Normalization.WALKER_P1):
            bad.append(s)
    return bad


def check_lens_antisymmetry(p_max: int = 50) -> list:
    bad = []
    for n in Normalization:
        for p in range(2, p_max + 1):
            for q in range(1, p):
                if math.gcd(p, q) != 1:
                    continue
                a = lambda_knot_surgery(SurgeryOnKnot(0, p, q), n)
                b = lambda_knot_surgery(SurgeryOnKnot(0, p, p - q), n)
                if a != -b:
                    bad.append((p, q, n))
    return bad


def check_banding_table(k_max: int = 45) -> list:
    bad = []
    rows = torus_banding_table(k_max)
    no_banding = {k for k, v in rows if v.pre_erratum is PreErratum.NO_BANDING}
    expected = {k for k in range(3, k_max + 1, 2) if k % 9 == 0 and (k // 9) % 3}
    if no_banding != expected:
        bad.append(("no_banding", sorted(no_banding), sorted(expected)))
    for k, v in rows:
        if v.post_erratum not in (PostErratum.INCONCLUSIVE_ERRATUM,
                                  PostErratum.INCONCLUSIVE_HYPOTHESES):
            bad.append(("post", k))
        if k == 5 and not any("known" in n for n in v.notes):
            bad.append(("k5-note", k))
    for sigma in range(-60, 61, 2):
        d = signature_to_d(sigma)
        if mv_d_filter(d) != mv_d_filter(-d):
            bad.append(("filter-symmetry", sigma))
    return bad


@dataclass(frozen=True)
class Bounds:
    oracle_p: int
    reciprocity_n: int
    integrality_p: int
    fact_p: int
    erratum_ps: tuple
    erratum_bound: int
    randomized: int


LEVELS = {
    "quick": Bounds(150, 60, 150, 180, (9, 18), 20, 20),
    "full": Bounds(1000, 500, 1000, 900, ERRATUM_PS, 50, 100),
}


def faulty_dedekind_sum(q: int, p: int):
    # deliberately wrong on a sparse set of inputs, for harness testing
    v = dedekind_sum_fast(q, p)
    return v + make_rational(1, 7) if p > 10 and q % 11 == 3 else v


def run_selftest(level: str = "quick", fast: DedekindFn = dedekind_sum_fast,
                 log: Callable[[str], None] | None = None) -> dict:
    b = LEVELS[level]

    def erratum():
        r = check_erratum(b.erratum_ps, b.erratum_bound, b.erratum_bound)
        bad = r.erroneous_not_contradiction + r.corrected_mismatch + r.sigma_eps_violations
        bad += r.eps_m_violations
        if (2, 3, 1) not in r.allowed_9_1:
            bad.append("(m=2, ell=3) not ALLOWED for p=9, q=1")
        return bad

    checks = [
        ("dedekind_oracle_equivalence", lambda: check_oracle_equivalence(b.oracle_p, fast)),
        ("dedekind_reciprocity", lambda: check_reciprocity(b.reciprocity_n)),
        ("six_ps_integrality", lambda: check_integrality(b.integrality_p)),
        ("six_ps_mod3_fact", lambda: check_mod3_fact(b.fact_p, fast)),
        ("erratum_reproduction", erratum),
        ("unknown_independence", lambda: check_unknown_independence(b.randomized)),
        ("normalization_scaling", lambda: check_normalization_scaling(2 * b.randomized)),
        ("lens_antisymmetry", lambda: check_lens_antisymmetry(50)),
        ("banding_table", lambda: check_banding_table(45)),
    ]
    results = []
    for name, fn in checks:
        t0 = time.perf_counter()
        try:
            bad = fn()
        except Exception as exc:  # a crash inside a sweep is a failed property
            bad = [f"{type(exc).__name__}: {exc}"]
        secs = time.perf_counter() - t0
        results.append({"name": name, "ok": not bad, "counterexamples": len(bad),
                        "seconds": round(secs, 3)})
        if log:
            log(f"{'PASS' if not bad else 'FAIL'} {name} ({secs:.2f}s, {len(bad)} counterexamples)")
    passed = sum(r["ok"] for r in results)
    return {"level": level, "passed": passed, "failed": len(results) - passed, "checks": results}
