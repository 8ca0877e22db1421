"""List (p, ell) with p | ell^2, p ∤ ell but 3 | ell^2/p, for p = 9*p0, 3 ∤ p0.

These only occur when p0 has a square factor. They satisfy the homology and
non-null-homology conditions but not ell0 ≢ 0 (mod 3), so the scenario type
rejects them. For each one this prints the residues the mod-3 reduction
would produce anyway, under both normalizations.
"""
import argparse
import math
from types import SimpleNamespace

from surgery_obstruction.casson_walker import Normalization
from surgery_obstruction.dedekind import check_nine_p0
from surgery_obstruction.errors import HypothesisViolated
from surgery_obstruction.numerics import mod3_residue
from surgery_obstruction.obstruction import congruence_sides


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p-max", type=int, default=400)
    ap.add_argument("--ell-max", type=int, default=200)
    ap.add_argument("--q", type=int, default=1)
    args = ap.parse_args()

    for p in range(9, args.p_max + 1, 9):
        try:
            check_nine_p0(p)
        except HypothesisViolated:
            continue
        if math.gcd(p, args.q) != 1:
            continue
        for ell in range(1, args.ell_max + 1):
            if ell % p == 0 or ell * ell % p or (ell * ell // p) % 3:
                continue
            ell0 = ell * ell // p
            for eps in (1, -1):
                m = eps + args.q * ell0
                s = SimpleNamespace(p=p, q=args.q, m=m, ell=ell, epsilon=eps, ell0=ell0)
                res = {}
                for n in Normalization:
                    lhs, rhs, _ = congruence_sides(s, n, 0, 0)
                    res[n.value] = (mod3_residue(lhs).value, mod3_residue(rhs).value)
                print(f"p={p:4d} p0={p // 9:3d} ell={ell:4d} ell0={ell0:5d} eps={eps:+d} m={m:6d}  "
                      + "  ".join(f"{k}: {a} vs {b}" for k, (a, b) in res.items()))


if __name__ == "__main__":
    main()
