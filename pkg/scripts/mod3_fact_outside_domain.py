"""Test 6p*s(q,p) ≡ q (mod 3) outside p = 9*p0, 3 ∤ p0.

Reports, per class of p (3 ∤ p, p = 3*p0 exactly, 27 | p), how many coprime
pairs satisfy the congruence. Nothing here is asserted by the library.
"""
import argparse
import math
from collections import defaultdict

from surgery_obstruction.dedekind import six_p_s


def p_class(p):
    v = 0
    while p % 3 == 0:
        p //= 3
        v += 1
    return {0: "3 ∤ p", 1: "3 || p", 2: "9 || p (hypothesis domain)"}.get(v, "27 | p")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p-max", type=int, default=600)
    args = ap.parse_args()

    stats = defaultdict(lambda: [0, 0, None])
    for p in range(2, args.p_max + 1):
        cls = p_class(p)
        for q in range(1, p):
            if math.gcd(p, q) != 1 or q % 3 == 0:
                continue
            st = stats[cls]
            st[0] += 1
            if (six_p_s(q, p) - q) % 3 == 0:
                st[1] += 1
            elif st[2] is None:
                st[2] = (q, p)
    for cls, (total, good, example) in sorted(stats.items()):
        print(f"{cls:28s} {good:7d}/{total:<7d} hold; first counterexample (q, p): {example}")


if __name__ == "__main__":
    main()
