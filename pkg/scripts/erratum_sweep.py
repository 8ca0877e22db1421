"""Sweep every admissible scenario for the given moduli and write a JSON report.

    python scripts/erratum_sweep.py --p 9 18 36 45 63 90 --bound 50 --out sweep.json
"""
import argparse
import json
import math
from collections import Counter

from surgery_obstruction.obstruction import (CORRECTED, ERRONEOUS, admissible_scenarios,
                                             constraint_check, derive_congruence)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, nargs="+", default=[9, 18, 36, 45, 63, 90])
    ap.add_argument("--bound", type=int, default=50, help="|m| <= bound, 1 <= ell <= bound")
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    rows = []
    for p in args.p:
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            for s in admissible_scenarios(p, q, (-args.bound, args.bound), (1, args.bound)):
                err = derive_congruence(s, ERRONEOUS)
                cor = derive_congruence(s, CORRECTED)
                rows.append({"p": p, "q": q, "m": s.m, "ell": s.ell, "epsilon": s.epsilon,
                             "ell0": s.ell0, "erroneous": err.classification.value,
                             "corrected": cor.classification.value,
                             "constraint_check": constraint_check(s)})
    summary = {
        "scenarios": len(rows),
        "erroneous": dict(Counter(r["erroneous"] for r in rows)),
        "corrected": dict(Counter(r["corrected"] for r in rows)),
        "corrected_matches_constraint": all(
            (r["corrected"] == "ALLOWED") == r["constraint_check"] for r in rows),
    }
    doc = json.dumps({"bound": args.bound, "p": args.p, "summary": summary, "rows": rows},
                     ensure_ascii=False, indent=1)
    if args.out == "-":
        print(doc)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
        print(json.dumps(summary))


if __name__ == "__main__":
    main()
