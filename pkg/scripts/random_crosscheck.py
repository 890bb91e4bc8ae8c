"""Seeded sweep: rank formula and Diophantine torsion against SNF.

Writes one JSON line per failure and a summary line at the end.
"""
import argparse
import json
import random
from collections import Counter

from dbraid.centre import centre_group, centre_rank_formula, cross_check_torsion
from dbraid.scheme import random_scheme


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--r-max", type=int, default=7)
    ap.add_argument("--k-max", type=int, default=8)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    failures = 0
    shapes = Counter()
    for _ in range(args.count):
        s = random_scheme(rng, r_max=args.r_max, max_edges=12, k_range=(2, args.k_max), connected=True)
        G = centre_group(s)
        rep = cross_check_torsion(s)
        shapes[(G.rank, len(G.invariant_factors))] += 1
        if G.rank != centre_rank_formula(s) or not rep.agree:
            failures += 1
            print(json.dumps({"scheme": s.to_json(), "check": rep.to_json()}))
    print(f"seed {args.seed}: {args.count} schemes, {failures} failures")
    for (rank, nt), c in sorted(shapes.items()):
        print(f"  rank {rank}, {nt} torsion factors: {c}")


if __name__ == "__main__":
    main()
