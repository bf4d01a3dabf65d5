"""A small census, and how the non-special pairs grow with N.

The full N = 1000 census takes about a minute per core; here N = 60.
"""
import math
from collections import Counter

from specialpair.census import iter_census, nonspecial_shape_statistic, run_census

summary = run_census(60, jobs=1, timing=False)
print(summary.to_json())

# which primes end up witnessing the special pairs?
witnesses = Counter(
    rec.cls.witness.q for rec in iter_census(60, timing=False) if rec.cls.witness is not None
)
for q, count in sorted(witnesses.items())[:10]:
    print(f"q={q:3d}  {count:5d} pairs")

# non-special pairs come from squares and shared fields only, so they can be
# counted without the search
print(f"{'N':>6} {'nonspecial':>11} {'ratio':>8} {'square alpha':>13}")
for row in nonspecial_shape_statistic([100, 400, 1600, 6400]):
    print(f"{row.n:6d} {row.nonspecial_count:11d} {row.ratio:8.4f} {row.square_alpha_pairs:13d}")

# the ratio to N^1.5 log N drifts down slowly, as it should for an upper bound
print("N^1.5 ln N at N=1000:", round(1000**1.5 * math.log(1000)))
