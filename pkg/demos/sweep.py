"""Exhaustive sweep over small cyclic series, with a tally of the three classes.

Run: python demos/sweep.py [max_n]
"""

import collections
import sys
import time

from nakayama import classify, enumerate_series
from nakayama.verify import SuiteSpec, failures, property_counts, run_suite

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 4

start = time.perf_counter()
results = run_suite(SuiteSpec((1, max_n), "3n"))
print(f"{len(results)} checks in {time.perf_counter() - start:.1f}s, {len(failures(results))} failures")
for prop, (seen, bad) in property_counts(results).items():
    print(f"  {prop:48s} {seen - bad}/{seen}")

print()
for n in range(1, max_n + 1):
    tally = collections.Counter(classify(ks).label for ks in enumerate_series(n, 3 * n))
    print(f"n = {n}: {dict(sorted(tally.items()))}")
