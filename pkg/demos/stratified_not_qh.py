"""The two-vertex series 4,5: standardly stratified but not quasi-hereditary.

Run: python demos/stratified_not_qh.py
"""

import itertools

from nakayama import classify, cyclic, dim_tables, is_ss_with_order, resolve, standard_lengths
from nakayama.homology import format_dim, simple

ks = cyclic(4, 5)
t = dim_tables(ks)
print(f"series {ks}: pd of simples {[format_dim(x) for x in t.pd]}")
print(f"gldim {format_dim(t.gldim)}, findim {t.findim}")
for i in (1, 2):
    print(f"  S_{i}: {resolve(ks, simple(i))}")

print()
for order in itertools.permutations((1, 2)):
    sl = standard_lengths(ks, order)
    print(
        f"order {order}: standard lengths {sl.delta}, proper standard lengths {sl.proper_delta},"
        f" stratifying: {is_ss_with_order(ks, order)}"
    )

c = classify(ks)
print()
print(f"class {c.label}, witness {c.witness}, pattern (k, q) = {c.pattern}")
print(f"opposite algebra also stratified: {c.properly_stratified}")
