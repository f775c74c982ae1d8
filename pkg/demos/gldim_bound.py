"""Walk through the series 2,...,2,3 where the global dimension bound n + m - 1 is tight.

Run: python demos/gldim_bound.py
"""

from nakayama import bound_report, cyclic, global_dimension, psi_profile, resolve
from nakayama.homology import simple, simple_pds


for n in range(2, 7):
    ks = cyclic(*[2] * (n - 1), 3)
    prof = psi_profile(ks)
    main = bound_report(ks)["gldim_le_n_plus_m_minus_1"]
    print(f"[{ks}]  pd of simples {simple_pds(ks)}  gldim {global_dimension(ks)}")
    print(f"    psi {list(prof.psi)}, regular {list(prof.regular)}, d = {prof.d}, m = {prof.m}")
    print(f"    gldim {main.lhs} <= n + m - 1 = {main.rhs}  (tight: {main.attained})")

# the longest resolution is the one of the first simple
ks = cyclic(2, 2, 2, 3)
print()
print("resolution of S_1 over", ks)
print("   ", resolve(ks, simple(1)))
