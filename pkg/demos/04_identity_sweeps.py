"""
Seeded sweeps over the combinatorial identities
===============================================

Every identity behind the coefficient formulas, checked exactly on fixed-seed
samples.
"""

import time

from hilbcoef.identities import det_cofactor, run_sweep, vandermonde_matrix, vandermonde_vt

# a generalized Vandermonde determinant against its product formula
alphas = (1, 3, 4)
for t in range(4):
    print(t, vandermonde_vt(alphas, t), det_cofactor(vandermonde_matrix(alphas, t)))

for kind in ("small", "full"):
    start = time.perf_counter()
    res = run_sweep(kind, seed=0)
    print(f"{kind}: {res.total} checks, {len(res.failures)} failures, "
          f"{time.perf_counter() - start:.2f}s")
    for name, count in sorted(res.checked.items()):
        print(f"  {name}: {count}")
