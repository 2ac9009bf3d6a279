"""
The small quantum group u_q(sl2)
================================

For N = 3 the algebra is cut out of D(taft(3)) as a Hopf quotient; for
N >= 5 it is built from its PBW presentation.  Both routes agree at N = 3.
"""

import time

from hopfkit.linalg import rank
from hopfkit.qt import drinfeld_map_matrix, theorem1_crosscheck, verify_qt
from hopfkit.zoo import small_quantum_sl2

for route in ("quotient", "presentation"):
    U = small_quantum_sl2(3, route)
    r = theorem1_crosscheck(U).data
    print(f"N=3 via {route:12s}: dim {U.H.dim}, omega rank {r['omega_rank']}, dim CF {r['dim_cf']}, "
          f"all three true: {r['factorizable'] and r['weakly_factorizable'] and r['muger_trivial']}")

t0 = time.perf_counter()
U = small_quantum_sl2(5)
print(f"N=5: dim {U.H.dim} = 5 * 5^2, R-matrix ok: {verify_qt(U).ok}, "
      f"Drinfeld-map rank {rank(drinfeld_map_matrix(U))}  ({time.perf_counter() - t0:.1f}s)")
