"""
Three non-degeneracy tests across the zoo
=========================================

For every quasitriangular example shipped with hopfkit, compute
factorizability, weak factorizability and Mueger-triviality separately and
check that they agree.
"""

import time

from hopfkit.qt import theorem1_crosscheck
from hopfkit.zoo import build, zoo_members

print(f"{'member':22s} {'dim':>4s} {'fact':>6s} {'weak':>6s} {'muger':>6s} {'rank':>5s} {'Xi':>4s}")
for d in zoo_members():
    t0 = time.perf_counter()
    QT = build(d)
    r = theorem1_crosscheck(QT).data
    print(
        f"{d:22s} {QT.H.dim:4d} {str(r['factorizable']):>6s} {str(r['weakly_factorizable']):>6s} "
        f"{str(r['muger_trivial']):>6s} {r['omega_rank']:5d} {r['dim_xi']:4d}"
        f"   consistent={r['consistent']}  ({time.perf_counter() - t0:.2f}s)"
    )
