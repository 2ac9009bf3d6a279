"""
Drinfeld doubles are factorizable
=================================

D(H) carries a canonical R-matrix whose monodromy has full rank.  The
multiplication convention is the one that passes the checkers; the other
standard variant is kept only to show that it fails.
"""

from hopfkit.hopf import verify_hopf
from hopfkit.linalg import rank
from hopfkit.qt import drinfeld_map_matrix, verify_qt
from hopfkit.scalar import root_of_unity
from hopfkit.zoo import drinfeld_double, group_algebra, sweedler, taft

for H in (group_algebra(2), sweedler().H, taft(3, root_of_unity(3))):
    D = drinfeld_double(H)
    print(f"D({H.metadata['name']}): dim {D.H.dim}, Hopf {verify_hopf(D.H).ok}, "
          f"QT {verify_qt(D).ok}, Drinfeld-map rank {rank(drinfeld_map_matrix(D))}")

bad = drinfeld_double(sweedler().H, variant="B")
rep = verify_hopf(bad.H)
rep.merge(verify_qt(bad), prefix="qt.")
print("variant B fails:", [c.name for c in rep.failures])
