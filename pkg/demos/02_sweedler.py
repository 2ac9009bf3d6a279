"""
Sweedler's algebra: weakly non-degenerate but not factorizable
==============================================================

The 4-dim Sweedler algebra with its triangular R-matrix gives a symmetric
category.  The map Omega from class functions to the center is onto but
not one-to-one, and the Mueger center is everything.
"""

from hopfkit.hopf import center_basis, class_functions_basis, verify_hopf
from hopfkit.qt import (
    is_factorizable,
    monodromy,
    omega_matrix,
    theorem1_crosscheck,
    transparency_ideal,
    verify_qt,
    xi_basis,
)
from hopfkit.zoo import sweedler

sw = sweedler()
H = sw.H
print(H, H.labels)
print(verify_hopf(H))
print(verify_qt(sw))

print("S(x) =", H.format(H.S(H.basis_vector("x"))))
print("Q = R21 R =", {(H.labels[i], H.labels[j]): str(c) for (i, j), c in monodromy(sw).items()})

CF = class_functions_basis(H)
CE = center_basis(H)
print("dim CF =", CF.dim, "  dim CE =", CE.dim)
print("Omega in these bases:", omega_matrix(sw).to_dense())

print("factorizable:", is_factorizable(sw))
print("transparency ideal dim:", transparency_ideal(sw).dim)  # 0, so every module is transparent
print("dim Xi:", xi_basis(sw).dim)

print(theorem1_crosscheck(sw))
