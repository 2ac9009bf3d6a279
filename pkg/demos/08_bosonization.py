"""
Bosonization of the truncated line is a Taft algebra
====================================================

The Radford biproduct B # k[Z/N] is an ordinary Hopf algebra of dimension
N^2.  Its co-opposite is exactly taft(N, q); in the basis (g^-1 x)^a g^-b
it is taft(N, q^-1).
"""

from hopfkit.hopf import change_basis, coopposite, same_structure, verify_hopf
from hopfkit.scalar import root_of_unity
from hopfkit.yd import nichols_truncated_line
from hopfkit.zoo import bosonization, group_algebra_with_bicharacter, taft

for N in (2, 3, 4):
    QT = group_algebra_with_bicharacter([N], [[1]], N)
    Bo = bosonization(nichols_truncated_line(N, QT), QT)
    q = root_of_unity(N)

    ginv = Bo.basis_vector(Bo.labels[N - 1])  # g^(N-1)
    xp = Bo.mul(ginv, Bo.basis_vector("x"))
    vecs = []
    for a in range(N):
        for b in range(N):
            v = Bo.one()
            for _ in range(a):
                v = Bo.mul(v, xp)
            for _ in range(b):
                v = Bo.mul(v, ginv)
            vecs.append(v)
    Ti = taft(N, q ** (N - 1))

    print(f"N={N}: dim {Bo.dim}, Hopf {verify_hopf(Bo).ok}, "
          f"cop = taft(N, q): {same_structure(coopposite(Bo), taft(N, q))}, "
          f"relabeled = taft(N, q^-1): {same_structure(change_basis(Bo, vecs, Ti.labels), Ti)}")
