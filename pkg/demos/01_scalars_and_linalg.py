"""
Exact cyclotomic arithmetic
===========================

Everything in hopfkit is exact: scalars live in Q(zeta_L) and are stored as
rational polynomials reduced modulo the L-th cyclotomic polynomial.
"""

from hopfkit.linalg import Mat, kernel_basis, rank
from hopfkit.scalar import lift, parse_scalar, root_of_unity

z3 = root_of_unity(3)
print("zeta_3 + zeta_3^2 =", z3 + z3 ** 2)

i = root_of_unity(4)
print("i * i =", i * i, "  coefficients of i:", [str(c) for c in i.coeffs])

# the same element seen in a bigger field
print("zeta_3 inside Q(zeta_6):", lift(z3, 6), "=", root_of_unity(6, 2))

# literals use z for zeta_L
a = parse_scalar("1/2*z^3-2*z+1", 5)
print("a =", a, "  a * a^-1 =", a * a.inv())

# the sign form (-1)^(ab) on Z/4 is degenerate: rank 2, a 2-dim kernel
M = Mat.from_dense([[(-1) ** (a * b) for b in range(4)] for a in range(4)], 1)
print("rank:", rank(M))
for v in kernel_basis(M):
    print("  kernel vector", {k: str(c) for k, c in v.items()})
