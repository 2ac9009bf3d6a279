"""
Yetter-Drinfeld modules over a braided Hopf algebra
===================================================

B = k[x]/(x^3) is a Hopf algebra in Rep(k[Z/3]).  The adjoint module P and
the coadjoint module Q are YD modules over B; the trivial module embeds in
the Mueger center, while P and Q braid nontrivially with something.
"""

from hopfkit.yd import (
    HModule,
    adjoint_yd_P,
    check_braiding_identities,
    coadjoint_yd_Q,
    nichols_truncated_line,
    regular_yd,
    trivial_yd_embed,
    verify_braided_hopf,
    verify_hexagons,
    verify_yd_module,
    yd_muger_membership,
    yd_muger_witness,
)

B = nichols_truncated_line(3)
print(verify_braided_hopf(B))

P, Q = adjoint_yd_P(B), coadjoint_yd_Q(B)
T = trivial_yd_embed(HModule.trivial(B.qt.H), B)
REG = regular_yd(B)
for M in (P, Q, T, REG):
    print(f"{M.name:4s} dim {M.dim:2d}: YD module {verify_yd_module(M, B).ok}, "
          f"braiding identities {check_braiding_identities(M, B).ok}")

print("hexagons on (P, Q, P):", verify_hexagons(B.qt, B, [(P, Q, P)]).ok)
for M in (P, Q, T):
    print(f"{M.name} in the Mueger center: {yd_muger_membership(M, B)}"
          + ("" if yd_muger_membership(M, B) else f"  (braids with {yd_muger_witness(M, B)})"))
