"""
Centralizers in pointed braided categories
==========================================

A finite abelian group with a bicharacter chi models a pointed braided
category.  Subgroups are the fusion subcategories, and the centralizer of A
is the beta-orthogonal of A, beta(g, h) = chi(g, h) chi(h, g).  We check the
FPdim and double-centralizer identities on every subgroup by enumeration.
"""

from hopfkit.pointed import (
    Bicharacter,
    FinAbGroup,
    check_centralizer_identities,
    pointed_omega_rank,
    pointed_vs_hopf_crosscheck,
    radical,
    symmetric_form,
)

cases = {
    "Z/4, chi(g,g) = i": Bicharacter(FinAbGroup([4]), [[1]], 4),
    "Z/12 x Z/3": Bicharacter(FinAbGroup([12, 3]), [[1, 0], [0, 4]], 12),
    "Z/15, chi(g,g) = zeta_15^5": Bicharacter(FinAbGroup([15]), [[5]], 15),
}
for name, chi in cases.items():
    beta = symmetric_form(chi)
    rep = check_centralizer_identities(beta)
    print(f"{name}: |rad| = {len(radical(beta))}, omega rank = {pointed_omega_rank(beta)}, "
          f"{rep.data['subgroups_checked']} subgroups, identities hold: {rep.ok}")

# the same numbers from the Hopf side, k[Gamma] with R = sum chi(g,h) e_g (x) e_h
print(pointed_vs_hopf_crosscheck(cases["Z/4, chi(g,g) = i"]))
