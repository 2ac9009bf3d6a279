"""Pointed braided categories modeled by a finite abelian group with a bicharacter.

Simple objects are the group elements, every FPdim is 1, a full tensor
subcategory is a subgroup A, and its centralizer is

    A' = {g : beta(g, a) = 1 for all a in A},   beta(g, h) = chi(g, h) chi(h, g).

The Mueger center is the radical of beta.  Everything is decided by exact
enumeration over exponent tuples.
"""

from __future__ import annotations

from collections import deque
from itertools import product

from .linalg import Mat, rank
from .report import Report
from .scalar import root_of_unity

__all__ = [
    "FinAbGroup",
    "Bicharacter",
    "symmetric_form",
    "radical",
    "pointed_omega_rank",
    "check_centralizer_identities",
    "pointed_vs_hopf_crosscheck",
    "sl2_bicharacter",
    "abelian_groups",
    "bicharacter_samples",
]


class FinAbGroup:
    """Z/n_1 x ... x Z/n_k with elements as exponent tuples.

    Internally elements are also numbered in mixed radix (last factor fastest),
    matching the order of ``elements``; subgroups are enumerated as bitmasks.
    """

    def __init__(self, invariant_factors):
        if isinstance(invariant_factors, int):
            invariant_factors = [invariant_factors]
        self.factors = [int(n) for n in invariant_factors]
        if not self.factors or any(n < 1 for n in self.factors):
            raise ValueError("invariant factors must be positive")
        self.elements = list(product(*[range(n) for n in self.factors]))
        self.order = len(self.elements)
        self.zero = tuple(0 for _ in self.factors)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._table = None
        self._subs = None

    def add(self, g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factors))

    def _add_table(self):
        if self._table is None:
            idx, els = self.index, self.elements
            self._table = [[idx[self.add(g, h)] for h in els] for g in els]
        return self._table

    def _adjoin(self, members: list[int], mask: int, g: int):
        # A + <g> is a subgroup (abelian), the disjoint union of the cosets A + kg
        T = self._add_table()
        out = list(members)
        x = g
        while not mask >> x & 1:
            for s in members:
                y = T[s][x]
                out.append(y)
                mask |= 1 << y
            x = T[x][g]
        return out, mask

    def closure(self, gens, base=None) -> frozenset:
        """Subgroup generated by ``gens`` (and the subgroup ``base``)."""
        members = [self.index[a] for a in base] if base is not None else [0]
        mask = 0
        for i in members:
            mask |= 1 << i
        for g in gens:
            members, mask = self._adjoin(members, mask, self.index[g])
        return frozenset(self.elements[i] for i in members)

    def subgroups(self) -> list[frozenset]:
        return [A for A, _ in self.subgroups_with_generators()]

    def subgroups_with_generators(self) -> list[tuple[frozenset, tuple]]:
        """All subgroups with a generating set, by breadth-first extension.

        Adjoining g to A only depends on the coset g + A, so one
        representative per coset is tried; the whole group is never extended.
        """
        els = self.elements
        out = [
            (frozenset(els[i] for i in members), tuple(els[i] for i in gens))
            for members, _, gens in self._subgroup_masks()
        ]
        return sorted(out, key=lambda kv: (len(kv[0]), sorted(kv[0])))

    def _subgroup_masks(self):
        if self._subs is not None:
            return self._subs
        T = self._add_table()
        found = {1: ((0,), ())}
        queue = deque([1])
        while queue:
            mask = queue.popleft()
            members, gens = found[mask]
            if len(members) == self.order:
                continue
            done = mask
            for g in range(self.order):
                if done >> g & 1:
                    continue
                for s in members:
                    done |= 1 << T[g][s]
                new_members, new_mask = self._adjoin(members, mask, g)
                if new_mask not in found:
                    found[new_mask] = (new_members, gens + (g,))
                    queue.append(new_mask)
        self._subs = sorted(
            ((list(m), mask, g) for mask, (m, g) in found.items()),
            key=lambda t: (len(t[0]), t[1]),
        )
        return self._subs

    def __repr__(self):
        return "x".join(f"Z/{n}" for n in self.factors)


class Bicharacter:
    """chi(g_i, g_j) = zeta_L^E[i][j], extended bimultiplicatively."""

    def __init__(self, group: FinAbGroup, E, L: int):
        from .zoo import IncompatibleExponents

        self.group = group
        self.E = [[int(v) % L for v in row] for row in E]
        self.L = int(L)
        k = len(group.factors)
        if len(self.E) != k or any(len(r) != k for r in self.E):
            raise IncompatibleExponents(f"exponent matrix must be {k}x{k}")
        n = group.factors
        for i in range(k):
            for j in range(k):
                if (n[i] * self.E[i][j]) % L or (n[j] * self.E[i][j]) % L:
                    raise IncompatibleExponents(f"entry ({i},{j}) is not bimultiplicative")

    def exponent(self, g, h) -> int:
        k = len(g)
        return sum(g[i] * self.E[i][j] * h[j] for i in range(k) for j in range(k)) % self.L

    def is_one(self, g, h) -> bool:
        return self.exponent(g, h) == 0

    def is_symmetric(self) -> bool:
        k = len(self.E)
        return all(self.E[i][j] == self.E[j][i] for i in range(k) for j in range(k))

    def __repr__(self):
        return f"Bicharacter({self.group!r}, E={self.E}, L={self.L})"


def sl2_bicharacter(N: int) -> Bicharacter:
    """chi(g, g) = q^2 with q = zeta_N, the rank-one Cartan datum."""
    return Bicharacter(FinAbGroup([N]), [[2]], N)


def symmetric_form(chi: Bicharacter) -> Bicharacter:
    k = len(chi.E)
    E = [[chi.E[i][j] + chi.E[j][i] for j in range(k)] for i in range(k)]
    return Bicharacter(chi.group, E, chi.L)


def _perp(beta: Bicharacter, A) -> frozenset:
    return frozenset(g for g in beta.group.elements if all(beta.is_one(g, a) for a in A))


def _kernel_masks(beta: Bicharacter) -> list[int]:
    """Bit g of masks[h] is set iff beta(g, h) = 1."""
    G = beta.group
    masks = []
    for h in G.elements:
        m = 0
        for i, g in enumerate(G.elements):
            if beta.is_one(g, h):
                m |= 1 << i
        masks.append(m)
    return masks


def radical(beta: Bicharacter) -> frozenset:
    return _perp(beta, beta.group.elements)


def pointed_omega_rank(beta: Bicharacter) -> int:
    """Exact rank of [beta(g, h)]; checked against |Gamma| / |rad|."""
    G = beta.group
    zs = [root_of_unity(beta.L, e) for e in range(beta.L)]
    rows = [[zs[beta.exponent(g, h)] for h in G.elements] for g in G.elements]
    r = rank(Mat.from_dense(rows, beta.L))
    expected = G.order // len(radical(beta))
    if r != expected:
        raise RuntimeError(f"rank {r} differs from |Gamma|/|rad| = {expected}")
    return r


def check_centralizer_identities(beta: Bicharacter) -> Report:
    """|A| |A'| = |Gamma| |A n rad| and A'' = A rad for every subgroup A."""
    G = beta.group
    if G.order > 10 ** 4:
        raise ValueError("group too large for enumeration")
    masks = _kernel_masks(beta)
    full = (1 << G.order) - 1

    def perp(idxs):
        m = full
        for h in idxs:
            m &= masks[h]
        return m

    def bits(m):
        return [i for i in range(G.order) if m >> i & 1]

    rad_mask = perp(range(G.order))
    rad = bits(rad_mask)
    rep = Report(title=f"centralizer identities on {G!r}")
    subs = G._subgroup_masks()
    v1, v2 = [], []
    for members, a_mask, gens in subs:
        ap_mask = perp(gens)
        n_ap = bin(ap_mask).count("1")
        n_meet = bin(a_mask & rad_mask).count("1")
        if len(members) * n_ap != G.order * n_meet:
            v1.append(sorted(G.elements[i] for i in members))
        app_mask = perp(bits(ap_mask))
        join_members, join = members, a_mask
        for r in rad:
            if not join >> r & 1:
                join_members, join = G._adjoin(join_members, join, r)
        if app_mask != join:
            v2.append(sorted(G.elements[i] for i in members))
    rep.add("fpdim_identity", not v1, v1[0] if v1 else None)
    rep.add("double_centralizer", not v2, v2[0] if v2 else None)
    rep.data.update(
        group=G.factors,
        radical_order=len(rad),
        subgroups_checked=len(subs),
        violations=len(v1) + len(v2),
    )
    return rep


def pointed_vs_hopf_crosscheck(chi: Bicharacter) -> Report:
    """Compare the pointed model with the Hopf pipeline on k[Gamma]."""
    from .qt import is_factorizable, is_muger_trivial, omega_rank
    from .zoo import group_algebra_with_bicharacter

    if chi.group.order > 64:
        raise ValueError("group too large for the Hopf side")
    beta = symmetric_form(chi)
    rad = radical(beta)
    prank = pointed_omega_rank(beta)
    QT = group_algebra_with_bicharacter(chi.group.factors, chi.E, chi.L)
    hrank = omega_rank(QT)
    trivial = len(rad) == 1
    mt = is_muger_trivial(QT)
    fa = is_factorizable(QT)
    rep = Report(title=f"pointed vs Hopf on {chi!r}")
    rep.add("omega_rank", prank == hrank, None if prank == hrank else (prank, hrank))
    rep.add("muger_vs_radical", mt == trivial, None if mt == trivial else (mt, trivial))
    rep.add("factorizable_vs_radical", fa == trivial, None if fa == trivial else (fa, trivial))
    rep.data.update(
        group=chi.group.factors,
        radical_order=len(rad),
        omega_rank=prank,
        hopf_omega_rank=hrank,
        radical_cosets=chi.group.order // len(rad),
        muger_trivial=mt,
        factorizable=fa,
    )
    return rep


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def abelian_groups(order: int) -> list[list[int]]:
    """Invariant factors n_1 | n_2 | ... of every abelian group of the given order."""
    from flint import fmpz

    per_prime = []
    for p, e in sorted(fmpz(order).factor()):
        p, e = int(p), int(e)
        per_prime.append([[p ** k for k in part] for part in _partitions(e)])
    out = []
    for choice in product(*per_prime):
        width = max((len(c) for c in choice), default=0)
        factors = [1] * width
        for c in choice:
            for i, q in enumerate(c):
                factors[width - 1 - i] *= q
        out.append(factors if factors else [1])
    return sorted(out)


def bicharacter_samples(factors) -> list[Bicharacter]:
    """A fixed family of bicharacters on Z/n_1 x ... x Z/n_k.

    Entry (i, j) must be a multiple of L / gcd(n_i, n_j), L = lcm(n); we take
    the trivial form, the diagonal form, and two skewed multiples.
    """
    import math

    G = FinAbGroup(factors)
    L = math.lcm(*G.factors)
    k = len(G.factors)
    unit = [[L // math.gcd(G.factors[i], G.factors[j]) for j in range(k)] for i in range(k)]
    patterns = [
        lambda i, j: 0,
        lambda i, j: 1 if i == j else 0,
        lambda i, j: i + 2 * j + 1,
        lambda i, j: (3 * i + j + 2) if i <= j else 0,
    ]
    out, seen = [], set()
    for f in patterns:
        E = [[(unit[i][j] * f(i, j)) % L for j in range(k)] for i in range(k)]
        key = str(E)
        if key not in seen:
            seen.add(key)
            out.append(Bicharacter(G, E, L))
    return out
