"""Acceptance criteria 1-9, each at its stated tolerance and time bound.

Every test prints one ``criterion N: PASS|FAIL`` line (also repeated in the
terminal summary).  Tolerances are all exact: no floating point anywhere.
"""

import math
import time
from contextlib import contextmanager

import pytest

from hopfkit.hopf import center_basis, class_functions_basis, verify_hopf
from hopfkit.linalg import rank
from hopfkit.pointed import (
    Bicharacter,
    FinAbGroup,
    abelian_groups,
    bicharacter_samples,
    check_centralizer_identities,
    pointed_vs_hopf_crosscheck,
    sl2_bicharacter,
    symmetric_form,
)
from hopfkit.qt import (
    check_rank_bound,
    drinfeld_map_matrix,
    is_factorizable,
    is_muger_trivial,
    monodromy,
    omega_rank,
    theorem1_crosscheck,
    transparency_ideal,
    verify_qt,
    xi_basis,
)
from hopfkit.scalar import Cyc
from hopfkit.yd import (
    HModule,
    adjoint_yd_P,
    check_braiding_identities,
    coadjoint_yd_Q,
    nichols_truncated_line,
    regular_yd,
    trivial_yd_embed,
    verify_hexagons,
    verify_yd_module,
    yd_muger_membership,
)
from hopfkit.zoo import build, small_quantum_sl2, sweedler, zoo_members

from mutations import detected, mutation_set

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(n: int, title: str, capsys, limit: float | None = None):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        if ok and limit is not None and dt > limit:
            ok = False
            title += f" (over the {limit:g}s bound)"
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  [{dt:6.1f}s]  {title}"
        RESULTS[n] = line
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def one_one(H):
    return {(0, 0): Cyc.one(H.L)}


# 1 ----------------------------------------------------------------------------------

def test_criterion_1_sweedler(capsys):
    with criterion(1, "Sweedler: CF=2, CE=1, Omega onto not 1-1, Mueger nontrivial, Xi=1", capsys, 1.0):
        sw = sweedler()
        H = sw.H
        CF, CE = class_functions_basis(H), center_basis(H)
        assert CF.dim == 2 and CE.dim == 1
        eps = {i: c for i, c in enumerate(H.counit) if c}
        alpha = {H.index("1"): Cyc.one(), H.index("g"): -Cyc.one()}
        assert CF.contains(eps) and CF.contains(alpha)
        r = omega_rank(sw)
        assert r == 1 == CE.dim and r < CF.dim
        assert not is_factorizable(sw)
        assert transparency_ideal(sw).dim == 0 and not is_muger_trivial(sw)
        assert xi_basis(sw).dim == 1 == r


# 2 ----------------------------------------------------------------------------------

def test_criterion_2_three_way_consistency(capsys):
    with criterion(2, "factorizable = weakly factorizable = Mueger-trivial on every zoo member", capsys, 300):
        for d in zoo_members(include_large=True):
            QT = build(d)
            axioms = verify_hopf(QT.H)
            axioms.merge(verify_qt(QT), prefix="qt.")
            assert axioms.ok, d
            rep = theorem1_crosscheck(QT, axioms)
            assert rep.ok and rep.data["consistent"], (d, rep.data)


# 3 ----------------------------------------------------------------------------------

def test_criterion_3_doubles_factorizable(capsys):
    with criterion(3, "Drinfeld-map rank 16 for D(sweedler), 81 for D(taft 3)", capsys):
        for d, n in (("double:sweedler", 16), ("double:taft:3,1", 81)):
            QT = build(d)
            assert QT.H.dim == n
            assert rank(drinfeld_map_matrix(QT)) == n, d


# 4 ----------------------------------------------------------------------------------

def test_criterion_4_small_quantum_group(capsys):
    with criterion(4, "uqsl2:3 dim 27 factorizable; uqsl2:5 dim 125 passes verify_qt", capsys):
        U3 = small_quantum_sl2(3)
        assert U3.H.dim == 27 == 3 * 3 ** 2
        assert verify_qt(U3).ok and is_factorizable(U3)
        U5 = small_quantum_sl2(5)
        assert U5.H.dim == 125 == 5 * 5 ** 2
        assert verify_hopf(U5.H).ok and verify_qt(U5).ok
        assert is_factorizable(U5)


# 5 ----------------------------------------------------------------------------------

def _sweep_forms():
    for order in range(1, 201):
        for factors in abelian_groups(order):
            for chi in bicharacter_samples(factors):
                yield chi
    yield Bicharacter(FinAbGroup([4]), [[1]], 4)
    yield Bicharacter(FinAbGroup([12, 3]), [[1, 0], [0, 4]], 12)
    yield Bicharacter(FinAbGroup([12, 3]), [[1, 4], [4, 8]], 12)
    yield Bicharacter(FinAbGroup([15]), [[5]], 15)
    yield sl2_bicharacter(15)


def test_criterion_5_centralizer_identities(capsys):
    with criterion(5, "FPdim and double-centralizer identities on every subgroup, |Gamma| <= 200", capsys, 120):
        forms = subgroups = 0
        bad = []
        for chi in _sweep_forms():
            rep = check_centralizer_identities(symmetric_form(chi))
            forms += 1
            subgroups += rep.data["subgroups_checked"]
            if not rep.ok:
                bad.append(repr(chi))
        with capsys.disabled():
            print(f"\n  {forms} forms, {subgroups} subgroups, {len(bad)} with violations")
        assert not bad, bad[:5]


# 6 ----------------------------------------------------------------------------------

def test_criterion_6_pointed_hopf_bridge(capsys):
    with criterion(6, "pointed omega rank / radical = Hopf omega rank / Mueger center, |Gamma| <= 36", capsys):
        n = 0
        bad = []
        for order in range(1, 37):
            for factors in abelian_groups(order):
                for chi in bicharacter_samples(factors):
                    n += 1
                    if not pointed_vs_hopf_crosscheck(chi).ok:
                        bad.append(repr(chi))
        with capsys.disabled():
            print(f"\n  {n} bicharacters compared")
        assert not bad, bad[:5]


# 7 ----------------------------------------------------------------------------------

def test_criterion_7_yd_suite(capsys):
    with criterion(7, "YD suite over the truncated line of order 3", capsys, 60):
        B = nichols_truncated_line(3)
        P, Q = adjoint_yd_P(B), coadjoint_yd_Q(B)
        T = trivial_yd_embed(HModule.trivial(B.qt.H), B)
        REG = regular_yd(B)
        assert verify_yd_module(P, B).ok and verify_yd_module(Q, B).ok
        for M in (P, Q, T, REG):
            assert check_braiding_identities(M, B).ok, M.name
        assert verify_hexagons(B.qt, B, [(P, Q, P)]).ok
        assert yd_muger_membership(T, B)
        assert not yd_muger_membership(P, B) and not yd_muger_membership(Q, B)


# 8 ----------------------------------------------------------------------------------

def test_criterion_8_symmetric_invariants(capsys):
    with criterion(8, "symmetric members: rank 1, I = 0; rank Omega <= dim Xi everywhere", capsys):
        symmetric = []
        for d in zoo_members(include_large=True):
            QT = build(d)
            rep = check_rank_bound(QT)
            assert rep.ok, d
            sym = monodromy(QT) == one_one(QT.H)
            if sym:
                symmetric.append(d)
                assert omega_rank(QT) == 1, d
                assert transparency_ideal(QT).dim == 0, d
            if sym or is_factorizable(QT):
                assert rep.data["equality"], d
        assert set(symmetric) == {"sweedler", "gbichar:2:1:2", "gbichar:3:0:3"}


# 9 ----------------------------------------------------------------------------------

def test_criterion_9_mutation_sensitivity(capsys):
    with criterion(9, "every shipped single-entry mutation detected with a witness", capsys):
        by_family: dict[str, list[int]] = {}
        for fam, _, run in mutation_set():
            hits = by_family.setdefault(fam, [0, 0])
            hits[1] += 1
            hits[0] += detected(run())
        with capsys.disabled():
            print("\n  " + ", ".join(f"{f} {h}/{t}" for f, (h, t) in by_family.items()))
        assert set(by_family) == {"associativity", "coassociativity", "qt_hexagon", "yd_condition"}
        assert all(h == t for h, t in by_family.values())
