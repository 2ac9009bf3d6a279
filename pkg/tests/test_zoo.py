import pytest

from hopfkit.hopf import (
    change_basis,
    coopposite,
    is_grouplike,
    s_squared,
    same_structure,
    verify_hopf,
)
from hopfkit.linalg import Mat
from hopfkit.qt import (
    QTStructure,
    drinfeld_map_matrix,
    is_factorizable,
    monodromy,
    omega_rank,
    theorem1_crosscheck,
    verify_qt,
)
from hopfkit.linalg import rank
from hopfkit.scalar import Cyc, root_of_unity
from hopfkit.yd import ground_field, nichols_truncated_line
from hopfkit.zoo import (
    DescriptorError,
    IncompatibleExponents,
    NotPrimitiveRoot,
    bosonization,
    build,
    drinfeld_double,
    group_algebra,
    group_algebra_with_bicharacter,
    parse_descriptor,
    small_quantum_sl2,
    taft,
    zoo_members,
)


def _flip(R):
    return {(j, i): c for (i, j), c in R.items()}


# -- Sweedler and Taft ----------------------------------------------------------

def test_sweedler_shape(sw):
    assert sw.H.dim == 4
    assert sw.H.labels == ("1", "g", "x", "gx")
    assert _flip(sw.R) == sw.R
    S2 = s_squared(sw.H)
    n = sw.H.dim
    assert S2 != Mat.identity(n, sw.L)
    assert S2 @ S2 == Mat.identity(n, sw.L)


def test_taft3(taft3):
    assert taft3.dim == 9
    assert verify_hopf(taft3, full=True).ok
    g = {taft3.index("g"): Cyc.one(taft3.L)}
    assert is_grouplike(taft3, g)
    assert g in taft3.grouplikes


def test_taft_rejects_non_primitive():
    with pytest.raises(NotPrimitiveRoot):
        taft(3, 1)
    with pytest.raises(NotPrimitiveRoot):
        taft(4, root_of_unity(4, 2))
    with pytest.raises(NotPrimitiveRoot):
        taft(1, 1)


# -- bicharacter group algebras --------------------------------------------------

def test_super_vector_spaces():
    QT = group_algebra_with_bicharacter([2], [[1]], 2)
    assert verify_qt(QT).ok
    assert monodromy(QT) == {(0, 0): Cyc.one(QT.L)}


def test_z5_factorizable():
    QT = group_algebra_with_bicharacter([5], [[2]], 5)
    assert is_factorizable(QT)


def test_z4_i():
    QT = group_algebra_with_bicharacter([4], [[1]], 4)
    assert not is_factorizable(QT)
    assert omega_rank(QT) == 2


def test_idempotents_normalized():
    # (eps (x) id) R = 1 only holds with the 1/|Gamma| normalization
    QT = group_algebra_with_bicharacter([3], [[1]], 3)
    H = QT.H
    out = {}
    for (i, j), c in QT.R.items():
        out[j] = out.get(j, Cyc.zero(H.L)) + H.counit[i] * c
    assert {k: v for k, v in out.items() if v} == H.one()


def test_incompatible_exponents():
    with pytest.raises(IncompatibleExponents):
        group_algebra_with_bicharacter([4], [[1]], 3)
    with pytest.raises(IncompatibleExponents):
        group_algebra_with_bicharacter([2, 2], [[1]], 2)


# -- doubles ------------------------------------------------------------------------

def test_double_of_z2():
    D = drinfeld_double(group_algebra(2))
    assert D.H.dim == 4
    assert len(D.H.grouplikes) == 4
    assert all(is_grouplike(D.H, g) for g in D.H.grouplikes)
    assert verify_qt(D).ok and is_factorizable(D)


def test_double_sweedler(members):
    D = members["double:sweedler"]
    assert D.H.dim == 16
    assert verify_hopf(D.H).ok and verify_qt(D).ok
    assert rank(drinfeld_map_matrix(D)) == 16


def test_double_taft3(dtaft3):
    assert dtaft3.H.dim == 81
    assert verify_hopf(dtaft3.H).ok and verify_qt(dtaft3).ok
    d = theorem1_crosscheck(dtaft3).data
    assert d["factorizable"] and d["muger_trivial"]


def test_double_variant_b_fails(sw, taft3):
    for H in (sw.H, taft3):
        D = drinfeld_double(H, variant="B")
        rep = verify_hopf(D.H)
        rep.merge(verify_qt(D), prefix="qt.")
        assert not rep.ok


# -- bosonization ---------------------------------------------------------------------

def _relabeled(Bo, N):
    """Bo in the basis (g^-1 x)^a (g^-1)^b."""
    one = Cyc.one(Bo.L)
    ginv = {Bo.index("g^%d" % (N - 1) if N > 2 else "g"): one}
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
    return vecs


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_bosonization_truncated_line(N):
    QT = group_algebra_with_bicharacter([N], [[1]], N)
    B = nichols_truncated_line(N, QT)
    Bo = bosonization(B, QT)
    assert Bo.dim == B.dim * QT.H.dim
    assert verify_hopf(Bo).ok
    z = root_of_unity(N, 1)
    assert same_structure(coopposite(Bo), taft(N, z))
    Ti = taft(N, z ** (N - 1))
    assert same_structure(change_basis(Bo, _relabeled(Bo, N), Ti.labels), Ti)


def test_bosonization_ground_field(sw):
    Bo = bosonization(ground_field(sw), sw)
    assert same_structure(Bo, sw.H)


# -- small quantum sl2 ---------------------------------------------------------------

def test_uqsl2_3():
    U = small_quantum_sl2(3)
    assert U.H.dim == 27 == 3 * 3 ** 2
    assert verify_hopf(U.H).ok and verify_qt(U).ok
    assert rank(drinfeld_map_matrix(U)) == 27
    d = theorem1_crosscheck(U).data
    assert d["consistent"] and d["factorizable"]


def test_uqsl2_3_routes_agree():
    A = small_quantum_sl2(3, "quotient")
    B = small_quantum_sl2(3, "presentation")
    for U in (A, B):
        d = theorem1_crosscheck(U).data
        assert (d["factorizable"], d["weakly_factorizable"], d["muger_trivial"]) == (True,) * 3
    da, db = theorem1_crosscheck(A).data, theorem1_crosscheck(B).data
    for k in ("omega_rank", "dim_cf", "dim_ce", "dim_xi"):
        assert da[k] == db[k]


@pytest.mark.slow
def test_uqsl2_5():
    U = small_quantum_sl2(5)
    assert U.H.dim == 125
    assert verify_hopf(U.H).ok and verify_qt(U).ok
    assert rank(drinfeld_map_matrix(U)) == 125


def test_uqsl2_rejects_even():
    with pytest.raises(ValueError):
        small_quantum_sl2(4)


# -- descriptors ------------------------------------------------------------------------

def test_descriptors():
    assert parse_descriptor("sweedler") == ("sweedler", {})
    assert parse_descriptor("taft:3,1") == ("taft", {"N": 3, "qexp": 1})
    name, p = parse_descriptor("gbichar:12x3:1,0,0,4:12")
    assert name == "gbichar" and p["E"] == [[1, 0], [0, 4]] and p["factors"] == [12, 3]
    assert parse_descriptor("double:taft:3,1") == ("double", {"inner": "taft:3,1"})
    for bad in ("", "taft", "gbichar:4:1,2:4", "uqsl2:x", "double"):
        with pytest.raises(DescriptorError):
            parse_descriptor(bad)


def test_build_tags_descriptor(members):
    for d, QT in members.items():
        assert isinstance(QT, QTStructure)
        assert QT.H.metadata["descriptor"] == d


def test_zoo_list():
    small = zoo_members(include_large=False)
    assert "double:taft:3,1" in zoo_members() and "double:taft:3,1" not in small
    assert "sweedler" in small and "uqsl2:3" in small
    assert isinstance(build("taft:3,1"), type(taft(3, root_of_unity(3, 1))))
