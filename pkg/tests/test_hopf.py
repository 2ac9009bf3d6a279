import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfkit.hopf import (
    NotHopfIdeal,
    center_basis,
    change_basis,
    class_functions_basis,
    coopposite,
    dual,
    hopf_quotient,
    ideal_closure,
    is_grouplike,
    same_structure,
    s_squared,
    verify_hopf,
)
from hopfkit.linalg import Subspace, inverse
from hopfkit.scalar import Cyc, root_of_unity
from hopfkit.zoo import group_algebra, taft

from mutations import mutate_mult, rebuild


def vec(H, **coeffs):
    return {H.index(k): Cyc.rational(v, H.L) for k, v in coeffs.items()}


def test_sweedler_passes(sw):
    rep = verify_hopf(sw.H, full=True)
    assert rep.ok
    assert set(rep.checks) >= {
        "associativity", "unit", "coassociativity", "counit",
        "comult_multiplicative", "counit_multiplicative",
        "antipode_left", "antipode_right", "antipode_invertible",
    }


def test_taft2_is_sweedler(sw):
    T = taft(2, -1)
    assert verify_hopf(T).ok
    # taft is written in x^a g^b, sweedler in g^b x^a; xg = -gx
    S = change_basis(T, [vec(T, **{"1": 1}), vec(T, g=1), vec(T, x=1), vec(T, xg=-1)], labels=sw.H.labels)
    assert same_structure(S, sw.H)


def test_mult_mutation_caught(sw):
    bad = mutate_mult(sw.H, 2, 1, 0)
    rep = verify_hopf(bad)
    assert not rep["associativity"].ok
    assert rep["associativity"].witness is not None


def test_printed_antipode_sign_is_wrong(sw):
    # with Delta(x) = x(x)g + 1(x)x the antipode must send x to gx; -gx breaks m(S(x)id)Delta = u eps
    H = sw.H
    bad = rebuild(H, antipode=lambda s: s.__setitem__(2, vec(H, gx=-1)))
    rep = verify_hopf(bad)
    assert not (rep["antipode_left"].ok and rep["antipode_right"].ok)
    assert H.S(vec(H, x=1)) == vec(H, gx=1)


def test_dual_of_group_algebra_is_function_algebra():
    D = dual(group_algebra(3))
    assert verify_hopf(D).ok
    for i in range(3):
        for j in range(3):
            assert D.basis_mul(i, j) == ({i: Cyc.one(D.L)} if i == j else {})


def test_dual_properties(members, sw):
    D = dual(sw.H)
    assert verify_hopf(D).ok
    assert same_structure(dual(D), sw.H)
    for QT in members.values():
        H = QT.H
        assert dual(H).dim == H.dim


def test_center_dimensions(sw, taft3):
    assert center_basis(sw.H).dim == 1
    assert center_basis(sw.H).contains(sw.H.one())
    assert center_basis(group_algebra(5)).dim == 5
    assert center_basis(taft3).dim == 1


def test_center_commutes(members):
    for QT in members.values():
        H = QT.H
        for z in center_basis(H).basis:
            for i in range(H.dim):
                b = {i: Cyc.one(H.L)}
                assert H.mul(z, b) == H.mul(b, z)


def test_class_functions(sw, taft3):
    H = sw.H
    CF = class_functions_basis(H)
    assert CF.dim == 2
    eps = {i: c for i, c in enumerate(H.counit) if c}
    alpha = vec(H, **{"1": 1, "g": -1})
    assert CF.contains(eps) and CF.contains(alpha)
    for N in (2, 3, 5):
        assert class_functions_basis(group_algebra(N)).dim == N
    # checked against the definition f(ba) = f(a S^2(b)) on all pairs
    H = taft3
    S2 = s_squared(H)
    for f in class_functions_basis(H).basis:
        for i in range(H.dim):
            for j in range(H.dim):
                a, b = {j: Cyc.one(H.L)}, {i: Cyc.one(H.L)}
                lhs = H.mul(b, a)
                rhs = H.mul(a, S2.apply(b))
                val = lambda v: sum((f.get(k, Cyc.zero(H.L)) * c for k, c in v.items()), Cyc.zero(H.L))  # noqa: E731
                assert val(lhs) == val(rhs)


def test_class_functions_contain_counit(members):
    for QT in members.values():
        H = QT.H
        eps = {i: c for i, c in enumerate(H.counit) if c}
        assert class_functions_basis(H).contains(eps)


def test_s_squared_on_sweedler(sw):
    H = sw.H
    S2 = s_squared(H)
    assert S2.apply(vec(H, x=1)) == vec(H, x=-1)
    assert S2.apply(vec(H, g=1)) == vec(H, g=1)


def test_grouplikes(sw, members):
    H = sw.H
    assert is_grouplike(H, vec(H, g=1))
    assert not is_grouplike(H, vec(H, x=1))
    for QT in members.values():
        for v in QT.H.grouplikes:
            assert is_grouplike(QT.H, v)


def test_ideal_closure_examples(sw):
    H = sw.H
    assert ideal_closure(H, [{}]).dim == 0
    I = ideal_closure(H, [vec(H, x=1)])
    assert I == Subspace(4, [vec(H, x=1), vec(H, gx=1)])
    assert ideal_closure(H, [H.one()]).dim == 4


def test_ideal_closure_idempotent_and_monotone(taft3):
    H = taft3
    x = {H.index("x"): Cyc.one(H.L)}
    I = ideal_closure(H, [x])
    assert ideal_closure(H, I.basis) == I
    g1 = {H.index("g"): Cyc.one(H.L), 0: -Cyc.one(H.L)}
    J = ideal_closure(H, [x, g1])
    assert all(J.contains(v) for v in I.basis)


def test_quotient_of_z4():
    H = group_algebra(4)
    g2 = {H.index("g^2"): Cyc.one(H.L), 0: -Cyc.one(H.L)}
    Q = hopf_quotient(H, ideal_closure(H, [g2]))
    assert verify_hopf(Q).ok
    Z2 = group_algebra(2)
    assert Q.labels == Z2.labels
    assert same_structure(Q, Z2)


def test_trivial_quotient(sw):
    Q = hopf_quotient(sw.H, Subspace(4, [], 1))
    assert same_structure(Q, sw.H)


def test_quotient_is_bialgebra_map():
    H = group_algebra(6)
    g3 = {H.index("g^3"): Cyc.one(H.L), 0: -Cyc.one(H.L)}
    Q = hopf_quotient(H, ideal_closure(H, [g3]))
    pi = Q.metadata["projection"]
    for i in range(H.dim):
        for j in range(H.dim):
            assert pi(H.basis_mul(i, j)) == Q.mul(pi({i: Cyc.one(H.L)}), pi({j: Cyc.one(H.L)}))


def test_not_hopf_ideal(sw):
    H = sw.H
    g1 = vec(H, g=1, **{"1": 1})
    with pytest.raises(NotHopfIdeal) as e:
        hopf_quotient(H, ideal_closure(H, [g1]))
    assert e.value.which_condition == "counit_vanishes"


def test_every_member_is_hopf(members):
    for d, QT in members.items():
        H = QT.H
        assert verify_hopf(H).ok, d
        assert inverse(H.antipode) is not None
        assert H.eps(H.one()) == 1


def test_coopposite(sw, taft3):
    for H in (sw.H, taft3):
        C = coopposite(H)
        assert verify_hopf(C).ok
        assert same_structure(coopposite(C), H)


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 7), st.data())
def test_taft_family(N, data):
    k = data.draw(st.sampled_from([k for k in range(1, N) if __import__("math").gcd(k, N) == 1]))
    T = taft(N, root_of_unity(N, k))
    assert verify_hopf(T).ok
    assert T.dim == N * N
    assert center_basis(T).dim >= 1
