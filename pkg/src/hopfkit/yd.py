"""Braided Hopf algebras in Rep(H) and Yetter-Drinfeld modules over them.

Everything here is a matrix: a map X (x) Y -> Z is a Mat with dim Z rows
and dim X * dim Y columns, flat index i * dim Y + j.  The braiding of
Rep(H, R) is pinned as

    sigma_{X,Y}(x (x) y) = sum R2.y (x) R1.x.

For a braided Hopf algebra B in Rep(H), a (right-right) YD module is
(M, act: M(x)B -> M, coact: M -> M(x)B) satisfying the YD condition

    (id_M(x)m)(sigma_{B,M}(x)id_B)(id_B(x)(coact o act))(sigma_{M,B}(x)id_B)(id_M(x)Delta)
        = (act(x)m)(id_M(x)sigma_{B,B}(x)id_B)(coact(x)Delta),

and the braiding on YD modules is

    Sigma_{M,N} = (id_N (x) act_M)(sigma_{M,N} (x) id_B)(id_M (x) coact_N).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hopf import HopfAlgebra, StructTensor, algebra_generators
from .linalg import Echelon, Mat, inverse, kron
from .qt import NotARepresentation, QTStructure, check_representation, is_transparent_module
from .report import Report
from .scalar import Cyc, as_cyc, lift, root_of_unity

__all__ = [
    "HModule",
    "BraidedHopfAlgebra",
    "YDModule",
    "BraidedAxiomFailure",
    "SingularBraiding",
    "NotTransparent",
    "braiding_of_C",
    "module_maps",
    "verify_braided_hopf",
    "ground_field",
    "nichols_truncated_line",
    "verify_yd_module",
    "yd_braiding",
    "yd_braiding_inverse",
    "yd_tensor",
    "yd_morphisms",
    "adjoint_yd_P",
    "coadjoint_yd_Q",
    "regular_yd",
    "trivial_yd_embed",
    "yd_muger_membership",
    "yd_muger_witness",
    "check_braiding_identities",
    "verify_hexagons",
]


class BraidedAxiomFailure(ValueError):
    def __init__(self, report: Report):
        self.report = report
        names = ", ".join(c.name for c in report.failures)
        super().__init__(f"braided Hopf algebra axioms fail: {names}")


class SingularBraiding(RuntimeError):
    pass


class NotTransparent(ValueError):
    pass


# -- modules -------------------------------------------------------------------

class HModule:
    """A left H-module given by one matrix per basis element of H."""

    def __init__(self, H: HopfAlgebra, rho: list[Mat], name: str = ""):
        self.H = H
        self.rho = list(rho)
        self.dim = rho[0].nrows if rho else 0
        self.name = name

    @property
    def L(self) -> int:
        return self.H.L

    def act(self, h: dict) -> Mat:
        M = Mat.zeros(self.dim, self.dim, self.L)
        for i, c in h.items():
            M = M + self.rho[i].scale(c)
        return M

    def check(self) -> None:
        check_representation(self.H, self.rho)

    @classmethod
    def trivial(cls, H: HopfAlgebra) -> "HModule":
        return cls(H, [Mat(1, 1, [{0: e} if e else {}], H.L) for e in H._eps], "trivial")

    @classmethod
    def character(cls, H: HopfAlgebra, values, name: str = "") -> "HModule":
        """One-dimensional module b_i -> values[i]."""
        vals = [as_cyc(v, H.L) for v in values]
        return cls(H, [Mat(1, 1, [{0: v} if v else {}], H.L) for v in vals], name)

    @classmethod
    def regular(cls, H: HopfAlgebra) -> "HModule":
        n = H.dim
        rho = []
        for i in range(n):
            cols = [H.basis_mul(i, j) for j in range(n)]
            rho.append(Mat.from_columns(cols, n, H.L))
        return cls(H, rho, "regular")

    def tensor(self, other: "HModule") -> "HModule":
        H = self.H
        rho = []
        for i in range(H.dim):
            M = Mat.zeros(self.dim * other.dim, self.dim * other.dim, H.L)
            for (j, k), c in H._d[i].items():
                M = M + kron(self.rho[j], other.rho[k]).scale(c)
            rho.append(M)
        return HModule(H, rho, f"({self.name}(x){other.name})")

    def __repr__(self):
        return f"HModule({self.name!r}, dim={self.dim})"


def _eye(n: int, L: int) -> Mat:
    return Mat.identity(n, L)


def flip(m: int, n: int, L: int) -> Mat:
    """X (x) Y -> Y (x) X for dim X = m, dim Y = n."""
    rows = [{} for _ in range(m * n)]
    one = Cyc.one(L)
    for i in range(m):
        for j in range(n):
            rows[j * m + i][i * n + j] = one
    return Mat(m * n, m * n, rows, L)


def braiding_of_C(QT: QTStructure, X: HModule, Y: HModule) -> Mat:
    """sigma_{X,Y} = flip o (rho_X (x) rho_Y)(R)."""
    L = QT.L
    M = Mat.zeros(X.dim * Y.dim, X.dim * Y.dim, L)
    for (i, j), c in QT.R.items():
        M = M + kron(X.rho[i], Y.rho[j]).scale(c)
    return flip(X.dim, Y.dim, L) @ M


def _solve_linear_maps(dout: int, din: int, L: int, constraints) -> list[Mat]:
    """Basis of {F : dout x din | c(F) = 0 for every linear c in constraints}."""
    n = dout * din
    ech = Echelon(n)
    images = []
    one = Cyc.one(L)
    for k in range(n):
        r, c = divmod(k, din)
        E = Mat(dout, din, [{c: one} if i == r else {} for i in range(dout)], L)
        images.append([con(E) for con in constraints])
    ncons = len(constraints)
    for t in range(ncons):
        shape = images[0][t].shape if n else (0, 0)
        for a in range(shape[0]):
            for b in range(shape[1]):
                row = {}
                for k in range(n):
                    v = images[k][t].rows[a].get(b)
                    if v:
                        row[k] = v
                if row:
                    ech.add(row)
    out = []
    for vec in ech.annihilator(L):
        rows = [{} for _ in range(dout)]
        for k, v in vec.items():
            r, c = divmod(k, din)
            rows[r][c] = v
        out.append(Mat(dout, din, rows, L))
    return out


def module_maps(X: HModule, Y: HModule) -> list[Mat]:
    """Basis of Hom_H(X, Y)."""
    gens = algebra_generators(X.H)
    cons = [lambda F, g=g: F @ X.act(g) - Y.act(g) @ F for g in gens]
    return _solve_linear_maps(Y.dim, X.dim, X.L, cons)


# -- braided Hopf algebras ---------------------------------------------------------

class BraidedHopfAlgebra:
    """A Hopf algebra in Rep(H): all structure maps are matrices.

    ``m``: B(x)B -> B, ``u``: k -> B, ``Delta``: B -> B(x)B, ``eps``: B -> k,
    ``S``: B -> B.
    """

    def __init__(self, carrier: HModule, m: Mat, u: Mat, Delta: Mat, eps: Mat, S: Mat,
                 labels=None, name: str = "", qt: QTStructure | None = None):
        self.carrier = carrier
        self.dim = carrier.dim
        self.m = m
        self.u = u
        self.Delta = Delta
        self.eps = eps
        self.S = S
        self.labels = list(labels or [f"v{i}" for i in range(self.dim)])
        self.name = name
        self.qt = qt

    @property
    def L(self) -> int:
        return self.carrier.L

    # views used by the bosonization and the serializer
    @property
    def m_cols(self) -> list[dict]:
        return self.m.columns()

    @property
    def d_cols(self) -> list[dict]:
        n = self.dim
        return [{divmod(k, n): c for k, c in col.items()} for col in self.Delta.columns()]

    @property
    def unit_vec(self) -> dict:
        return self.u.column(0)

    @property
    def eps_vec(self) -> dict:
        return dict(self.eps.rows[0])

    @property
    def S_mat(self) -> Mat:
        return self.S

    @property
    def mult(self) -> StructTensor:
        n = self.dim
        e = {}
        for k, row in enumerate(self.m.rows):
            for col, c in row.items():
                i, j = divmod(col, n)
                e[(i, j, k)] = c
        return StructTensor(n, e, self.L)

    @property
    def comult(self) -> StructTensor:
        n = self.dim
        e = {}
        for r, row in enumerate(self.Delta.rows):
            j, k = divmod(r, n)
            for i, c in row.items():
                e[(i, j, k)] = c
        return StructTensor(n, e, self.L)

    def __repr__(self):
        return f"BraidedHopfAlgebra({self.name!r}, dim={self.dim})"


def _qt_of(B, QT):
    QT = QT or B.qt
    if QT is None:
        raise ValueError("no QTStructure given and none attached to B")
    return QT


def _first_diff(A: Mat, B: Mat):
    d = A.first_difference(B)
    return None if d is None else d[:2]


def verify_braided_hopf(B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> Report:
    QT = _qt_of(B, QT)
    L = QT.L
    n = B.dim
    I = _eye(n, L)
    X = B.carrier
    rep = Report(title=f"braided Hopf axioms for {B!r}")
    try:
        X.check()
        rep.add("representation", True)
    except NotARepresentation as e:
        rep.add("representation", False, str(e))
        return rep
    XX = X.tensor(X)
    H = QT.H
    witness = None
    for g in algebra_generators(H):
        rg, rgg = X.act(g), XX.act(g)
        e = H.eps(g)
        pairs = [
            ("m", B.m @ rgg, rg @ B.m),
            ("Delta", B.Delta @ rg, rgg @ B.Delta),
            ("u", rg @ B.u, B.u.scale(e)),
            ("eps", B.eps @ rg, B.eps.scale(e)),
            ("S", B.S @ rg, rg @ B.S),
        ]
        for name, a, b in pairs:
            if a != b:
                witness = (name, H.format(g))
                break
        if witness:
            break
    rep.add("h_linear", witness is None, witness)

    m, u, D, eps, S = B.m, B.u, B.Delta, B.eps, B.S
    left, right = m @ kron(m, I), m @ kron(I, m)
    rep.add("associativity", left == right, _first_diff(left, right))
    w = _first_diff(m @ kron(u, I), I) or _first_diff(m @ kron(I, u), I)
    rep.add("unit", w is None, w)
    left, right = kron(D, I) @ D, kron(I, D) @ D
    rep.add("coassociativity", left == right, _first_diff(left, right))
    w = _first_diff(kron(eps, I) @ D, I) or _first_diff(kron(I, eps) @ D, I)
    rep.add("counit", w is None, w)
    sBB = braiding_of_C(QT, X, X)
    left = D @ m
    right = kron(m, m) @ kron(kron(I, sBB), I) @ kron(D, D)
    rep.add("bialgebra", left == right, _first_diff(left, right))
    one1 = _eye(1, L)
    w = next(
        (name for name, a, b in (("Delta u", D @ u, kron(u, u)), ("eps m", eps @ m, kron(eps, eps)),
                                 ("eps u", eps @ u, one1)) if a != b),
        None,
    )
    rep.add("unit_counit_compat", w is None, w)
    ue = u @ eps
    left, right = m @ kron(S, I) @ D, m @ kron(I, S) @ D
    rep.add("antipode_left", left == ue, _first_diff(left, ue))
    rep.add("antipode_right", right == ue, _first_diff(right, ue))
    rep.add("antipode_invertible", inverse(S) is not None)
    return rep


def ground_field(QT: QTStructure) -> BraidedHopfAlgebra:
    """The unit object k as a braided Hopf algebra."""
    L = QT.L
    one = _eye(1, L)
    return BraidedHopfAlgebra(HModule.trivial(QT.H), one, one, one, one, one, ["1"], "k", QT)


def _qint(n: int, q: Cyc) -> Cyc:
    acc = Cyc.zero(q.L)
    for k in range(n):
        acc = acc + q ** k
    return acc


def _qbinom(n: int, k: int, q: Cyc) -> Cyc:
    num = Cyc.one(q.L)
    den = Cyc.one(q.L)
    for t in range(k):
        num = num * _qint(n - t, q)
        den = den * _qint(t + 1, q)
    return num / den


def nichols_truncated_line(N: int, QT: QTStructure | None = None) -> BraidedHopfAlgebra:
    """k[x]/(x^N) in Rep(k[Z/N], chi), x of degree g, Delta x = x(x)1 + 1(x)x.

    The default base is chi(g, g) = zeta_N.  g^i acts on x^n by
    zeta_N^(i n), and the self-braiding of x is q = chi(g, g).
    """
    from .zoo import NotPrimitiveRoot, group_algebra_with_bicharacter, is_primitive_root

    if QT is None:
        QT = group_algebra_with_bicharacter([N], [[1 if N > 1 else 0]], max(N, 1))
    H = QT.H
    if H.metadata.get("group") != [N]:
        raise ValueError(f"base must be the group algebra of Z/{N}")
    L = H.L
    E = H.metadata["chi_exponents"][0][0]
    q = lift(root_of_unity(H.metadata["chi_L"], E), L)
    if not is_primitive_root(q, N):
        raise NotPrimitiveRoot(f"chi(g,g) = {q} is not a primitive {N}-th root of unity")
    zN = root_of_unity(L, L // N)
    one = Cyc.one(L)
    rho = []
    for i in range(N):
        rho.append(Mat(N, N, [{k: zN ** (i * k)} for k in range(N)], L))
    carrier = HModule(H, rho, "B")
    m_rows = [{} for _ in range(N)]
    for a in range(N):
        for b in range(N):
            if a + b < N:
                m_rows[a + b][a * N + b] = one
    m = Mat(N, N * N, m_rows, L)
    u = Mat(N, 1, [{0: one}] + [{} for _ in range(N - 1)], L)
    D_rows = [{} for _ in range(N * N)]
    for n in range(N):
        for k in range(n + 1):
            c = _qbinom(n, k, q)
            if c:
                D_rows[k * N + (n - k)][n] = c
    Delta = Mat(N * N, N, D_rows, L)
    eps = Mat(1, N, [{0: one}], L)
    S = Mat(N, N, [{n: (-1) ** n * q ** (n * (n - 1) // 2)} for n in range(N)], L)
    labels = ["1" if n == 0 else ("x" if n == 1 else f"x^{n}") for n in range(N)]
    return BraidedHopfAlgebra(carrier, m, u, Delta, eps, S, labels, f"B(V) N={N}", QT)


# -- YD modules ------------------------------------------------------------------------

@dataclass
class YDModule:
    carrier: HModule
    act: Mat
    coact: Mat
    name: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def __repr__(self):
        return f"YDModule({self.name!r}, dim={self.dim})"


def verify_yd_module(M: YDModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> Report:
    QT = _qt_of(B, QT)
    L = QT.L
    n, d = B.dim, M.dim
    IB, IM = _eye(n, L), _eye(d, L)
    rep = Report(title=f"YD module axioms for {M!r}")
    try:
        M.carrier.check()
        rep.add("representation", True)
    except NotARepresentation as e:
        rep.add("representation", False, str(e))
        return rep
    a, c = M.act, M.coact
    if a.shape != (d, d * n) or c.shape != (d * n, d):
        rep.add("shapes", False, (a.shape, c.shape))
        return rep
    left, right = a @ kron(a, IB), a @ kron(IM, B.m)
    rep.add("module_assoc", left == right, _first_diff(left, right))
    left = a @ kron(IM, B.u)
    rep.add("module_unit", left == IM, _first_diff(left, IM))
    left, right = kron(c, IB) @ c, kron(IM, B.Delta) @ c
    rep.add("comodule_coassoc", left == right, _first_diff(left, right))
    left = kron(IM, B.eps) @ c
    rep.add("comodule_counit", left == IM, _first_diff(left, IM))
    MB = M.carrier.tensor(B.carrier)
    witness = None
    for g in algebra_generators(QT.H):
        if a @ MB.act(g) != M.carrier.act(g) @ a:
            witness = ("act", QT.H.format(g))
            break
        if c @ M.carrier.act(g) != MB.act(g) @ c:
            witness = ("coact", QT.H.format(g))
            break
    rep.add("h_linear", witness is None, witness)
    left, right = _yd_sides(M, B, QT)
    rep.add("yd_condition", left == right, _first_diff(left, right))
    return rep


def _yd_sides(M: YDModule, B: BraidedHopfAlgebra, QT: QTStructure):
    L = QT.L
    IB, IM = _eye(B.dim, L), _eye(M.dim, L)
    sMB = braiding_of_C(QT, M.carrier, B.carrier)
    sBM = braiding_of_C(QT, B.carrier, M.carrier)
    sBB = braiding_of_C(QT, B.carrier, B.carrier)
    left = (
        kron(IM, B.m)
        @ kron(sBM, IB)
        @ kron(IB, M.coact @ M.act)
        @ kron(sMB, IB)
        @ kron(IM, B.Delta)
    )
    right = kron(M.act, B.m) @ kron(kron(IM, sBB), IB) @ kron(M.coact, B.Delta)
    return left, right


def yd_braiding(M: YDModule, N: YDModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> Mat:
    """Sigma_{M,N} : M (x) N -> N (x) M."""
    QT = _qt_of(B, QT)
    L = QT.L
    IB = _eye(B.dim, L)
    s = braiding_of_C(QT, M.carrier, N.carrier)
    return kron(_eye(N.dim, L), M.act) @ kron(s, IB) @ kron(_eye(M.dim, L), N.coact)


def yd_braiding_inverse(M: YDModule, N: YDModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> Mat:
    """Sigma_{M,N}^{-1} : N (x) M -> M (x) N, by exact inversion."""
    inv = inverse(yd_braiding(M, N, B, QT))
    if inv is None:
        raise SingularBraiding(f"Sigma_{{{M.name},{N.name}}} is singular")
    return inv


# crossing used inside the tensor product of YD modules; "sigma" is the one the
# closure test accepts, "sigma_inv" is kept for that test
YD_TENSOR_CROSSING = "sigma"


def yd_tensor(M: YDModule, N: YDModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None,
              crossing: str | None = None) -> YDModule:
    """M (x) N with codiagonal action and coaction.

    act  = (act_M (x) act_N)(id_M (x) sigma_{N,B} (x) id_B)(id_M (x) id_N (x) Delta)
    coact = (id_M (x) id_N (x) m)(id_M (x) sigma_{B,N} (x) id_B)(coact_M (x) coact_N)
    """
    QT = _qt_of(B, QT)
    crossing = crossing or YD_TENSOR_CROSSING
    L = QT.L
    IB, IM, IN = _eye(B.dim, L), _eye(M.dim, L), _eye(N.dim, L)
    if crossing == "sigma":
        sNB = braiding_of_C(QT, N.carrier, B.carrier)
        sBN = braiding_of_C(QT, B.carrier, N.carrier)
    else:
        sNB = inverse(braiding_of_C(QT, B.carrier, N.carrier))
        sBN = inverse(braiding_of_C(QT, N.carrier, B.carrier))
    act = kron(M.act, N.act) @ kron(kron(IM, sNB), IB) @ kron(kron(IM, IN), B.Delta)
    coact = kron(kron(IM, IN), B.m) @ kron(kron(IM, sBN), IB) @ kron(M.coact, N.coact)
    return YDModule(M.carrier.tensor(N.carrier), act, coact, f"{M.name}(x){N.name}")


def yd_morphisms(M: YDModule, N: YDModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> list[Mat]:
    """Basis of the YD module maps M -> N."""
    QT = _qt_of(B, QT)
    L = QT.L
    IB = _eye(B.dim, L)
    gens = algebra_generators(QT.H)
    cons = [lambda F, g=g: F @ M.carrier.act(g) - N.carrier.act(g) @ F for g in gens]
    cons.append(lambda F: F @ M.act - N.act @ kron(F, IB))
    cons.append(lambda F: kron(F, IB) @ M.coact - N.coact @ F)
    return _solve_linear_maps(N.dim, M.dim, L, cons)


def adjoint_yd_P(B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> YDModule:
    """P = (B, act_ad = m(S(x)m)(sigma_{B,B}(x)id)(id(x)Delta), Delta)."""
    QT = _qt_of(B, QT)
    I = _eye(B.dim, QT.L)
    sBB = braiding_of_C(QT, B.carrier, B.carrier)
    act = B.m @ kron(B.S, B.m) @ kron(sBB, I) @ kron(I, B.Delta)
    return YDModule(B.carrier, act, B.Delta, "P")


def coadjoint_yd_Q(B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> YDModule:
    """Q = (B, m, coact_ad = (id(x)m)(sigma_{B,B}(x)id)(S(x)Delta)Delta)."""
    QT = _qt_of(B, QT)
    I = _eye(B.dim, QT.L)
    sBB = braiding_of_C(QT, B.carrier, B.carrier)
    coact = kron(I, B.m) @ kron(sBB, I) @ kron(B.S, B.Delta) @ B.Delta
    return YDModule(B.carrier, B.m, coact, "Q")


def regular_yd(B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> YDModule:
    """The B-regular YD module, taken to be P (x) Q."""
    QT = _qt_of(B, QT)
    M = yd_tensor(adjoint_yd_P(B, QT), coadjoint_yd_Q(B, QT), B, QT)
    M.name = "reg"
    return M


def trivial_yd_embed(V: HModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> YDModule:
    """V with act = id (x) eps and coact = id (x) u; V must be transparent."""
    QT = _qt_of(B, QT)
    if not is_transparent_module(QT, V.rho):
        raise NotTransparent(f"module {V.name!r} is not in the Mueger center")
    I = _eye(V.dim, QT.L)
    return YDModule(V, kron(I, B.eps), kron(I, B.u), f"triv({V.name})")


def _double_braiding_trivial(M, N, B, QT) -> bool:
    s1 = yd_braiding(M, N, B, QT)
    s2 = yd_braiding(N, M, B, QT)
    return s2 @ s1 == _eye(M.dim * N.dim, QT.L)


def yd_muger_membership(M: YDModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None,
                        spot_check: bool = True) -> bool:
    """True iff act and coact are trivial and the carrier is transparent.

    When true, the double braiding against P, Q and the regular YD module is
    also checked to be the identity (a failure there raises RuntimeError).
    """
    QT = _qt_of(B, QT)
    I = _eye(M.dim, QT.L)
    if M.act != kron(I, B.eps) or M.coact != kron(I, B.u):
        return False
    if not is_transparent_module(QT, M.carrier.rho):
        return False
    if spot_check:
        for N in (adjoint_yd_P(B, QT), coadjoint_yd_Q(B, QT), regular_yd(B, QT)):
            if not _double_braiding_trivial(M, N, B, QT):
                raise RuntimeError(f"member {M.name!r} braids nontrivially with {N.name!r}")
    return True


def yd_muger_witness(M: YDModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None):
    """Name of a module among P, Q, reg whose double braiding with M is not the identity."""
    QT = _qt_of(B, QT)
    for N in (adjoint_yd_P(B, QT), coadjoint_yd_Q(B, QT), regular_yd(B, QT)):
        if not _double_braiding_trivial(M, N, B, QT):
            return N.name
    return None


def check_braiding_identities(M: YDModule, B: BraidedHopfAlgebra, QT: QTStructure | None = None) -> Report:
    """The four identities linking Sigma with P, Q, u and eps."""
    QT = _qt_of(B, QT)
    L = QT.L
    IM = _eye(M.dim, L)
    P, Q = adjoint_yd_P(B, QT), coadjoint_yd_Q(B, QT)
    rep = Report(title=f"braiding identities for {M!r}")
    uM = kron(B.u, IM)
    lhs = yd_braiding(Q, M, B, QT) @ uM
    rep.add("sigma_QM_unit", lhs == M.coact, _first_diff(lhs, M.coact))
    epsM = kron(B.eps, IM)
    lhs = epsM @ yd_braiding(M, P, B, QT)
    rep.add("eps_sigma_MP", lhs == M.act, _first_diff(lhs, M.act))
    target = kron(IM, B.u)
    lhs = yd_braiding_inverse(M, Q, B, QT) @ uM
    rep.add("sigma_inv_MQ_unit", lhs == target, _first_diff(lhs, target))
    target = kron(IM, B.eps)
    lhs = epsM @ yd_braiding_inverse(P, M, B, QT)
    rep.add("eps_sigma_inv_PM", lhs == target, _first_diff(lhs, target))
    return rep


def verify_hexagons(QT: QTStructure, B: BraidedHopfAlgebra, triples, braiding=None,
                    naturality_samples: int = 2) -> Report:
    """Hexagons, invertibility, YD-linearity and naturality of Sigma.

    ``braiding`` overrides :func:`yd_braiding` (used by the mutation tests).
    """
    sig = braiding or yd_braiding
    L = QT.L
    rep = Report(title="YD braiding axioms")
    for t, (M, N, P) in enumerate(triples):
        tag = f"{M.name},{N.name},{P.name}"
        I = lambda k: _eye(k, L)  # noqa: E731
        MN = yd_tensor(M, N, B, QT)
        NP = yd_tensor(N, P, B, QT)
        left = sig(MN, P, B, QT)
        right = kron(sig(M, P, B, QT), I(N.dim)) @ kron(I(M.dim), sig(N, P, B, QT))
        rep.add(f"hexagon1[{tag}]", left == right, _first_diff(left, right))
        left = sig(M, NP, B, QT)
        right = kron(I(N.dim), sig(M, P, B, QT)) @ kron(sig(M, N, B, QT), I(P.dim))
        rep.add(f"hexagon2[{tag}]", left == right, _first_diff(left, right))
        for X, Y in ((M, N), (N, P)):
            s = sig(X, Y, B, QT)
            inv = inverse(s)
            rep.add(f"invertible[{X.name},{Y.name}]#{t}", inv is not None)
            # Sigma is a morphism of YD modules X(x)Y -> Y(x)X
            XY, YX = yd_tensor(X, Y, B, QT), yd_tensor(Y, X, B, QT)
            IB = I(B.dim)
            ok = s @ XY.act == YX.act @ kron(s, IB) and kron(s, IB) @ XY.coact == YX.coact @ s
            rep.add(f"yd_linear[{X.name},{Y.name}]#{t}", ok)
            nat = True
            for f in yd_morphisms(X, X, B, QT)[:naturality_samples]:
                if s @ kron(f, I(Y.dim)) != kron(I(Y.dim), f) @ s:
                    nat = False
            for g in yd_morphisms(Y, Y, B, QT)[:naturality_samples]:
                if s @ kron(I(X.dim), g) != kron(g, I(X.dim)) @ s:
                    nat = False
            rep.add(f"naturality[{X.name},{Y.name}]#{t}", nat)
    return rep
