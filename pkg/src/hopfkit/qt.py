"""Quasitriangular structures and the non-degeneracy tests on Rep(H).

For C = Rep(H) with R-matrix R, the double braiding on X (x) V is the action
of the monodromy Q = R21 R.  Four properties are computed independently:

* factorizable: the Drinfeld map f -> (f (x) id)(Q) is bijective;
* weakly factorizable: its restriction Omega to class functions is a
  bijection onto the center;
* Mueger-trivial: the transparency ideal has codimension one;
* the rank bound rank Omega <= dim Xi.

Transparency ideal: V is transparent iff (id (x) rho_V)(Q) = 1 (x) id_V.
Writing Q = sum_i b_i (x) q_i, this says rho_V(q_i - u_i 1) = 0 for all i,
where 1 = sum_i u_i b_i.  So transparent modules are exactly the modules of
H/I, I the two-sided ideal generated by the q_i - u_i 1.  The Mueger center
is trivial iff every H/I-module is a multiple of the unit object, and since
the regular module of H/I is one of them this happens iff dim H/I = 1.
"""

from __future__ import annotations

from .hopf import (
    HopfAlgebra,
    _Projection,
    algebra_generators,
    center_basis,
    class_functions_basis,
    ideal_closure,
)
from .linalg import Echelon, Mat, Subspace, _iadd, rank
from .report import Report
from .scalar import Cyc

__all__ = [
    "QTStructure",
    "OmegaImageNotCentral",
    "NotARepresentation",
    "OMEGA_VARIANT",
    "verify_qt",
    "monodromy",
    "drinfeld_map_matrix",
    "is_factorizable",
    "omega_matrix",
    "omega_rank",
    "is_weakly_factorizable",
    "transparency_ideal",
    "is_muger_trivial",
    "is_transparent_module",
    "check_representation",
    "xi_basis",
    "check_rank_bound",
    "theorem1_crosscheck",
]

# Omega(f) = (id (x) f)(Q).  With class functions normalized as
# f(ba) = f(a S^2(b)) this is the variant that lands in the center; the
# other slot, (f (x) id)(Q), already leaves Z(H) on D(taft(3)).  Both stay
# selectable for the consistency suite.
OMEGA_VARIANT = "right"


class OmegaImageNotCentral(RuntimeError):
    pass


class NotARepresentation(ValueError):
    pass


class QTStructure:
    """A Hopf algebra together with an R-matrix R = sum R[i,j] b_i (x) b_j."""

    def __init__(self, H: HopfAlgebra, R):
        self.H = H
        if isinstance(R, Mat):
            R = {(i, j): x for i, row in enumerate(R.rows) for j, x in row.items()}
        self.R = {k: v for k, v in R.items() if v}
        self._cache: dict = {}

    @property
    def L(self) -> int:
        return self.H.L

    @property
    def R_mat(self) -> Mat:
        return _pair_matrix(self.R, self.H.dim, self.L)

    @property
    def R_inv(self) -> dict:
        """(S (x) id)(R), the inverse of R for a genuine R-matrix."""
        if "R_inv" not in self._cache:
            out: dict = {}
            for (i, j), c in self.R.items():
                for k, s in self.H._s[i].items():
                    _iadd(out, {(k, j): c * s})
            self._cache["R_inv"] = out
        return self._cache["R_inv"]

    def __repr__(self):
        return f"QTStructure({self.H!r}, |R|={len(self.R)})"


def _pair_matrix(X: dict, n: int, L: int) -> Mat:
    rows = [{} for _ in range(n)]
    for (i, j), c in X.items():
        rows[i][j] = c
    return Mat(n, n, rows, L)


def _flip(X: dict) -> dict:
    return {(j, i): c for (i, j), c in X.items()}


def _one_tensor_one(H: HopfAlgebra) -> dict:
    u = H.one()
    return {(i, j): x * y for i, x in u.items() for j, y in u.items()}


# -- axioms ------------------------------------------------------------------

def verify_qt(QT: QTStructure, full: bool = False) -> Report:
    """Check the quasitriangularity identities exactly.

    Delta^cop(h) R = R Delta(h) is checked on algebra generators unless
    ``full``; both sides are multiplicative in h, so that suffices.
    """
    H = QT.H
    R = QT.R
    rep = Report(title=f"quasitriangular axioms for {H!r}")
    one2 = _one_tensor_one(H)
    Rinv = QT.R_inv
    w = _first_key_diff(H, H.mul2(R, Rinv), one2) or _first_key_diff(H, H.mul2(Rinv, R), one2)
    rep.add("R_invertible", w is None, w)

    hs = [H.basis_vector(i) for i in range(H.dim)] if full else algebra_generators(H)
    witness = None
    for h in hs:
        d = H.comul(h)
        if H.mul2(_flip(d), R) != H.mul2(R, d):
            witness = H.format(h)
            break
    rep.add("quasi_cocommutative", witness is None, witness)

    u = H.one()
    # (Delta (x) id) R = R13 R23
    left: dict = {}
    for (i, j), c in R.items():
        for (a, b), d in H._d[i].items():
            _iadd(left, {(a, b, j): c * d})
    R13 = {(i, k, j): c * x for (i, j), c in R.items() for k, x in u.items()}
    R23 = {(k, i, j): c * x for (i, j), c in R.items() for k, x in u.items()}
    R12 = {(i, j, k): c * x for (i, j), c in R.items() for k, x in u.items()}
    right = H.mul3(R13, R23)
    rep.add("delta_left", left == right, _first_key_diff(H, left, right))
    left = {}
    for (i, j), c in R.items():
        for (a, b), d in H._d[j].items():
            _iadd(left, {(i, a, b): c * d})
    right = H.mul3(R13, R12)
    rep.add("delta_right", left == right, _first_key_diff(H, left, right))

    eps_l: dict = {}
    eps_r: dict = {}
    for (i, j), c in R.items():
        if H._eps[i]:
            _iadd(eps_l, {j: c * H._eps[i]})
        if H._eps[j]:
            _iadd(eps_r, {i: c * H._eps[j]})
    rep.add("counit_left", eps_l == u, _first_key_diff(H, eps_l, u))
    rep.add("counit_right", eps_r == u, _first_key_diff(H, eps_r, u))
    return rep


def _first_key_diff(H: HopfAlgebra, a: dict, b: dict):
    """Labels of the first basis (tensor) index where two sparse elements differ."""
    zero = Cyc.zero(H.L)
    for k in sorted(set(a) | set(b)):
        if a.get(k, zero) != b.get(k, zero):
            idx = k if isinstance(k, tuple) else (k,)
            return tuple(H.labels[i] for i in idx)
    return None


# -- monodromy and the Drinfeld map ------------------------------------------

def monodromy(QT: QTStructure) -> dict:
    """Q = R21 R as a dict over basis pairs."""
    if "Q" not in QT._cache:
        QT._cache["Q"] = QT.H.mul2(_flip(QT.R), QT.R)
    return QT._cache["Q"]


def drinfeld_map_matrix(QT: QTStructure, side: str = "left") -> Mat:
    """Matrix of f -> (f (x) id)(Q) from dual-basis to basis coordinates.

    Column i is the image of b^i, i.e. row i of Q's coefficient matrix, so
    the result is the transpose of that matrix.  ``side='right'`` gives
    f -> (id (x) f)(Q), whose matrix is Q's coefficient matrix itself.
    """
    Qm = _pair_matrix(monodromy(QT), QT.H.dim, QT.L)
    return Qm.T() if side == "left" else Qm


def is_factorizable(QT: QTStructure) -> bool:
    return rank(drinfeld_map_matrix(QT)) == QT.H.dim


def _drinfeld_apply(QT: QTStructure, f: dict, side: str) -> dict:
    out: dict = {}
    for (i, j), c in monodromy(QT).items():
        if side == "left":
            x = f.get(i)
            if x:
                _iadd(out, {j: c * x})
        else:
            x = f.get(j)
            if x:
                _iadd(out, {i: c * x})
    return out


# -- Omega ---------------------------------------------------------------------

def _cf(QT):
    if "CF" not in QT._cache:
        QT._cache["CF"] = class_functions_basis(QT.H)
    return QT._cache["CF"]


def _ce(QT):
    if "CE" not in QT._cache:
        QT._cache["CE"] = center_basis(QT.H)
    return QT._cache["CE"]


def omega_matrix(QT: QTStructure, variant: str | None = None) -> Mat:
    """Omega : CF -> CE in the computed bases (rows: CE, columns: CF).

    Raises OmegaImageNotCentral if some image leaves the center.
    """
    variant = variant or OMEGA_VARIANT
    key = ("omega", variant)
    if key in QT._cache:
        return QT._cache[key]
    CF, CE = _cf(QT), _ce(QT)
    ech = Echelon(QT.H.dim)
    # coordinates on the CE basis: keep the basis in its own echelon
    for z in CE.basis:
        ech.add(z)
    pivots = ech.pivots
    cols = []
    for k, f in enumerate(CF.basis):
        img = _drinfeld_apply(QT, f, variant)
        if not CE.contains(img):
            raise OmegaImageNotCentral(
                f"Omega({variant}) of class function #{k} is not central: {QT.H.format(img)}"
            )
        coords = ech.coords(img)
        cols.append({pivots.index(p): c for p, c in coords.items()})
    M = Mat.from_columns(cols, CE.dim, QT.L)
    QT._cache[key] = M
    return M


def omega_rank(QT: QTStructure, variant: str | None = None) -> int:
    return rank(omega_matrix(QT, variant))


def is_weakly_factorizable(QT: QTStructure) -> bool:
    M = omega_matrix(QT)
    return M.nrows == M.ncols and rank(M) == M.nrows


# -- Mueger center -------------------------------------------------------------

def _transparency_generators(QT: QTStructure) -> list[dict]:
    H = QT.H
    u = H.one()
    comps: dict[int, dict] = {}
    for (i, j), c in monodromy(QT).items():
        comps.setdefault(i, {})[j] = c
    gens = []
    for i in range(H.dim):
        g = dict(comps.get(i, {}))
        if u.get(i):
            _iadd(g, u, -u[i])
        if g:
            gens.append(g)
    return gens


def transparency_ideal(QT: QTStructure) -> Subspace:
    """The ideal I with Rep(H/I) = Mueger center of Rep(H)."""
    if "I" not in QT._cache:
        I = ideal_closure(QT.H, _transparency_generators(QT))
        if any(QT.H.eps(v) for v in I.basis):
            raise RuntimeError("transparency ideal meets the counit; R is not an R-matrix")
        QT._cache["I"] = I
    return QT._cache["I"]


def is_muger_trivial(QT: QTStructure) -> bool:
    return transparency_ideal(QT).dim == QT.H.dim - 1


def check_representation(H: HopfAlgebra, rho: list[Mat]) -> None:
    """Raise NotARepresentation unless rho is an algebra map H -> End(V)."""
    if len(rho) != H.dim:
        raise NotARepresentation(f"need {H.dim} matrices, got {len(rho)}")
    d = rho[0].nrows
    if any(r.shape != (d, d) for r in rho):
        raise NotARepresentation("action matrices must be square of equal size")

    def act(v: dict) -> Mat:
        M = Mat.zeros(d, d, H.L)
        for i, c in v.items():
            M = M + rho[i].scale(c)
        return M

    if act(H.one()) != Mat.identity(d, H.L):
        raise NotARepresentation("unit does not act as the identity")
    for i in range(H.dim):
        for j in range(H.dim):
            if rho[i] @ rho[j] != act(H.basis_mul(i, j)):
                raise NotARepresentation(f"rho({H.labels[i]}) rho({H.labels[j]}) mismatch")


def is_transparent_module(QT: QTStructure, rho: list[Mat]) -> bool:
    """True iff (id (x) rho)(Q) = 1 (x) id_V."""
    H = QT.H
    check_representation(H, rho)
    d = rho[0].nrows
    for g in _transparency_generators(QT):
        M = Mat.zeros(d, d, H.L)
        for j, c in g.items():
            M = M + rho[j].scale(c)
        if not M.is_zero():
            return False
    return True


# -- Xi and the rank bound -----------------------------------------------------

def xi_basis(QT: QTStructure) -> Subspace:
    """{z in Z(H) : Delta(z) - z (x) 1 in H (x) I}."""
    if "Xi" in QT._cache:
        return QT._cache["Xi"]
    H = QT.H
    I = transparency_ideal(QT)
    proj = _Projection(H, I)
    CE = _ce(QT)
    zs = CE.basis
    u = H.one()
    # w_t = (id (x) pi)(Delta z_t - z_t (x) 1)
    cols = []
    for z in zs:
        X = H.comul(z)
        _iadd(X, {(i, j): x * y for i, x in z.items() for j, y in u.items()}, Cyc.rational(-1, H.L))
        w: dict = {}
        for (i, j), c in X.items():
            for a, p in proj.images[j].items():
                _iadd(w, {(i, a): c * p})
        cols.append(w)
    keys = sorted({k for w in cols for k in w})
    pos = {k: r for r, k in enumerate(keys)}
    rows = [{} for _ in keys]
    for t, w in enumerate(cols):
        for k, c in w.items():
            rows[pos[k]][t] = c
    M = Mat(len(keys), len(zs), rows, H.L)
    ker = Echelon(len(zs), [r for r in M.rows if r]).annihilator(H.L)
    vecs = []
    for coeffs in ker:
        v: dict = {}
        for t, c in coeffs.items():
            _iadd(v, zs[t], c)
        vecs.append(v)
    X = Subspace(H.dim, vecs, H.L)
    QT._cache["Xi"] = X
    return X


def check_rank_bound(QT: QTStructure) -> Report:
    r = omega_rank(QT)
    dx = xi_basis(QT).dim
    rep = Report(title="rank Omega <= dim Xi")
    rep.add("rank_bound", r <= dx, None if r <= dx else (r, dx))
    rep.data.update(omega_rank=r, dim_xi=dx, equality=(r == dx))
    return rep


# -- Theorem 1.1 crosscheck ----------------------------------------------------

def theorem1_crosscheck(QT: QTStructure, axioms: Report | None = None) -> Report:
    """Compute the three non-degeneracy conditions independently."""
    H = QT.H
    fact = is_factorizable(QT)
    weak = is_weakly_factorizable(QT)
    muger = is_muger_trivial(QT)
    r = omega_rank(QT)
    rep = Report(title=f"non-degeneracy crosscheck for {H!r}")
    if axioms is not None:
        rep.merge(axioms)
    bound = check_rank_bound(QT)
    rep.merge(bound)
    consistent = fact == weak == muger
    rep.add("consistent", consistent, None if consistent else (fact, weak, muger))
    rep.data.update(
        factorizable=fact,
        weakly_factorizable=weak,
        muger_trivial=muger,
        omega_rank=r,
        dim_cf=_cf(QT).dim,
        dim_ce=_ce(QT).dim,
        dim_xi=bound.data["dim_xi"],
        transparency_codim=H.dim - transparency_ideal(QT).dim,
        consistent=consistent,
    )
    return rep
