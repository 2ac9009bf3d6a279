"""Single-entry perturbations of passing examples, shared by the mutation tests."""

from hopfkit.hopf import HopfAlgebra
from hopfkit.linalg import Mat
from hopfkit.qt import QTStructure
from hopfkit.scalar import Cyc
from hopfkit.yd import YDModule


def rebuild(H: HopfAlgebra, mult=None, comult=None, antipode=None) -> HopfAlgebra:
    n = H.dim
    m = {(i, j): dict(H._m[i][j]) for i in range(n) for j in range(n)}
    d = {i: dict(H._d[i]) for i in range(n)}
    s = {i: dict(H._s[i]) for i in range(n)}
    if mult:
        mult(m)
    if comult:
        comult(d)
    if antipode:
        antipode(s)
    return HopfAlgebra(H.labels, m, H._unit, d, H._eps, s, H.L, dict(H.metadata))


def bump(vec: dict, key, delta=1, L=1):
    vec[key] = vec.get(key, Cyc.zero(L)) + delta
    if not vec[key]:
        del vec[key]


def mutate_mult(H, i, j, k, delta=1):
    return rebuild(H, mult=lambda m: bump(m[(i, j)], k, delta, H.L))


def mutate_comult(H, i, j, k, delta=1):
    return rebuild(H, comult=lambda d: bump(d[i], (j, k), delta, H.L))


def mutate_R(QT: QTStructure, i, j, delta=1):
    R = dict(QT.R)
    bump(R, (i, j), delta, QT.L)
    return QTStructure(QT.H, R)


def mutate_mat(M: Mat, i, j, delta=1) -> Mat:
    rows = [dict(r) for r in M.rows]
    bump(rows[i], j, delta, M.L)
    return Mat(M.nrows, M.ncols, rows, M.L)


def mutate_yd(M: YDModule, which: str, i, j, delta=1) -> YDModule:
    act, coact = M.act, M.coact
    if which == "act":
        act = mutate_mat(act, i, j, delta)
    else:
        coact = mutate_mat(coact, i, j, delta)
    return YDModule(M.carrier, act, coact, M.name + "*")


# -- the shipped mutation set ---------------------------------------------------
#
# Each entry is (family, label, run) where run() returns the Report of the
# verifier for that family on the perturbed object.  A mutation counts as
# detected when that Report fails and some failed check carries a witness.

def _hopf_family(QT_name, which):
    from hopfkit.hopf import verify_hopf
    from hopfkit.zoo import build

    QT = build(QT_name)
    H = QT.H
    n = H.dim
    mut = mutate_mult if which == "mult" else mutate_comult
    for i in range(n):
        for j in range(n):
            for k in range(n):
                yield f"{QT_name} {which}[{H.labels[i]},{H.labels[j]},{H.labels[k]}]+1", (
                    lambda i=i, j=j, k=k: verify_hopf(mut(H, i, j, k)))


def _qt_family(QT_name):
    from hopfkit.qt import verify_qt
    from hopfkit.zoo import build

    QT = build(QT_name)
    n = QT.H.dim
    for i in range(n):
        for j in range(n):
            yield f"{QT_name} R[{QT.H.labels[i]},{QT.H.labels[j]}]+1", (lambda i=i, j=j: verify_qt(mutate_R(QT, i, j)))


def _yd_family(N):
    from hopfkit.yd import adjoint_yd_P, coadjoint_yd_Q, nichols_truncated_line, verify_yd_module

    B = nichols_truncated_line(N)
    for M in (adjoint_yd_P(B), coadjoint_yd_Q(B)):
        for which in ("act", "coact"):
            mat = getattr(M, which)
            for i in range(mat.nrows):
                for j in range(mat.ncols):
                    yield f"B(N={N}) {M.name}.{which}[{i},{j}]+1", (
                        lambda M=M, which=which, i=i, j=j: verify_yd_module(mutate_yd(M, which, i, j), B))


def mutation_set():
    out = []
    for name in ("sweedler", "gbichar:3:1:3"):
        out += [("associativity", lbl, run) for lbl, run in _hopf_family(name, "mult")]
        out += [("coassociativity", lbl, run) for lbl, run in _hopf_family(name, "comult")]
    for name in ("sweedler", "gbichar:4:1:4", "double:sweedler"):
        out += [("qt_hexagon", lbl, run) for lbl, run in _qt_family(name)]
    out += [("yd_condition", lbl, run) for lbl, run in _yd_family(3)]
    return out


def detected(rep) -> bool:
    return not rep.ok and any(c.witness is not None for c in rep.failures)
