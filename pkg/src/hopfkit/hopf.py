"""Finite-dimensional Hopf algebras given by structure constants.

Elements of H are sparse dicts ``{i: Cyc}`` over the basis ``b_0 .. b_{n-1}``.
Elements of H(x)H are dicts keyed by index pairs ``(i, j)``; triple tensors
use ``(i, j, k)``.  Dual-space vectors (functionals) use coordinates in the
dual basis ``b^i``.

The reductions "check on algebra generators only" used below are sound once
associativity has been verified: both sides of each identity are
multiplicative in the generator slot, and a verified generating set spans
H by products.
"""

from __future__ import annotations

from collections import deque

from .linalg import Echelon, Mat, Subspace, _iadd, inverse, vec_add, vec_scale, vec_sub
from .report import Report
from .scalar import Cyc, as_cyc

__all__ = [
    "StructTensor",
    "HopfAlgebra",
    "NotHopfIdeal",
    "verify_hopf",
    "dual",
    "coopposite",
    "change_basis",
    "center_basis",
    "class_functions_basis",
    "s_squared",
    "is_grouplike",
    "algebra_generators",
    "ideal_closure",
    "hopf_ideal_checks",
    "hopf_quotient",
    "same_structure",
]


class NotHopfIdeal(ValueError):
    def __init__(self, which_condition: str, witness=None):
        self.which_condition = which_condition
        self.witness = witness
        super().__init__(f"not a Hopf ideal: {which_condition} fails (witness {witness})")


class StructTensor:
    """Sparse 3-index tensor ``c[i][j][k]`` with dense read access."""

    def __init__(self, dim: int, entries: dict | None = None, L: int = 1):
        self.dim = dim
        self.L = L
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def get(self, i: int, j: int, k: int) -> Cyc:
        return self.entries.get((i, j, k)) or Cyc.zero(self.L)

    __call__ = get

    def __getitem__(self, ijk):
        return self.get(*ijk)

    def items(self):
        return sorted(self.entries.items())

    def dense(self) -> list:
        n = self.dim
        return [[[self.get(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)]

    def __eq__(self, other):
        return isinstance(other, StructTensor) and self.dim == other.dim and self.entries == other.entries


def _as_vec(v, L) -> dict:
    if isinstance(v, dict):
        return {k: as_cyc(x, L) for k, x in v.items() if x}
    out = {}
    for i, x in enumerate(v):
        x = as_cyc(x, L)
        if x:
            out[i] = x
    return out


class HopfAlgebra:
    """A Hopf algebra on the basis ``labels`` over Q(zeta_L).

    ``mult`` maps ``(i, j)`` to the dict of ``b_i b_j``; ``comult`` maps ``i``
    to the dict ``{(j, k): c}`` of ``Delta(b_i)``; ``antipode`` maps ``i`` to
    ``S(b_i)``.  StructTensor / Mat inputs are accepted as well.

    ``metadata`` is free-form.  The keys ``grouplikes`` and ``generators``
    hold lists of elements (sparse dicts) and are used by the analysis code;
    ``dual_basis`` optionally holds functionals used by :func:`dual`.
    """

    def __init__(self, labels, mult, unit, comult, counit, antipode, L: int = 1, metadata=None):
        self.labels = tuple(labels)
        n = self.dim = len(self.labels)
        self.L = L
        m = [[{} for _ in range(n)] for _ in range(n)]
        if isinstance(mult, StructTensor):
            for (i, j, k), c in mult.entries.items():
                m[i][j][k] = as_cyc(c, L)
        else:
            for (i, j), v in mult.items():
                m[i][j] = _as_vec(v, L)
        self._m = m
        d: list[dict] = [{} for _ in range(n)]
        if isinstance(comult, StructTensor):
            for (i, j, k), c in comult.entries.items():
                d[i][(j, k)] = as_cyc(c, L)
        else:
            for i, v in comult.items():
                d[i] = _as_vec(v, L)
        self._d = d
        self._unit = _as_vec(unit, L)
        eps = _as_vec(counit, L)
        zero = Cyc.zero(L)
        self._eps = [eps.get(i, zero) for i in range(n)]
        s: list[dict] = [{} for _ in range(n)]
        if isinstance(antipode, Mat):
            for j, col in enumerate(antipode.columns()):
                s[j] = _as_vec(col, L)
        else:
            for i, v in antipode.items():
                s[i] = _as_vec(v, L)
        self._s = s
        self.metadata = dict(metadata or {})
        self._cache: dict = {}

    # -- structure views ---------------------------------------------------
    @property
    def mult(self) -> StructTensor:
        e = {(i, j, k): c for i in range(self.dim) for j in range(self.dim) for k, c in self._m[i][j].items()}
        return StructTensor(self.dim, e, self.L)

    @property
    def comult(self) -> StructTensor:
        e = {(i, j, k): c for i in range(self.dim) for (j, k), c in self._d[i].items()}
        return StructTensor(self.dim, e, self.L)

    @property
    def unit(self) -> dict:
        return dict(self._unit)

    @property
    def counit(self) -> list:
        return list(self._eps)

    @property
    def antipode(self) -> Mat:
        return Mat.from_columns(self._s, self.dim, self.L)

    @property
    def grouplikes(self) -> list[dict]:
        return list(self.metadata.get("grouplikes", ()))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, label_or_index) -> dict:
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        return {i: Cyc.one(self.L)}

    def __repr__(self):
        name = self.metadata.get("name", "")
        return f"HopfAlgebra({name!r}, dim={self.dim}, L={self.L})"

    def format(self, v: dict) -> str:
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            parts.append(f"({v[i]})*{self.labels[i]}")
        return " + ".join(parts)

    # -- element arithmetic ------------------------------------------------
    def one(self) -> dict:
        return dict(self._unit)

    def basis_mul(self, i: int, j: int) -> dict:
        """b_i b_j (shared dict: do not mutate)."""
        return self._m[i][j]

    def _poly_table(self):
        # structure constants as raw polynomials; None marks a coefficient 1
        if "poly_table" not in self._cache:
            one = Cyc.one(self.L)
            self._cache["poly_table"] = [
                [[(k, None if c == one else c.p) for k, c in self._m[i][j].items()]
                 for j in range(self.dim)]
                for i in range(self.dim)
            ]
        return self._cache["poly_table"]

    def _own(self, X: dict) -> dict:
        L = self.L
        for x in X.values():
            if not isinstance(x, Cyc) or x.L != L:
                return {k: as_cyc(v, L) for k, v in X.items()}
        return X

    def _wrap(self, acc: dict) -> dict:
        L = self.L
        out = {}
        for k, p in acc.items():
            c = Cyc._reduce(L, p)
            if c:
                out[k] = c
        return out

    # The product kernels accumulate unreduced polynomials and reduce each
    # output coefficient once.
    def mul(self, u: dict, v: dict) -> dict:
        mp = self._poly_table()
        u, v = self._own(u), self._own(v)
        acc: dict = {}
        get = acc.get
        for i, x in u.items():
            row = mp[i]
            xp = x.p
            for j, y in v.items():
                entry = row[j]
                if not entry:
                    continue
                s = xp * y.p
                for k, c in entry:
                    t = s if c is None else s * c
                    old = get(k)
                    acc[k] = t if old is None else old + t
        return self._wrap(acc)

    def comul(self, v: dict) -> dict:
        out: dict = {}
        for i, x in v.items():
            _iadd(out, self._d[i], x)
        return out

    def eps(self, v: dict) -> Cyc:
        acc = Cyc.zero(self.L)
        for i, x in v.items():
            e = self._eps[i]
            if e:
                acc = acc + x * e
        return acc

    def S(self, v: dict) -> dict:
        out: dict = {}
        for i, x in v.items():
            _iadd(out, self._s[i], x)
        return out

    def S_inv(self, v: dict) -> dict:
        if "S_inv" not in self._cache:
            inv = inverse(self.antipode)
            if inv is None:
                raise ValueError("antipode is not invertible")
            self._cache["S_inv"] = [inv.column(j) for j in range(self.dim)]
        cols = self._cache["S_inv"]
        out: dict = {}
        for i, x in v.items():
            _iadd(out, cols[i], x)
        return out

    def mul2(self, X: dict, Y: dict) -> dict:
        """Product in H (x) H."""
        mp = self._poly_table()
        X, Y = self._own(X), self._own(Y)
        acc: dict = {}
        get = acc.get
        for (a, b), x in X.items():
            ra, rb, xp = mp[a], mp[b], x.p
            for (c, d), y in Y.items():
                p, q = ra[c], rb[d]
                if not (p and q):
                    continue
                s = xp * y.p
                for k, u in p:
                    su = s if u is None else s * u
                    for l, w in q:
                        t = su if w is None else su * w
                        key = (k, l)
                        old = get(key)
                        acc[key] = t if old is None else old + t
        return self._wrap(acc)

    def mul3(self, X: dict, Y: dict) -> dict:
        """Product in H (x) H (x) H."""
        mp = self._poly_table()
        X, Y = self._own(X), self._own(Y)
        acc: dict = {}
        get = acc.get
        for (a, b, c), x in X.items():
            ra, rb, rc, xp = mp[a], mp[b], mp[c], x.p
            for (d, e, f), y in Y.items():
                p, q, r = ra[d], rb[e], rc[f]
                if not (p and q and r):
                    continue
                s = xp * y.p
                for k, u in p:
                    su = s if u is None else s * u
                    for l, w in q:
                        suw = su if w is None else su * w
                        for t, z in r:
                            val = suw if z is None else suw * z
                            key = (k, l, t)
                            old = get(key)
                            acc[key] = val if old is None else old + val
        return self._wrap(acc)

    def tensor(self, u: dict, v: dict) -> dict:
        return {(i, j): x * y for i, x in u.items() for j, y in v.items()}


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _outer(u: dict, v: dict) -> dict:
    return {(i, j): x * y for i, x in u.items() for j, y in v.items()}


def _lbl(H: HopfAlgebra, *idx) -> tuple:
    return tuple(H.labels[i] for i in idx)


# -- generators ------------------------------------------------------------

def _span_of_words(H: HopfAlgebra, gens: list[dict]) -> int:
    ech = Echelon(H.dim)
    start = H.one()
    ech.add(start)
    queue = deque([start])
    while queue and len(ech) < H.dim:
        v = queue.popleft()
        for g in gens:
            w = H.mul(v, g)
            if ech.add(w):
                queue.append(w)
    return len(ech)


def algebra_generators(H: HopfAlgebra) -> list[dict]:
    """Tagged algebra generators if they generate H, else the whole basis."""
    if "generators" in H._cache:
        return H._cache["generators"]
    tagged = H.metadata.get("generators")
    gens = None
    if tagged:
        if _span_of_words(H, tagged) == H.dim:
            gens = list(tagged)
    if gens is None:
        gens = [H.basis_vector(i) for i in range(H.dim)]
    H._cache["generators"] = gens
    return gens


# -- axiom verification ----------------------------------------------------

def verify_hopf(H: HopfAlgebra, full: bool = False) -> Report:
    """Check every Hopf algebra axiom exactly.

    Coassociativity, unit/counit and antipode identities are checked on the
    whole basis.  Associativity is checked on basis x basis x generators and
    multiplicativity of Delta and epsilon on generators x basis, unless
    ``full`` is set; see the comments and the module docstring for why that
    suffices.
    """
    n = H.dim
    m = H._m
    rep = Report(title=f"Hopf axioms for {H!r}")
    one = H.one()

    unit_witness = None
    for a in range(n):
        e = {a: Cyc.one(H.L)}
        if H.mul(one, e) != e or H.mul(e, one) != e:
            unit_witness = _lbl(H, a)
            break
    unit_ok = unit_witness is None

    # associativity: (ab)c = a(bc).  Once 1 is a unit and the generators
    # span H by left-normed words, c may be restricted to generators: if it
    # holds for w and for g then (ab)(wg) = ((ab)w)g = (a(bw))g = a((bw)g)
    # = a(b(wg)).
    if full or not unit_ok:
        thirds = [(H.labels[c], {c: Cyc.one(H.L)}) for c in range(n)]
    else:
        thirds = [(H.format(g), g) for g in algebra_generators(H)]
    witness = None
    for label, g in thirds:
        bg = [H.mul({b: Cyc.one(H.L)}, g) for b in range(n)]
        for a in range(n):
            ma = m[a]
            for b in range(n):
                left = H.mul(ma[b], g)
                right: dict = {}
                for k, x in bg[b].items():
                    p = ma[k]
                    if p:
                        _iadd(right, p, x)
                if left != right:
                    witness = (H.labels[a], H.labels[b], label)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("associativity", witness is None, witness)
    rep.add("unit", unit_ok, unit_witness)

    # coassociativity
    witness = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H._d[i].items():
            for (p, q), d in H._d[j].items():
                _iadd(left, {(p, q, k): c * d})
            for (p, q), d in H._d[k].items():
                _iadd(right, {(j, p, q): c * d})
        if left != right:
            witness = _lbl(H, i)
            break
    rep.add("coassociativity", witness is None, witness)

    witness = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H._d[i].items():
            if H._eps[j]:
                _iadd(left, {k: c * H._eps[j]})
            if H._eps[k]:
                _iadd(right, {j: c * H._eps[k]})
        e = {i: Cyc.one(H.L)}
        if left != e or right != e:
            witness = _lbl(H, i)
            break
    rep.add("counit", witness is None, witness)

    # Delta and epsilon are algebra maps
    firsts = [H.basis_vector(i) for i in range(n)] if full else algebra_generators(H)
    witness = None
    if H.comul(one) != _outer(one, one):
        witness = ("1",)
    else:
        for g in firsts:
            dg = H.comul(g)
            for b in range(n):
                lhs = H.comul(H.mul(g, {b: Cyc.one(H.L)}))
                rhs = H.mul2(dg, H._d[b])
                if lhs != rhs:
                    witness = (H.format(g), H.labels[b])
                    break
            if witness:
                break
    rep.add("comult_multiplicative", witness is None, witness)

    witness = None
    if H.eps(one) != 1:
        witness = ("1",)
    else:
        for g in firsts:
            eg = H.eps(g)
            for b in range(n):
                if H.eps(H.mul(g, {b: Cyc.one(H.L)})) != eg * H._eps[b]:
                    witness = (H.format(g), H.labels[b])
                    break
            if witness:
                break
    rep.add("counit_multiplicative", witness is None, witness)

    # antipode convolution identities
    wl = wr = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H._d[i].items():
            _iadd(left, H.mul(H._s[j], {k: c}))
            _iadd(right, H.mul({j: c}, H._s[k]))
        target = vec_scale(one, H._eps[i])
        if wl is None and left != target:
            wl = _lbl(H, i)
        if wr is None and right != target:
            wr = _lbl(H, i)
    rep.add("antipode_left", wl is None, wl)
    rep.add("antipode_right", wr is None, wr)
    rep.add("antipode_invertible", inverse(H.antipode) is not None)
    return rep


# -- derived Hopf algebras -------------------------------------------------

def _raw_dual(H: HopfAlgebra) -> HopfAlgebra:
    n = H.dim
    mult = {}
    for k in range(n):
        for (i, j), c in H._d[k].items():
            mult.setdefault((i, j), {})
            mult[(i, j)][k] = mult[(i, j)].get(k, Cyc.zero(H.L)) + c
    comult = {}
    for i in range(n):
        for j in range(n):
            for k, c in H._m[i][j].items():
                comult.setdefault(k, {})
                comult[k][(i, j)] = c
    unit = {i: e for i, e in enumerate(H._eps) if e}
    counit = dict(H._unit)
    antipode = {}
    for j in range(n):
        for i, c in H._s[j].items():
            antipode.setdefault(i, {})[j] = c
    labels = [f"{b}^*" for b in H.labels]
    md = {"name": f"dual({H.metadata.get('name', '')})"}
    return HopfAlgebra(labels, {k: _clean(v) for k, v in mult.items()}, unit, comult, counit, antipode, H.L, md)


def change_basis(H: HopfAlgebra, vectors: list[dict], labels=None, metadata=None) -> HopfAlgebra:
    """Re-express H on the basis ``vectors`` (given in H's coordinates)."""
    n = H.dim
    P = Mat.from_columns(vectors, n, H.L)
    Pinv = inverse(P)
    if Pinv is None:
        raise ValueError("new basis vectors are not linearly independent")
    cols = [Pinv.column(j) for j in range(n)]

    def to_new(v: dict) -> dict:
        out: dict = {}
        for i, x in v.items():
            _iadd(out, cols[i], x)
        return out

    def to_new2(X: dict) -> dict:
        out: dict = {}
        for (i, j), x in X.items():
            for a, u in cols[i].items():
                for b, w in cols[j].items():
                    _iadd(out, {(a, b): x * u * w})
        return out

    mult = {(a, b): to_new(H.mul(vectors[a], vectors[b])) for a in range(n) for b in range(n)}
    comult = {a: to_new2(H.comul(vectors[a])) for a in range(n)}
    antipode = {a: to_new(H.S(vectors[a])) for a in range(n)}
    counit = [H.eps(v) for v in vectors]
    unit = to_new(H.one())
    md = dict(H.metadata)
    for key in ("grouplikes", "generators"):
        if key in md:
            md[key] = [to_new(v) for v in md[key]]
    md.pop("dual_basis", None)
    md.update(metadata or {})
    return HopfAlgebra(labels or [f"v{i}" for i in range(n)], mult, unit, comult, counit, antipode, H.L, md)


def dual(H: HopfAlgebra, basis=None) -> HopfAlgebra:
    """The dual Hopf algebra H*.

    By default the dual basis b^i is used.  ``basis`` may be a pair
    ``(functionals, labels)`` with functionals in dual-basis coordinates, or
    the string ``"tagged"`` to use ``metadata['dual_basis']`` when present;
    in that case the tagged ``dual_grouplikes``/``dual_generators`` (given
    in coordinates of that basis) become the grouplikes/generators of the
    result.
    """
    D = _raw_dual(H)
    if isinstance(basis, str):
        basis = H.metadata.get("dual_basis")
    if basis is None:
        return D
    vectors, labels = basis
    out = change_basis(D, vectors, labels)
    # tagged vectors are given in coordinates of the new basis
    for src, dst in (("dual_grouplikes", "grouplikes"), ("dual_generators", "generators")):
        if src in H.metadata:
            out.metadata[dst] = [dict(v) for v in H.metadata[src]]
    return out


def coopposite(H: HopfAlgebra) -> HopfAlgebra:
    """H^cop: same algebra, flipped comultiplication, antipode S^-1."""
    n = H.dim
    comult = {i: {(k, j): c for (j, k), c in H._d[i].items()} for i in range(n)}
    antipode = {i: H.S_inv({i: Cyc.one(H.L)}) for i in range(n)}
    mult = {(i, j): H._m[i][j] for i in range(n) for j in range(n)}
    md = dict(H.metadata)
    md["name"] = f"cop({H.metadata.get('name', '')})"
    return HopfAlgebra(H.labels, mult, H._unit, comult, H._eps, antipode, H.L, md)


def same_structure(A: HopfAlgebra, B: HopfAlgebra) -> bool:
    """Exact equality of all structure constants (basis order matters)."""
    return (
        A.dim == B.dim
        and A._m == B._m
        and A._d == B._d
        and A._unit == B._unit
        and A._eps == B._eps
        and A._s == B._s
    )


# -- centers and class functions ------------------------------------------

def center_basis(H: HopfAlgebra) -> Subspace:
    """Z(H) as the kernel of the commutator maps z -> [z, g]."""
    n = H.dim
    ech = Echelon(n)
    for g in algebra_generators(H):
        # row k of z -> z g - g z, as a functional of z
        rows: dict[int, dict] = {}
        for j in range(n):
            d = vec_sub(H.mul({j: Cyc.one(H.L)}, g), H.mul(g, {j: Cyc.one(H.L)}))
            for k, c in d.items():
                rows.setdefault(k, {})[j] = c
        for k in sorted(rows):
            ech.add(rows[k])
            if len(ech) == n - 1:
                break
    return Subspace(n, ech.annihilator(H.L), H.L)


def s_squared(H: HopfAlgebra) -> Mat:
    cols = [H.S(H._s[i]) for i in range(H.dim)]
    return Mat.from_columns(cols, H.dim, H.L)


def class_functions_basis(H: HopfAlgebra) -> Subspace:
    """{f in H* : f(b a) = f(a S^2(b))}, in dual-basis coordinates."""
    n = H.dim
    ech = Echelon(n)
    for g in algebra_generators(H):
        s2g = H.S(H.S(g))
        for a in range(n):
            e = {a: Cyc.one(H.L)}
            v = vec_sub(H.mul(g, e), H.mul(e, s2g))
            if v:
                ech.add(v)
                if len(ech) == n - 1:
                    break
        if len(ech) == n - 1:
            break
    return Subspace(n, ech.annihilator(H.L), H.L)


def is_grouplike(H: HopfAlgebra, v: dict) -> bool:
    return bool(v) and H.comul(v) == _outer(v, v) and H.eps(v) == 1


# -- ideals and quotients --------------------------------------------------

def ideal_closure(H: HopfAlgebra, generators: list[dict], limit: int | None = None) -> Subspace:
    """Smallest two-sided ideal containing ``generators``.

    With ``limit`` the closure stops early once the dimension exceeds it
    (the result is then only a subspace of the ideal).
    """
    ech = Echelon(H.dim)
    queue = deque()
    for v in generators:
        v = _clean(v)
        if ech.add(v):
            queue.append(v)
    gens = algebra_generators(H)
    cap = H.dim if limit is None else min(H.dim, limit + 1)
    while queue and len(ech) < cap:
        v = queue.popleft()
        for g in gens:
            for w in (H.mul(g, v), H.mul(v, g)):
                if w and ech.add(w):
                    queue.append(w)
    return Subspace(H.dim, ech, H.L)


class _Projection:
    """H -> H/I on the complement basis of I's echelon form."""

    def __init__(self, H: HopfAlgebra, I: Subspace):
        self.H = H
        ech = I.echelon
        self.comp = ech.complement()
        self.pos = {c: a for a, c in enumerate(self.comp)}
        self.images = []
        for k in range(H.dim):
            if k in self.pos:
                self.images.append({self.pos[k]: Cyc.one(H.L)})
            else:
                row = ech.rows[k]
                self.images.append({self.pos[c]: -x for c, x in row.items() if c != k})

    def __call__(self, v: dict) -> dict:
        out: dict = {}
        for i, x in v.items():
            _iadd(out, self.images[i], x)
        return out

    def pair(self, X: dict) -> dict:
        out: dict = {}
        for (i, j), x in X.items():
            pi, pj = self.images[i], self.images[j]
            for a, u in pi.items():
                for b, w in pj.items():
                    _iadd(out, {(a, b): x * u * w})
        return out


def hopf_ideal_checks(H: HopfAlgebra, I: Subspace) -> Report:
    rep = Report(title="Hopf ideal conditions")
    gens = algebra_generators(H)
    basis = I.basis
    w = next(((H.format(g), k) for k, v in enumerate(basis) for g in gens
              if not (I.contains(H.mul(g, v)) and I.contains(H.mul(v, g)))), None)
    rep.add("two_sided_ideal", w is None, w)
    w = next((k for k, v in enumerate(basis) if H.eps(v)), None)
    rep.add("counit_vanishes", w is None, w)
    w = next((k for k, v in enumerate(basis) if not I.contains(H.S(v))), None)
    rep.add("antipode_stable", w is None, w)
    proj = _Projection(H, I)
    w = next((k for k, v in enumerate(basis) if proj.pair(H.comul(v))), None)
    rep.add("coideal", w is None, w)
    return rep


def hopf_quotient(H: HopfAlgebra, I: Subspace, name: str | None = None) -> HopfAlgebra:
    """H/I on the complement basis (lowest indices not used as pivots)."""
    rep = hopf_ideal_checks(H, I)
    for c in rep.checks.values():
        if not c.ok:
            raise NotHopfIdeal(c.name, c.witness)
    proj = _Projection(H, I)
    comp = proj.comp
    q = len(comp)
    mult = {(a, b): proj(H.basis_mul(comp[a], comp[b])) for a in range(q) for b in range(q)}
    comult = {a: proj.pair(H._d[comp[a]]) for a in range(q)}
    antipode = {a: proj(H._s[comp[a]]) for a in range(q)}
    counit = [H._eps[c] for c in comp]
    unit = proj(H.one())
    md = {k: v for k, v in H.metadata.items() if k not in ("grouplikes", "generators", "dual_basis")}
    md["name"] = name or f"{H.metadata.get('name', 'H')}/I"
    for key in ("grouplikes", "generators"):
        if key in H.metadata:
            imgs = []
            for v in H.metadata[key]:
                pv = proj(v)
                if pv and pv not in imgs:
                    imgs.append(pv)
            md[key] = imgs
    md["projection"] = proj
    return HopfAlgebra([H.labels[c] for c in comp], mult, unit, comult, counit, antipode, H.L, md)

