"""Exact linear algebra over Q(zeta_L).

Vectors are sparse dicts ``{index: Cyc}`` with zeros dropped.  Everything
rank-like goes through :class:`Echelon`, an incremental fully reduced
echelon form whose pivot is the *highest* nonzero index of each row.  Using
the highest index means the free (complement) coordinates are the lowest
ones, which keeps quotient bases anchored at the unit.

Tensor index convention, fixed project-wide: the pair (i, j) of an
``m``-by-``n`` tensor product maps to the flat index ``i * n + j``
(left factor major).
"""

from __future__ import annotations

from typing import Iterable

from .scalar import Cyc, as_cyc, common_conductor

__all__ = [
    "Echelon",
    "Mat",
    "Subspace",
    "vec_add",
    "vec_scale",
    "vec_sub",
    "vec_dot",
    "rank",
    "kernel_basis",
    "solve",
    "inverse",
    "kron",
    "subspace_sum",
    "subspace_intersect",
    "subspace_contains",
]


# -- sparse vectors -------------------------------------------------------

def vec_add(u: dict, v: dict, s=None) -> dict:
    """u + s*v as a new dict (s defaults to 1)."""
    out = dict(u)
    for k, x in v.items():
        if s is not None:
            x = s * x
        y = out.get(k)
        if y is None:
            if x:
                out[k] = x
        else:
            y = y + x
            if y:
                out[k] = y
            else:
                del out[k]
    return out


def _iadd(u: dict, v: dict, s=None) -> None:
    for k, x in v.items():
        if s is not None:
            x = s * x
        y = u.get(k)
        if y is None:
            if x:
                u[k] = x
        else:
            y = y + x
            if y:
                u[k] = y
            else:
                del u[k]


def vec_sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        if y is None:
            out[k] = -x
        else:
            y = y - x
            if y:
                out[k] = y
            else:
                del out[k]
    return out


def vec_scale(v: dict, s) -> dict:
    if not s:
        return {}
    return {k: s * x for k, x in v.items()}


def vec_dot(u: dict, v: dict):
    if len(u) > len(v):
        u, v = v, u
    acc = None
    for k, x in u.items():
        y = v.get(k)
        if y is not None:
            acc = x * y if acc is None else acc + x * y
    return acc


# -- echelon engine -------------------------------------------------------

class Echelon:
    """Incrementally maintained reduced row echelon basis.

    Each stored row is normalized to 1 at its pivot (its highest index) and
    vanishes at every other pivot.
    """

    def __init__(self, ambient_dim: int, vectors: Iterable[dict] = ()):
        self.n = ambient_dim
        self.rows: dict[int, dict] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon(self.n)
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        return e

    def reduce(self, v: dict) -> dict:
        """Residual of v modulo the span (zero dict iff v is in the span)."""
        w = dict(v)
        rows = self.rows
        for p in sorted((p for p in w if p in rows), reverse=True):
            c = w.get(p)
            if c:
                _iadd(w, rows[p], -c)
        return w

    def add(self, v: dict) -> bool:
        """Add v to the span; returns True if the dimension grew."""
        w = self.reduce(v)
        if not w:
            return False
        p = max(w)
        inv = w[p].inv()
        w = {k: x * inv for k, x in w.items()}
        w[p] = Cyc.one(w[p].L)
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                _iadd(row, w, -c)
        self.rows[p] = w
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def coords(self, v: dict) -> dict:
        """Coefficients of v on the stored rows, keyed by pivot.

        Raises ValueError if v is not in the span.
        """
        if self.reduce(v):
            raise ValueError("vector is not in the span")
        return {p: v[p] for p in self.rows if p in v}

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in self.pivots]

    def complement(self) -> list[int]:
        """Indices of the coordinate vectors completing the span to K^n."""
        return [i for i in range(self.n) if i not in self.rows]

    def annihilator(self, L: int) -> list[dict]:
        """Basis of {x : <row, x> = 0 for every row} (standard pairing)."""
        out = []
        one = Cyc.one(L)
        for c in self.complement():
            x = {c: one}
            for p, row in self.rows.items():
                a = row.get(c)
                if a:
                    x[p] = -a
            out.append(x)
        return out


# -- matrices -------------------------------------------------------------

class Mat:
    """Sparse-row matrix with a dense-matrix interface.

    ``rows[i]`` is a dict ``{col: Cyc}``.  Matrices act on column vectors:
    the image of the j-th basis vector is column j.
    """

    __slots__ = ("nrows", "ncols", "rows", "L")

    def __init__(self, nrows: int, ncols: int, rows=None, L: int = 1):
        self.nrows = nrows
        self.ncols = ncols
        self.L = L
        if rows is None:
            rows = [{} for _ in range(nrows)]
        self.rows = rows

    # constructors
    @classmethod
    def zeros(cls, nrows, ncols, L=1):
        return cls(nrows, ncols, None, L)

    @classmethod
    def identity(cls, n, L=1):
        one = Cyc.one(L)
        return cls(n, n, [{i: one} for i in range(n)], L)

    @classmethod
    def from_dense(cls, entries, L=None):
        entries = [list(r) for r in entries]
        if L is None:
            L = common_conductor(*(x for r in entries for x in r if isinstance(x, Cyc)))
        nrows = len(entries)
        ncols = len(entries[0]) if entries else 0
        rows = []
        for r in entries:
            d = {}
            for j, x in enumerate(r):
                x = as_cyc(x, L)
                if x:
                    d[j] = x
            rows.append(d)
        return cls(nrows, ncols, rows, L)

    @classmethod
    def from_columns(cls, cols: list[dict], nrows: int, L: int):
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, x in col.items():
                if x:
                    rows[i][j] = x
        return cls(nrows, len(cols), rows, L)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        x = self.rows[i].get(j)
        return x if x is not None else Cyc.zero(self.L)

    def entries(self) -> list:
        """Row-major dense list of entries."""
        z = Cyc.zero(self.L)
        return [self.rows[i].get(j, z) for i in range(self.nrows) for j in range(self.ncols)]

    def to_dense(self) -> list[list]:
        z = Cyc.zero(self.L)
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def columns(self) -> list[dict]:
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                cols[j][i] = x
        return cols

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def T(self) -> "Mat":
        return Mat.from_columns(self.rows, self.ncols, self.L)

    transpose = T

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    # arithmetic
    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            orows = other.rows
            out = []
            for r in self.rows:
                acc: dict = {}
                for k, x in r.items():
                    ok = orows[k]
                    if ok:
                        _iadd(acc, ok, x)
                out.append(acc)
            return Mat(self.nrows, other.ncols, out, self.L)
        if isinstance(other, dict):
            return self.apply(other)
        return NotImplemented

    def apply(self, v: dict) -> dict:
        out = {}
        for i, r in enumerate(self.rows):
            s = vec_dot(r, v)
            if s:
                out[i] = s
        return out

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat(self.nrows, self.ncols, [vec_add(a, b) for a, b in zip(self.rows, other.rows)], self.L)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat(self.nrows, self.ncols, [vec_sub(a, b) for a, b in zip(self.rows, other.rows)], self.L)

    def __neg__(self):
        return Mat(self.nrows, self.ncols, [{k: -x for k, x in r.items()} for r in self.rows], self.L)

    def scale(self, s) -> "Mat":
        return Mat(self.nrows, self.ncols, [vec_scale(r, s) for r in self.rows], self.L)

    def __mul__(self, s):
        if isinstance(s, Mat):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.rows, other.rows))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def first_difference(self, other: "Mat"):
        """(i, j) of the first entry where the matrices differ, or None."""
        self._check_same(other)
        for i, (a, b) in enumerate(zip(self.rows, other.rows)):
            if a != b:
                d = vec_sub(a, b)
                return (i, min(d))
        return None

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols}, nnz={self.nnz()}, L={self.L})"

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> list[dict]:
        return kernel_basis(self)

    def inverse(self):
        return inverse(self)


# -- dense-matrix operations ----------------------------------------------

def rank(M: Mat) -> int:
    e = Echelon(M.ncols)
    for r in M.rows:
        if r:
            e.add(r)
            if len(e) == M.ncols:
                break
    return len(e)


def kernel_basis(M: Mat) -> list[dict]:
    """Basis of {x : M x = 0} as sparse vectors."""
    e = Echelon(M.ncols)
    for r in M.rows:
        if r:
            e.add(r)
    return e.annihilator(M.L)


def solve(M: Mat, b: dict):
    """Some x with M x = b, or None if the system is inconsistent."""
    # augmented rows carry b at key -1, below every real column
    e = Echelon(M.ncols)
    for i, r in enumerate(M.rows):
        v = dict(r)
        if b.get(i):
            v[-1] = b[i]
        if v:
            e.add(v)
    if -1 in e.rows:
        return None
    x = {}
    for p, row in e.rows.items():
        c = row.get(-1)
        if c:
            x[p] = c
    return x


def inverse(M: Mat):
    """Exact inverse, or None when M is singular or not square."""
    n = M.nrows
    if n != M.ncols:
        return None
    one = Cyc.one(M.L)
    e = Echelon(n)
    for i, r in enumerate(M.rows):
        v = dict(r)
        v[-1 - i] = one
        e.add(v)
    if any(p < 0 for p in e.rows) or sum(1 for p in e.rows if p >= 0) != n:
        return None
    rows = []
    for p in range(n):
        row = e.rows[p]
        rows.append({-1 - k: x for k, x in row.items() if k < 0})
    return Mat(n, n, rows, M.L)


def kron(A: Mat, B: Mat) -> Mat:
    """Kronecker product; (i, j) -> i * dim_B + j."""
    rows = []
    bc = B.ncols
    for ra in A.rows:
        for rb in B.rows:
            d = {}
            for ja, x in ra.items():
                base = ja * bc
                for jb, y in rb.items():
                    d[base + jb] = x * y
            rows.append(d)
    return Mat(A.nrows * B.nrows, A.ncols * B.ncols, rows, A.L)


# -- subspaces ------------------------------------------------------------

class Subspace:
    """Subspace of K^n with a canonical echelonized basis."""

    def __init__(self, ambient_dim: int, vectors: Iterable[dict] = (), L: int = 1):
        self.L = L
        self.ambient_dim = ambient_dim
        self._ech = vectors if isinstance(vectors, Echelon) else Echelon(ambient_dim, vectors)

    @property
    def basis(self) -> list[dict]:
        return self._ech.basis()

    @property
    def echelon(self) -> Echelon:
        return self._ech

    @property
    def dim(self) -> int:
        return len(self._ech)

    def __len__(self):
        return self.dim

    def contains(self, v: dict) -> bool:
        return self._ech.contains(v)

    __contains__ = contains

    def annihilator(self) -> "Subspace":
        return Subspace(self.ambient_dim, self._ech.annihilator(self.L), self.L)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    e = A.echelon.copy()
    for v in B.basis:
        e.add(v)
    return Subspace(A.ambient_dim, e, A.L)


def subspace_intersect(A: Subspace, B: Subspace) -> Subspace:
    # ann(A n B) = ann(A) + ann(B)
    return subspace_sum(A.annihilator(), B.annihilator()).annihilator()


def subspace_contains(A: Subspace, B) -> bool:
    """True if every vector of B (a Subspace or a list of vectors) lies in A."""
    vecs = B.basis if isinstance(B, Subspace) else B
    return all(A.contains(v) for v in vecs)
