"""JSON interchange for Hopf algebras, braided Hopf algebras and YD modules.

Every scalar is a string in the scalar grammar (``"-3/4"``, ``"z^2-1"``)
read with z = zeta_L for the file-level ``conductor`` L.  Sparse tensors are
lists of index tuples followed by the scalar:

* ``mult``:     ``[i, j, k, c]``  means  b_i b_j  has coefficient c on b_k
* ``comult``:   ``[i, j, k, c]``  means  Delta(b_i) has coefficient c on b_j (x) b_k
* ``antipode``: ``[i, j, c]``     means  S(b_j) has coefficient c on b_i
* ``R``:        ``[i, j, c]``     means  R = sum c b_i (x) b_j

Matrices (YD files) are ``{"shape": [rows, cols], "entries": [[i, j, c], ...]}``.
Serialization is canonical: entries sorted, fixed key order, so
``dumps(loads(text)) == text`` for any file this module wrote.
"""

from __future__ import annotations

import json
from pathlib import Path

from .hopf import HopfAlgebra
from .linalg import Mat
from .qt import QTStructure
from .scalar import Cyc, ScalarParseError, parse_scalar

__all__ = [
    "ParseError",
    "hopf_to_json",
    "hopf_from_json",
    "braided_to_json",
    "braided_from_json",
    "yd_to_json",
    "yd_from_json",
    "dumps",
    "loads",
    "load",
    "save",
]

FORMAT_VERSION = 1


class ParseError(ValueError):
    """Malformed or inconsistent input file."""


# -- scalars and small pieces ----------------------------------------------

def _s(c: Cyc) -> str:
    return str(c)


def _scalar(x, L: int, where: str) -> Cyc:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"{where}: scalar must be a string, got {x!r}")
    try:
        return parse_scalar(str(x), L)
    except ScalarParseError as e:
        raise ParseError(f"{where}: {e}") from None


def _int(x, where: str, lo: int = 0, hi: int | None = None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{where}: expected an integer, got {x!r}")
    if x < lo or (hi is not None and x >= hi):
        raise ParseError(f"{where}: index {x} out of range")
    return x


def _field(obj: dict, key: str, where: str = "file"):
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    return obj[key]


def _list(x, where: str) -> list:
    if not isinstance(x, list):
        raise ParseError(f"{where}: expected a list")
    return x


def _sparse(entries, arity: int, n: int, L: int, where: str) -> dict:
    out = {}
    for t, e in enumerate(_list(entries, where)):
        if not isinstance(e, list) or len(e) != arity + 1:
            raise ParseError(f"{where}[{t}]: expected {arity} indices and a scalar")
        key = tuple(_int(i, f"{where}[{t}]", 0, n) for i in e[:arity])
        if key in out:
            raise ParseError(f"{where}[{t}]: duplicate entry {list(key)}")
        c = _scalar(e[arity], L, f"{where}[{t}]")
        if c:
            out[key] = c
    return out


def _mat_to_json(M: Mat) -> dict:
    entries = [[i, j, _s(c)] for i, row in enumerate(M.rows) for j, c in sorted(row.items())]
    return {"shape": [M.nrows, M.ncols], "entries": entries}


def _mat_from_json(obj, L: int, where: str, shape=None) -> Mat:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected a matrix object")
    sh = _list(_field(obj, "shape", where), f"{where}.shape")
    if len(sh) != 2:
        raise ParseError(f"{where}.shape: expected [rows, cols]")
    r, c = (_int(v, f"{where}.shape") for v in sh)
    if shape is not None and (r, c) != tuple(shape):
        raise ParseError(f"{where}: shape {[r, c]} but expected {list(shape)}")
    rows = [{} for _ in range(r)]
    for t, e in enumerate(_list(_field(obj, "entries", where), f"{where}.entries")):
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError(f"{where}.entries[{t}]: expected [i, j, scalar]")
        i = _int(e[0], f"{where}.entries[{t}]", 0, r)
        j = _int(e[1], f"{where}.entries[{t}]", 0, c)
        if j in rows[i]:
            raise ParseError(f"{where}.entries[{t}]: duplicate entry")
        v = _scalar(e[2], L, f"{where}.entries[{t}]")
        if v:
            rows[i][j] = v
    return Mat(r, c, rows, L)


def _header(obj, kind: str) -> tuple[int, int]:
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    if obj.get("kind", "hopf") != kind:
        raise ParseError(f"expected kind {kind!r}, got {obj.get('kind')!r}")
    L = _int(_field(obj, "conductor"), "conductor", 1)
    n = _int(_field(obj, "dim"), "dim", 1)
    return L, n


# -- Hopf algebras -----------------------------------------------------------

def _element_ref(H: HopfAlgebra, v: dict):
    # a basis vector with coefficient 1 is written as its label
    if len(v) == 1:
        (i, c), = v.items()
        if c == 1:
            return H.labels[i]
    return [[i, _s(c)] for i, c in sorted(v.items())]


def _element_from_ref(ref, labels, L: int, where: str) -> dict:
    if isinstance(ref, str):
        if ref not in labels:
            raise ParseError(f"{where}: unknown basis label {ref!r}")
        return {labels.index(ref): Cyc.one(L)}
    out = {}
    for t, e in enumerate(_list(ref, where)):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"{where}[{t}]: expected [index, scalar]")
        i = _int(e[0], where, 0, len(labels))
        c = _scalar(e[1], L, where)
        if c:
            out[i] = c
    return out


_ELEMENT_LISTS = ("grouplikes", "generators")


def _plain(x) -> bool:
    if x is None or isinstance(x, (bool, int, str)):
        return True
    if isinstance(x, (list, tuple)):
        return all(_plain(v) for v in x)
    return False


def _metadata_to_json(H: HopfAlgebra) -> dict:
    out = {}
    for key in sorted(H.metadata):
        val = H.metadata[key]
        if key in _ELEMENT_LISTS:
            out[key] = [_element_ref(H, v) for v in val]
        elif _plain(val):
            out[key] = json.loads(json.dumps(val))
    return out


def hopf_to_json(A) -> dict:
    """Serialize a HopfAlgebra or a QTStructure (which adds ``R``)."""
    QT = A if isinstance(A, QTStructure) else None
    H = QT.H if QT is not None else A
    n = H.dim
    mult = [
        [i, j, k, _s(c)]
        for i in range(n) for j in range(n) for k, c in sorted(H._m[i][j].items())
    ]
    comult = [[i, j, k, _s(c)] for i in range(n) for (j, k), c in sorted(H._d[i].items())]
    antipode = sorted(
        ([i, j, _s(c)] for j in range(n) for i, c in H._s[j].items()),
        key=lambda e: (e[0], e[1]),
    )
    obj = {
        "kind": "hopf",
        "version": FORMAT_VERSION,
        "conductor": H.L,
        "dim": n,
        "basis": list(H.labels),
        "unit": [_s(H._unit.get(i, Cyc.zero(H.L))) for i in range(n)],
        "counit": [_s(e) for e in H._eps],
        "mult": mult,
        "comult": comult,
        "antipode": antipode,
    }
    if QT is not None:
        obj["R"] = [[i, j, _s(c)] for (i, j), c in sorted(QT.R.items())]
    obj["metadata"] = _metadata_to_json(H)
    return obj


def hopf_from_json(obj):
    """Inverse of :func:`hopf_to_json`; returns a QTStructure when ``R`` is present."""
    L, n = _header(obj, "hopf")
    labels = _list(_field(obj, "basis"), "basis")
    if len(labels) != n or not all(isinstance(s, str) for s in labels):
        raise ParseError(f"basis: expected {n} string labels")
    if len(set(labels)) != n:
        raise ParseError("basis: labels must be distinct")
    unit = _list(_field(obj, "unit"), "unit")
    counit = _list(_field(obj, "counit"), "counit")
    if len(unit) != n or len(counit) != n:
        raise ParseError(f"unit/counit: expected {n} scalars each")
    u = {i: c for i, x in enumerate(unit) if (c := _scalar(x, L, f"unit[{i}]"))}
    e = {i: c for i, x in enumerate(counit) if (c := _scalar(x, L, f"counit[{i}]"))}
    mult: dict = {}
    for (i, j, k), c in _sparse(_field(obj, "mult"), 3, n, L, "mult").items():
        mult.setdefault((i, j), {})[k] = c
    comult: dict = {}
    for (i, j, k), c in _sparse(_field(obj, "comult"), 3, n, L, "comult").items():
        comult.setdefault(i, {})[(j, k)] = c
    anti: dict = {}
    for (i, j), c in _sparse(_field(obj, "antipode"), 2, n, L, "antipode").items():
        anti.setdefault(j, {})[i] = c
    meta_in = obj.get("metadata", {})
    if not isinstance(meta_in, dict):
        raise ParseError("metadata: expected an object")
    meta = {}
    for key, val in meta_in.items():
        if key in _ELEMENT_LISTS:
            meta[key] = [
                _element_from_ref(r, labels, L, f"metadata.{key}[{t}]")
                for t, r in enumerate(_list(val, f"metadata.{key}"))
            ]
        else:
            meta[key] = val
    H = HopfAlgebra(labels, mult, u, comult, e, anti, L=L, metadata=meta)
    if "R" in obj:
        return QTStructure(H, _sparse(obj["R"], 2, n, L, "R"))
    return H


# -- braided Hopf algebras and YD modules ----------------------------------------

def braided_to_json(B) -> dict:
    n = B.dim
    return {
        "kind": "braided_hopf",
        "version": FORMAT_VERSION,
        "name": B.name,
        "conductor": B.L,
        "dim": n,
        "basis": list(B.labels),
        "base": B.carrier.H.metadata.get("descriptor", B.carrier.H.metadata.get("name", "")),
        "rho": [_mat_to_json(M) for M in B.carrier.rho],
        "m": _mat_to_json(B.m),
        "u": _mat_to_json(B.u),
        "Delta": _mat_to_json(B.Delta),
        "eps": _mat_to_json(B.eps),
        "S": _mat_to_json(B.S),
    }


def _rho_from_json(obj, H: HopfAlgebra, d: int, where: str) -> list[Mat]:
    rho = _list(_field(obj, "rho", where), f"{where}.rho")
    if len(rho) != H.dim:
        raise ParseError(f"{where}.rho: expected {H.dim} matrices, one per basis element of the base")
    return [_mat_from_json(M, H.L, f"{where}.rho[{i}]", (d, d)) for i, M in enumerate(rho)]


def braided_from_json(obj, QT: QTStructure):
    from .yd import BraidedHopfAlgebra, HModule

    L, n = _header(obj, "braided_hopf")
    if L != QT.L:
        raise ParseError(f"conductor {L} does not match the base conductor {QT.L}")
    labels = _list(_field(obj, "basis"), "basis")
    if len(labels) != n:
        raise ParseError(f"basis: expected {n} labels")
    carrier = HModule(QT.H, _rho_from_json(obj, QT.H, n, "braided"), "B")
    mats = {
        "m": (n, n * n), "u": (n, 1), "Delta": (n * n, n), "eps": (1, n), "S": (n, n),
    }
    parts = {k: _mat_from_json(_field(obj, k), L, k, sh) for k, sh in mats.items()}
    return BraidedHopfAlgebra(carrier, labels=labels, name=obj.get("name", ""), qt=QT, **parts)


def yd_to_json(M, B=None) -> dict:
    d = M.dim
    return {
        "kind": "yd_module",
        "version": FORMAT_VERSION,
        "name": M.name,
        "conductor": M.carrier.L,
        "dim": d,
        "over": B.name if B is not None else M.meta.get("over", ""),
        "rho": [_mat_to_json(X) for X in M.carrier.rho],
        "act": _mat_to_json(M.act),
        "coact": _mat_to_json(M.coact),
    }


def yd_from_json(obj, B):
    from .yd import HModule, YDModule

    L, d = _header(obj, "yd_module")
    if L != B.L:
        raise ParseError(f"conductor {L} does not match the braided algebra's {B.L}")
    H = B.carrier.H
    carrier = HModule(H, _rho_from_json(obj, H, d, "module"), obj.get("name", ""))
    act = _mat_from_json(_field(obj, "act"), L, "act", (d, d * B.dim))
    coact = _mat_from_json(_field(obj, "coact"), L, "coact", (d * B.dim, d))
    return YDModule(carrier, act, coact, obj.get("name", ""), {"over": obj.get("over", "")})


# -- text and files ------------------------------------------------------------

def dumps(obj: dict) -> str:
    """Canonical text: two-space indent, one sparse entry per line."""
    return _render(obj, 0) + "\n"


def _render(x, depth: int) -> str:
    pad = "  " * (depth + 1)
    end = "  " * depth
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_render(v, depth + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(x, list):
        if not x:
            return "[]"
        if all(not isinstance(v, (list, dict)) for v in x):
            return json.dumps(x)
        return "[\n" + ",\n".join(pad + _render(v, depth + 1) for v in x) + "\n" + end + "]"
    return json.dumps(x)


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None


def load(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None
    return loads(text)


def save(obj: dict, path) -> None:
    Path(path).write_text(dumps(obj))
