"""Command line front end.

Exit codes: 0 success, 1 a property failed, 2 the input could not be used.
Any PATH argument may also be ``zoo://<descriptor>`` to build a zoo member
in memory; ``crosscheck`` additionally accepts ``zoo://all``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .hopf import verify_hopf
from .io import (
    ParseError,
    braided_from_json,
    braided_to_json,
    dumps,
    hopf_from_json,
    hopf_to_json,
    load,
    save,
    yd_from_json,
    yd_to_json,
)
from .qt import QTStructure, theorem1_crosscheck, verify_qt
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

ZOO_PREFIX = "zoo://"


class MissingRMatrix(ValueError):
    pass


class InputError(Exception):
    """Anything that maps to exit code 2."""


def _input_errors():
    from .scalar import ScalarParseError
    from .zoo import DescriptorError, IncompatibleExponents, NotPrimitiveRoot

    return (ParseError, ScalarParseError, DescriptorError, IncompatibleExponents,
            NotPrimitiveRoot, MissingRMatrix, InputError)


def _open_algebra(ref: str):
    """HopfAlgebra or QTStructure from a path or a zoo:// reference."""
    if ref.startswith(ZOO_PREFIX):
        from .zoo import build

        return build(ref[len(ZOO_PREFIX):])
    return hopf_from_json(load(ref))


def _require_qt(obj, ref: str) -> QTStructure:
    if not isinstance(obj, QTStructure):
        raise MissingRMatrix(f"{ref} has no R-matrix")
    return obj


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _meta(ref: str, t0: float, args) -> dict:
    d = {"input": ref, "tool_version": __version__}
    if getattr(args, "timing", False):
        d["seconds"] = round(time.perf_counter() - t0, 3)
    return d


# -- subcommands -------------------------------------------------------------

def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    obj = _open_algebra(args.path)
    H = obj.H if isinstance(obj, QTStructure) else obj
    rep = verify_hopf(H, full=args.full)
    if isinstance(obj, QTStructure):
        rep.merge(verify_qt(obj, full=args.full), prefix="qt.")
    payload = {**_meta(args.path, t0, args), "ok": rep.ok, **rep.to_dict()}
    _emit(args, payload, str(rep))
    return EXIT_OK if rep.ok else EXIT_FAIL


def _analysis(ref: str, obj, args) -> tuple[dict, Report]:
    t0 = time.perf_counter()
    QT = _require_qt(obj, ref)
    axioms = verify_hopf(QT.H)
    axioms.merge(verify_qt(QT), prefix="qt.")
    if not axioms.ok:
        payload = {**_meta(ref, t0, args), "consistent": False, **axioms.to_dict()}
        return payload, axioms
    rep = theorem1_crosscheck(QT, axioms)
    payload = {**_meta(ref, t0, args), **rep.to_dict()}
    return payload, rep


def cmd_report(args) -> int:
    payload, rep = _analysis(args.path, _open_algebra(args.path), args)
    _emit(args, payload, str(rep))
    return EXIT_OK if rep.ok and payload.get("consistent") else EXIT_FAIL


def cmd_crosscheck(args) -> int:
    from .zoo import zoo_members

    refs = []
    for p in args.paths:
        if p == ZOO_PREFIX + "all":
            refs += [ZOO_PREFIX + d for d in zoo_members(include_large=not args.skip_large)]
        else:
            refs.append(p)
    results, code = [], EXIT_OK
    for ref in refs:
        payload, rep = _analysis(ref, _open_algebra(ref), args)
        ok = rep.ok and bool(payload.get("consistent"))
        if not ok:
            code = EXIT_FAIL
        results.append(payload)
        if not args.json:
            keys = ("factorizable", "weakly_factorizable", "muger_trivial", "omega_rank")
            summary = " ".join(f"{k}={payload.get(k)}" for k in keys)
            print(f"{'ok  ' if ok else 'FAIL'} {ref}: {summary}")
    if args.json:
        print(json.dumps(results, indent=2))
    return code


def cmd_zoo(args) -> int:
    from .zoo import build, zoo_members

    if args.zoo_cmd == "list":
        for d in zoo_members():
            print(d)
        return EXIT_OK
    obj = build(args.descriptor)
    text = dumps(hopf_to_json(obj))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_ints(text: str, sep: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(sep) if x != ""]
    except ValueError:
        raise InputError(f"bad {what}: {text!r}") from None


def cmd_pointed(args) -> int:
    from .pointed import (
        Bicharacter,
        FinAbGroup,
        check_centralizer_identities,
        pointed_omega_rank,
        pointed_vs_hopf_crosscheck,
        radical,
        symmetric_form,
    )

    factors = _parse_ints(args.group, "x", "--group")
    vals = _parse_ints(args.chi, ",", "--chi")
    k = len(factors)
    if not factors or len(vals) != k * k:
        raise InputError(f"--chi needs {k * k} comma-separated exponents")
    try:
        G = FinAbGroup(factors)
    except ValueError as e:
        raise InputError(str(e)) from None
    chi = Bicharacter(G, [vals[i * k:(i + 1) * k] for i in range(k)], args.root)
    beta = symmetric_form(chi)
    ident = check_centralizer_identities(beta)
    payload = {
        "group": G.factors,
        "radical_order": len(radical(beta)),
        "omega_rank": pointed_omega_rank(beta),
        "identities_ok": ident.ok,
        "subgroups_checked": ident.data["subgroups_checked"],
    }
    ok = ident.ok
    if args.bridge:
        br = pointed_vs_hopf_crosscheck(chi)
        payload["bridge_ok"] = br.ok
        payload["hopf_omega_rank"] = br.data["hopf_omega_rank"]
        ok = ok and br.ok
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def _open_yd_context(args):
    base = _require_qt(_open_algebra(args.base), args.base)
    B = braided_from_json(load(args.over), base)
    return base, B


def cmd_yd(args) -> int:
    from .yd import (
        adjoint_yd_P,
        coadjoint_yd_Q,
        HModule,
        nichols_truncated_line,
        regular_yd,
        trivial_yd_embed,
        verify_braided_hopf,
        verify_yd_module,
        yd_muger_membership,
        yd_muger_witness,
    )

    if args.yd_cmd == "build":
        B = nichols_truncated_line(args.N)
        QT = B.qt
        QT.H.metadata.setdefault("descriptor", f"gbichar:{args.N}:1:{args.N}")
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        save(hopf_to_json(QT), out / "H.json")
        save(braided_to_json(B), out / "B.json")
        mods = {
            "P": adjoint_yd_P(B),
            "Q": coadjoint_yd_Q(B),
            "T": trivial_yd_embed(HModule.trivial(QT.H), B),
            "REG": regular_yd(B),
        }
        for name, M in mods.items():
            save(yd_to_json(M, B), out / f"{name}.json")
        print(f"wrote H.json B.json {' '.join(n + '.json' for n in mods)} to {out}")
        return EXIT_OK

    QT, B = _open_yd_context(args)
    M = yd_from_json(load(args.module), B)
    if args.yd_cmd == "verify":
        rep = verify_braided_hopf(B, QT)
        rep.merge(verify_yd_module(M, B, QT), prefix="yd.")
        _emit(args, {"input": args.module, "ok": rep.ok, **rep.to_dict()}, str(rep))
        return EXIT_OK if rep.ok else EXIT_FAIL
    # muger
    check = verify_yd_module(M, B, QT)
    if not check.ok:
        _emit(args, {"input": args.module, "ok": False, **check.to_dict()}, str(check))
        return EXIT_FAIL
    member = yd_muger_membership(M, B, QT)
    payload = {"input": args.module, "member": member}
    if not member:
        payload["witness"] = yd_muger_witness(M, B, QT)
    _emit(args, payload, "true" if member else "false")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hopfkit {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--timing", action="store_true", help="include wall time in the output")

    sp = sub.add_parser("verify", help="check Hopf (and quasitriangular) axioms")
    sp.add_argument("path")
    sp.add_argument("--full", action="store_true", help="check every basis triple")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("report", help="full non-degeneracy analysis of a QT Hopf algebra")
    sp.add_argument("path")
    common(sp)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("crosscheck", help="analysis of several inputs; nonzero exit if any is inconsistent")
    sp.add_argument("paths", nargs="+")
    sp.add_argument("--skip-large", action="store_true", help="leave out the 81-dimensional double")
    common(sp)
    sp.set_defaults(func=cmd_crosscheck)

    sp = sub.add_parser("zoo", help="build the standard examples")
    zsub = sp.add_subparsers(dest="zoo_cmd", required=True)
    zb = zsub.add_parser("build")
    zb.add_argument("descriptor")
    zb.add_argument("-o", "--output")
    zsub.add_parser("list")
    sp.set_defaults(func=cmd_zoo)

    sp = sub.add_parser("pointed", help="metric group model of a pointed braided category")
    sp.add_argument("--group", required=True, help="invariant factors, e.g. 4 or 12x3")
    sp.add_argument("--chi", required=True, help="exponent matrix, row-major, comma-separated")
    sp.add_argument("--root", type=int, required=True, help="chi(g_i, g_j) = zeta_root^E_ij")
    sp.add_argument("--bridge", action="store_true", help="also compare with the Hopf pipeline")
    common(sp)
    sp.set_defaults(func=cmd_pointed)

    sp = sub.add_parser("yd", help="Yetter-Drinfeld modules over a braided Hopf algebra")
    ysub = sp.add_subparsers(dest="yd_cmd", required=True)
    for name, hlp in (("verify", "check the YD module axioms"), ("muger", "decide Mueger-center membership")):
        y = ysub.add_parser(name, help=hlp)
        y.add_argument("module")
        y.add_argument("--over", required=True, help="braided Hopf algebra JSON")
        y.add_argument("--base", required=True, help="quasitriangular base Hopf algebra (JSON or zoo://)")
        common(y)
    yb = ysub.add_parser("build", help="write H, B, P, Q, T and REG for the truncated line of order N")
    yb.add_argument("N", type=int)
    yb.add_argument("--out-dir", required=True)
    sp.set_defaults(func=cmd_yd)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _input_errors() as e:
        print(f"hopfkit: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
