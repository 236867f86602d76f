"""Command-line front end.

Examples::

    kriordan eval "1/(1-z)^2" --trunc 8
    kriordan matrix --g "1/(1-z)" --f "z/(1-z)" --trunc 5 --format csv
    kriordan rmul --g "1/(1-z^2)" --m z --m "z/(1-z^2)" --trunc 10
    kriordan map --map phi --g "1/(1-z)" --f "z/(1-z)" --trunc 8
    kriordan verify --map chii:3:2 --trials 50 --trunc 18 --seed 7

Exit status: 0 on success, 1 on mathematical domain errors, 2 on usage or
syntax errors.  Results go to standard output, diagnostics to standard
error as a JSON document.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .errors import ArityError, RiordanError
from .expr import ParseError, parse_series
from .matrix import TriangularMatrix
from .morphisms import MapKind, MorphismId, verify_homomorphism
from .morphisms import chi_i, phi_k, psi_checkerboard
from .multi_riordan import KRiordanArray, fundamental_apply, inverse_k, multiply_k, to_matrix_k
from .riordan import RiordanArray, ftra_apply, inverse, multiply, to_matrix
from .series import Series

DEFAULT_TRUNC = 24


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# documents -----------------------------------------------------------------

def _q(c) -> str:
    return str(c)


def series_doc(s: Series) -> dict:
    return {"kind": "series", "trunc": s.trunc, "coeffs": [_q(c) for c in s.coeffs]}


def matrix_doc(m: TriangularMatrix, trunc: int) -> dict:
    return {"kind": "matrix", "trunc": trunc, "size": m.size,
            "rows": [[_q(c) for c in row] for row in m.rows]}


def _as_k(a) -> KRiordanArray:
    return KRiordanArray(a.g, (a.f,)) if isinstance(a, RiordanArray) else a


def array_doc(a) -> dict:
    d = _as_k(a)
    return {"kind": "array", "trunc": d.trunc, "k": d.k,
            "g": [_q(c) for c in d.g.coeffs],
            "multipliers": [[_q(c) for c in m.coeffs] for m in d.multipliers]}


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def render(doc: dict, fmt: str) -> str:
    kind = doc["kind"]
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        if kind == "series":
            return _csv([["n", "coeff"]] + [[n, c] for n, c in enumerate(doc["coeffs"])])
        if kind == "matrix":
            head = ["n\\k"] + list(range(doc["size"]))
            return _csv([head] + [[n] + row for n, row in enumerate(doc["rows"])])
        if kind == "array":
            head = ["n", "g"] + [f"m{i}" for i in range(1, doc["k"] + 1)]
            cols = [doc["g"]] + doc["multipliers"]
            return _csv([head] + [[n] + [c[n] for c in cols] for n in range(doc["trunc"] + 1)])
        rows = [["trial", "check", "component", "position"]]
        rows += [[f["trial"], f["check"], f["component"], f["position"]] for f in doc["failures"]]
        return _csv(rows)
    return _pretty(doc)


def _pretty_series(coeffs: list[str]) -> str:
    return str(Series(coeffs))


def _pretty(doc: dict) -> str:
    kind = doc["kind"]
    if kind == "series":
        return _pretty_series(doc["coeffs"]) + "\n"
    if kind == "array":
        lines = [f"g  = {_pretty_series(doc['g'])}"]
        lines += [f"m{i} = {_pretty_series(m)}" for i, m in enumerate(doc["multipliers"], 1)]
        return "\n".join(lines) + "\n"
    if kind == "matrix":
        rows = doc["rows"]
        width = max(len(c) for row in rows for c in row)
        return "".join(" ".join(c.rjust(width) for c in row) + "\n" for row in rows)
    status = "verified" if doc["verified"] else f"{len(doc['failures'])} failure(s)"
    lines = [f"{doc['map']}: {doc['trials']} trials at truncation {doc['truncation']}, "
             f"seed {doc['seed']}: {status}"]
    for f in doc["failures"]:
        lines.append(f"  trial {f['trial']}: {f['check']} differs at {f['component']}[{f['position']}]")
    return "\n".join(lines) + "\n"


# argument handling -----------------------------------------------------------

def _array(args, suffix: str = ""):
    g = getattr(args, "g" + suffix)
    f = getattr(args, "f" + suffix)
    ms = getattr(args, "m" + suffix)
    if g is None:
        raise UsageError(f"--g{suffix} is required")
    if (f is None) == (not ms):
        raise UsageError(f"give either --f{suffix} or one or more --m{suffix}")
    n = args.trunc
    gs = parse_series(g, n)
    if f is not None:
        return RiordanArray(gs, parse_series(f, n))
    return KRiordanArray(gs, tuple(parse_series(m, n) for m in ms))


def _add_array_opts(p, suffix: str = ""):
    label = "second operand" if suffix else "array"
    p.add_argument(f"--g{suffix}", help=f"g of the {label}")
    p.add_argument(f"--f{suffix}", help=f"multiplier f of a Riordan {label}")
    p.add_argument(f"--m{suffix}", action="append", default=[],
                   help=f"multiplier of a k-Riordan {label} (repeat, in order)")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--trunc", type=int, default=DEFAULT_TRUNC,
                        help="highest retained exponent (default %(default)s)")
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="kriordan", description="Riordan, Double Riordan and k-Riordan arrays.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="expand an expression")
    p.add_argument("expression")

    p = sub.add_parser("matrix", parents=[common], help="leading block of an array")
    _add_array_opts(p)
    p.add_argument("--size", type=int, help="rows/columns (default trunc+1)")

    p = sub.add_parser("apply", parents=[common], help="act on a column vector")
    _add_array_opts(p)
    p.add_argument("--a", required=True, help="generating function of the vector")

    p = sub.add_parser("rmul", parents=[common], help="product of two arrays")
    _add_array_opts(p)
    _add_array_opts(p, "2")

    p = sub.add_parser("rinv", parents=[common], help="inverse of an array")
    _add_array_opts(p)

    p = sub.add_parser("map", parents=[common], help="image under a monomorphism")
    p.add_argument("--map", required=True, help="psi, phi, psi2, chi, phik:K[:POS], chii:K:I")
    _add_array_opts(p)

    p = sub.add_parser("verify", parents=[common], help="check a monomorphism on random arrays")
    p.add_argument("--map", required=True, help="psi, phi, psi2, chi, phik:K[:POS], chii:K:I")
    p.add_argument("--trials", type=int, default=100)
    return parser


def _parse_map(text: str) -> MorphismId:
    try:
        return MorphismId.parse(text)
    except (ValueError, RiordanError) as e:
        raise UsageError(str(e)) from None


def run(args) -> dict:
    verb = args.verb
    if args.trunc < 1:
        raise UsageError("--trunc must be >= 1")
    if verb == "eval":
        return series_doc(parse_series(args.expression, args.trunc))
    if verb == "verify":
        report = verify_homomorphism(_parse_map(args.map), args.trials, args.trunc, args.seed)
        return {"kind": "report", "trunc": args.trunc} | report.to_dict()
    if verb == "map":
        ident = _parse_map(args.map)
    a = _array(args)
    if verb == "matrix":
        m = to_matrix(a, args.size) if isinstance(a, RiordanArray) else to_matrix_k(a, args.size)
        return matrix_doc(m, args.trunc)
    if verb == "apply":
        vec = parse_series(args.a, args.trunc)
        out = ftra_apply(a, vec) if isinstance(a, RiordanArray) else fundamental_apply(a, vec)
        return series_doc(out)
    if verb == "rinv":
        return array_doc(inverse(a) if isinstance(a, RiordanArray) else inverse_k(a))
    if verb == "rmul":
        b = a if args.g2 is None and args.f2 is None and not args.m2 else _array(args, "2")
        if isinstance(a, RiordanArray) and isinstance(b, RiordanArray):
            return array_doc(multiply(a, b))
        return array_doc(multiply_k(_as_k(a), _as_k(b)))
    # map
    kind = ident.kind
    if kind in (MapKind.CHI, MapKind.CHI_I):
        d = _as_k(a)
        k, pos = (2, 1) if kind is MapKind.CHI else (ident.k, ident.position)
        if d.k != k:
            raise ArityError(f"{ident.name} expects a {k}-Riordan array, got k={d.k}")
        return array_doc(chi_i(d, pos))
    if not isinstance(a, RiordanArray):
        if a.k != 1:
            raise ArityError(f"{ident.name} expects a Riordan array (--g/--f)")
        a = RiordanArray(a.g, a.multipliers[0])
    if kind is MapKind.PSI_CHECKERBOARD:
        return array_doc(psi_checkerboard(a))
    k, pos = {MapKind.PHI: (2, 2), MapKind.PSI_TYPE2: (2, 1)}.get(kind, (ident.k, ident.position))
    return array_doc(phi_k(a, k, pos))


def _error(kind: str, exc: Exception, status: int, stderr) -> int:
    doc = {"kind": "error", "error": kind, "message": str(exc)}
    if isinstance(exc, ParseError):
        doc["position"] = exc.position
        doc["expected"] = sorted(exc.expected)
    stderr.write(json.dumps(doc) + "\n")
    return status


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc = run(args)
    except UsageError as e:
        return _error("usage", e, 2, stderr)
    except ParseError as e:
        return _error("syntax", e, 2, stderr)
    except RiordanError as e:
        return _error(type(e).__name__, e, 1, stderr)
    except ZeroDivisionError as e:
        return _error("ZeroDivisionError", e, 1, stderr)
    stdout.write(render(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
