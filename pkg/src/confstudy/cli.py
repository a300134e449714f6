"""Command line front end: ``confstudy <command> ...``.

JSON goes to stdout. Errors go to stderr as {"error": code, "detail": ...}
with exit status 1 for malformed input and 2 for mathematical failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .clifford import Multivector, classify_vector, embed_point, gp
from .dorst import (
    classify_motion, line_normalize, motion_from_blade, sandwich, trajectory, wedge_decompose,
)
from .errors import ConfStudyError, NoFactorization, SchemaError, ZeroVector
from .fourquat import FourQuat, fq_mul, join, split
from .rational import fmt, to_decimal_str
from .rotor_poly import RotorPoly, factorize_report
from .study import ideal_generators, null_value, on_study, rotor_norm, subgroups

EXIT_SCHEMA = 1
EXIT_MATH = 2


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc.msg})") from exc


def load_element(path: str):
    """A Multivector or FourQuat, detected from the keys."""
    obj = _load(path)
    if isinstance(obj, dict) and "blades" in obj:
        return Multivector.from_json(obj)
    if isinstance(obj, dict) and "q0" in obj:
        return FourQuat.from_json(obj)
    raise SchemaError(f"{path}: expected a multivector or fourquat object")


def _even(x) -> FourQuat:
    return x if isinstance(x, FourQuat) else split(x)


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"not a rational number: {s!r}") from exc


def _rational_list(s: str, n: int | None = None) -> list[Fraction]:
    out = [_rational(p) for p in s.split(",") if p.strip()]
    if n is not None and len(out) != n:
        raise SchemaError(f"expected {n} comma separated numbers, got {s!r}")
    return out


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


# -- commands ------------------------------------------------------------------


def cmd_classify(args) -> object:
    q = _even(load_element(args.element))
    study = on_study(q)
    out = {
        "on_study": study,
        "generators": ideal_generators(q).to_json(),
        "null_value": fmt(null_value(q)),
        "norm": fmt(rotor_norm(q)) if study else None,
        "subgroups": [g.value for g in subgroups(q)],
    }
    try:
        out["motion_type"] = classify_motion(line_normalize(q)).value
    except ConfStudyError:
        pass
    return out


def cmd_decompose(args) -> object:
    q = _even(load_element(args.element))
    return wedge_decompose(line_normalize(q)).to_json()


def cmd_factor(args) -> object:
    poly = RotorPoly.from_json(_load(args.poly))
    res = factorize_report(poly)
    for s in res.skipped:
        print(json.dumps({"skipped": s.to_json()}), file=sys.stderr)
    if args.require_count is not None and len(res.factorizations) != args.require_count:
        raise _CountMismatch(
            f"expected {args.require_count} factorizations, found {len(res.factorizations)}"
        )
    if not res.factorizations:
        raise NoFactorization("no ordering of quadratic factors admits a factorization")
    return [f.to_json() for f in res.factorizations]


class _CountMismatch(ConfStudyError):
    code = "CountMismatch"


def _vector_report(y: Multivector) -> dict:
    out = {"image": y.to_json()}
    try:
        out["classified"] = classify_vector(y).to_json()
    except ZeroVector:
        out["classified"] = {"kind": "Zero"}
    return out


def cmd_act(args) -> object:
    r = load_element(args.rotor)
    x = embed_point(*_rational_list(args.point, 3))
    return _vector_report(sandwich(r, x, normalize=args.normalize))


def cmd_mul(args) -> object:
    a, b = load_element(args.a), load_element(args.b)
    if isinstance(a, FourQuat) and isinstance(b, FourQuat):
        return fq_mul(a, b).to_json()
    am = join(a) if isinstance(a, FourQuat) else a
    bm = join(b) if isinstance(b, FourQuat) else b
    return gp(am, bm).to_json()


def _load_motion(path: str):
    """Rotor polynomial, {"direction": ...}, {"blade": {"a", "b"}} or a bare even element."""
    obj = _load(path)
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected a JSON object")
    if "coeffs" in obj:
        return RotorPoly.from_json(obj)
    if "direction" in obj:
        return line_normalize(FourQuat.from_json(obj["direction"]))
    if "blade" in obj:
        b = obj["blade"]
        if not isinstance(b, dict) or set(b) != {"a", "b"}:
            raise SchemaError('"blade" must hold exactly the vectors "a" and "b"')
        return motion_from_blade(Multivector.from_json(b["a"]), Multivector.from_json(b["b"]))
    if "blades" in obj:
        return line_normalize(split(Multivector.from_json(obj)))
    if "q0" in obj:
        return line_normalize(FourQuat.from_json(obj))
    raise SchemaError(f"{path}: expected a motion or a rotor polynomial")


def cmd_trajectory(args):
    m = _load_motion(args.motion)
    p0 = _rational_list(args.point, 3)
    ts = _rational_list(args.t)
    if not ts:
        raise SchemaError("--t needs at least one value")
    samples = trajectory(m, p0, ts)
    render = fmt if args.exact else to_decimal_str
    if args.csv is None:
        return [
            {
                "t": fmt(s.t),
                "kind": s.kind,
                "point": [fmt(c) for c in s.point] if s.point else None,
                **({"error": s.error} if s.error else {}),
            }
            for s in samples
        ]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "x", "y", "z", "kind"])
    for s in samples:
        xyz = [render(c) for c in s.point] if s.point else ["", "", ""]
        w.writerow([render(s.t), *xyz, s.error or s.kind])
    if args.csv == "-":
        sys.stdout.write(buf.getvalue())
    else:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    return None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="confstudy", description="Conformal kinematics on the Study variety.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="Study conditions, norms and motion type of an even element")
    s.add_argument("element")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("decompose", help="write a line direction as a 2-blade a ^ b")
    s.add_argument("element")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("factor", help="factorize a rotor polynomial into linear factors")
    s.add_argument("poly")
    s.add_argument("--require-count", type=int, metavar="N")
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("act", help="apply a rotor to a point")
    s.add_argument("rotor")
    s.add_argument("--point", required=True, metavar="X,Y,Z")
    s.add_argument("--normalize", action="store_true")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("mul", help="geometric product of two elements")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("trajectory", help="sample the orbit of a point under a motion")
    s.add_argument("motion")
    s.add_argument("--point", required=True, metavar="X,Y,Z")
    s.add_argument("--t", required=True, metavar="T1,T2,...")
    s.add_argument("--csv", metavar="PATH", help="write CSV to PATH ('-' for stdout)")
    s.add_argument("--exact", action="store_true", help="render CSV numbers as p/q")
    s.set_defaults(func=cmd_trajectory)
    return p


def _fail(exc: ConfStudyError) -> int:
    print(json.dumps({"error": exc.code, "detail": exc.detail}), file=sys.stderr)
    return EXIT_SCHEMA if isinstance(exc, SchemaError) else EXIT_MATH


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
    except ConfStudyError as exc:
        return _fail(exc)
    if out is not None:
        sys.stdout.write(_dump(out))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
