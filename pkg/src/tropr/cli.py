"""Command-line front end: JSON in/out, deterministic, scriptable.

Exit codes: 0 success, 2 malformed input or unknown check, 3 invariant
violation (including failed verification runs).
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .crystal import CrystalElem, comb_r, energy, enumerate_crystal
from .geom_crystal import GcPoint
from .matrix_real import build_M, recover_components
from .matrices import mat_mul_many
from .semifield import SEMIFIELDS, format_rat
from .tropical_r import full_table, tropical_r
from .verify import CHECKS, run_check

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_VIOLATION = 3


class MalformedInput(Exception):
    pass


def _emit(obj, pretty):
    if pretty:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _read_json(stream):
    try:
        return json.load(stream)
    except ValueError as exc:
        raise MalformedInput("invalid JSON: %s" % exc)


def _load_gc_pair(obj, sf):
    try:
        x = GcPoint.from_json(obj["x"], sf)
        y = GcPoint.from_json(obj["y"], sf)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedInput("bad pair: %s" % exc)
    if x.n != y.n:
        raise MalformedInput("rank mismatch")
    return x, y


def _load_crystal_pair(obj):
    try:
        x = CrystalElem.from_json(obj["x"])
        y = CrystalElem.from_json(obj["y"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput("bad pair: %s" % exc)
    if x.n != y.n:
        raise MalformedInput("rank mismatch")
    return x, y


def _fmt(sf, v):
    return format_rat(v) if sf.is_positive_domain else v


def cmd_eval_r(args, stdin):
    sf = SEMIFIELDS[args.semifield]
    pair = _load_gc_pair(_read_json(stdin), sf)
    vt = full_table(pair)
    xp, yp = tropical_r(pair)
    n = vt.n
    out = {
        "xprime": xp.to_json(),
        "yprime": yp.to_json(),
        "V": [_fmt(sf, v) for v in vt.v],
        "Vstar": [_fmt(sf, v) for v in vt.vstar],
        "V0_sigma1": _fmt(sf, vt.v0_s1),
        "W": [_fmt(sf, vt.w[i]) for i in range(1, n)],
        "Vtilde": [_fmt(sf, vt.vtilde[j]) for j in range(1, n - 1)],
    }
    _emit(out, args.pretty)
    return EXIT_OK


def cmd_comb_r(args, stdin):
    pair = _load_crystal_pair(_read_json(stdin))
    xp, yp = comb_r(pair)
    _emit({"xprime": xp.to_json(), "yprime": yp.to_json()}, args.pretty)
    return EXIT_OK


def cmd_energy(args, stdin):
    pair = _load_crystal_pair(_read_json(stdin))
    _emit({"energy": energy(pair)}, args.pretty)
    return EXIT_OK


def cmd_enumerate(args, stdin):
    elems = enumerate_crystal(args.l1, args.n)
    for e in elems:
        _emit(e.to_json(), args.pretty)
    _emit({"count": len(elems)}, args.pretty)
    return EXIT_OK


def cmd_verify(args, stdin):
    if args.check not in CHECKS:
        print("unknown check: %s" % args.check, file=sys.stderr)
        return EXIT_MALFORMED
    rep = run_check(args.check, args.n, args.trials, args.seed,
                    l1=args.l1, l2=args.l2, zsamples=args.z_samples)
    _emit(rep.to_json(), args.pretty)
    return EXIT_OK if rep.failed == 0 else EXIT_VIOLATION


def cmd_recover(args, stdin):
    obj = _read_json(stdin)
    sf = SEMIFIELDS["rational"]
    try:
        factors = [GcPoint.from_json(o, sf) for o in obj["factors"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedInput("bad factors: %s" % exc)
    if not factors or len({p.n for p in factors}) != 1:
        raise MalformedInput("factors must share one rank")
    levels = obj.get("levels")
    if levels is None:
        from .geom_crystal import level
        levels = [level(p) for p in factors]
    else:
        try:
            from .semifield import parse_rat
            levels = [parse_rat(s) if isinstance(s, str) else Fraction(s)
                      for s in levels]
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise MalformedInput("bad levels: %s" % exc)

    def mprod(z):
        return mat_mul_many([build_M(p, z) for p in factors])

    got = recover_components(levels, mprod, factors[0].n)
    _emit({"components": [p.to_json() for p in got]}, args.pretty)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tropr",
        description="Exact evaluation and verification of the birational "
                    "and combinatorial R maps for type D")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, default=3, help="rank (>= 3)")
        p.add_argument("--semifield", choices=sorted(SEMIFIELDS),
                       default="rational")
        p.add_argument("--l1", type=int, default=2)
        p.add_argument("--l2", type=int, default=1)
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--seed", type=int,
                       default=int(os.environ.get("TROPR_SEED", "0")))
        p.add_argument("--z-samples", type=int, default=5)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", default=True,
                         help="compact JSON output (default)")
        fmt.add_argument("--pretty", action="store_true",
                         help="indented JSON output")

    for name, fn in [("eval-r", cmd_eval_r), ("comb-r", cmd_comb_r),
                     ("energy", cmd_energy), ("enumerate", cmd_enumerate),
                     ("recover", cmd_recover)]:
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("verify")
    p.add_argument("check", help="one of: %s" % ", ".join(sorted(CHECKS)))
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 3:
        print("rank must be at least 3", file=sys.stderr)
        return EXIT_MALFORMED
    if args.trials < 1:
        print("trials must be at least 1", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        return args.func(args, sys.stdin)
    except MalformedInput as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_MALFORMED
    except (ValueError, ArithmeticError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
