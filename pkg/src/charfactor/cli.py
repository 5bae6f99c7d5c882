"""Command line front end.  Output is JSON on stdout (TSV for ``gf``).

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

import argparse
import json
import os
import sys

from .algebra import EvalPoint, NonGenericPoint, parse_rational
from .asymmetric import (
    AsymmetricSpec,
    classify_even,
    classify_odd,
    classify_schur,
    classify_symp,
    detect_asymmetric,
    enumerate_asymmetric_tcores,
    odd_surplus_runner,
)
from .characters import evaluate_factorization, factorize, specialized_character
from .genfun import (
    LatticeLabel,
    brute_force_asymmetric_counts,
    gf_coefficients,
    psi,
    psi_inverse,
    size_formula,
)
from .partitions import partition, partitions_up_to, t_core, t_quotient
from .verify import sweep

FAMILIES = ("gl", "oo", "sp", "oe")


class UsageError(Exception):
    pass


def _json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: not valid JSON ({exc.msg})") from None


def _partition_arg(text):
    data = _json_arg(text, "--lambda")
    if not isinstance(data, list) or not all(isinstance(p, int) for p in data):
        raise UsageError("--lambda must be a JSON array of integers")
    try:
        return partition(data)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from None


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":")))


def _point(args, family):
    """EvalPoint from --x/--y (or a --request document)."""
    if args.x is None or args.y is None:
        raise UsageError("a point needs both --x and --y")
    xs = _json_arg(args.x, "--x") if isinstance(args.x, str) else args.x
    if not isinstance(xs, list):
        raise UsageError("--x must be a JSON array of rationals")
    xs = tuple(_rational(str(v)) for v in xs)
    if len(xs) != args.n:
        raise UsageError(f"--x needs n = {args.n} entries, got {len(xs)}")
    m = args.m if family == "gl" else 1
    pt = EvalPoint(args.t, args.n, m, xs, _rational(str(args.y)))
    if not pt.is_generic():
        raise UsageError("the point is not generic (zero, +-1, or coinciding t-th powers)")
    return pt


def _load_request(args):
    """Fill family/t/n/m/lambda/x/y from a JSON --request document."""
    if not args.request:
        if args.family is None or args.t is None or args.n is None or args.lam is None:
            raise UsageError("need --family, --t, --n and --lambda (or --request)")
        args.lam = _partition_arg(args.lam)
        return
    req = _json_arg(args.request, "--request")
    if not isinstance(req, dict):
        raise UsageError("--request must be a JSON object")
    try:
        args.family = req["family"]
        args.t, args.n = int(req["t"]), int(req["n"])
        args.lam = partition(req["lambda"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"incomplete request: {exc}") from None
    args.m = int(req.get("m", args.m))
    args.x, args.y = req.get("x"), req.get("y")
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}")


def cmd_core(args):
    lam = _partition_arg(args.lam)
    ell = args.ell if args.ell is not None else len(lam)
    _emit({"core": list(t_core(lam, args.t, ell)), "quotient": [list(q) for q in t_quotient(lam, args.t, ell)]})
    return 0


def cmd_quotient(args):
    lam = _partition_arg(args.lam)
    ell = args.ell if args.ell is not None else len(lam)
    _emit({"quotient": [list(q) for q in t_quotient(lam, args.t, ell)], "ell": ell})
    return 0


def cmd_classify(args):
    lam = _partition_arg(args.lam)
    t, n = args.t, args.n
    if args.family == "gl":
        nu = classify_schur(lam, t, n, args.m)
        out = {"vanishes": True} if nu is None else {"vanishes": False, "core": list(nu)}
    else:
        fn = {"oo": classify_odd, "sp": classify_symp, "oe": classify_even}[args.family]
        out = fn(lam, t, n).to_json()
        if args.family == "oo" and not out["vanishes"]:
            # the runner holding the surplus bead; the worked t = 2 examples call this i_0
            out["runner"] = odd_surplus_runner(lam, t, n)
    _emit(out)
    return 0


def cmd_eval(args):
    _load_request(args)
    pt = _point(args, args.family)
    value = specialized_character(args.family, args.lam, pt)
    f = factorize(args.family, args.lam, args.t, args.n, args.m)
    _emit({"value": value.to_json(), "vanishes": value == 0, "factorization": f.to_json()})
    return 0


def cmd_factor(args):
    _load_request(args)
    f = factorize(args.family, args.lam, args.t, args.n, args.m)
    out = {"factorization": f.to_json()}
    if args.x is not None or args.y is not None:
        out["value"] = evaluate_factorization(f, _point(args, args.family)).to_json()
    _emit(out)
    return 0


def cmd_verify(args):
    seed = os.environ.get("CHARFACTOR_SEED")
    if seed is not None:
        try:
            args.seed = int(seed)
        except ValueError:
            raise UsageError(f"CHARFACTOR_SEED must be an integer, got {seed!r}") from None
    families = FAMILIES if args.family == "all" else (args.family,)
    failed = False
    for family in families:
        m = args.m if family == "gl" else 1
        if family == "gl" and not 0 <= m <= args.t - 1:
            raise UsageError(f"--m must lie in [0, {args.t - 1}]")
        report = sweep(family, args.t, args.n, m, args.max_size, args.points, args.seed, args.workers)
        _emit(report.to_json())
        if not report.ok:
            failed = True
            for bad in report.mismatches:
                print(f"mismatch {family}: {json.dumps(bad)}", file=sys.stderr)
            for lam in report.zero_disagreements:
                print(f"vanishing disagreement {family}: lambda={lam}", file=sys.stderr)
    return 1 if failed else 0


def cmd_enum_asym(args):
    spec = AsymmetricSpec(args.z1, args.z2, args.k)
    if args.t is not None:
        found = enumerate_asymmetric_tcores(spec, args.t, args.max_size)
    else:
        found = [lam for lam in partitions_up_to(args.max_size) if detect_asymmetric(lam, args.z1, args.z2) == args.k]
    _emit([list(lam) for lam in found])
    return 0


def cmd_gf(args):
    gf = gf_coefficients(args.z1, args.z2, args.k, args.max_size)
    brute = brute_force_asymmetric_counts(args.z1, args.z2, args.k, args.max_size)
    print("size\tcount_gf\tcount_enum\tmatch")
    for d, (a, b) in enumerate(zip(gf, brute)):
        print(f"{d}\t{a}\t{b}\t{str(a == b).lower()}")
    return 0 if gf == brute else 1


def cmd_psi(args):
    if (args.lam is None) == (args.label is None):
        raise UsageError("give exactly one of --lambda and --label")
    if args.lam is not None:
        label = psi(_partition_arg(args.lam), args.t, args.z)
        _emit({"v": list(label.v), "check": label.check})
        return 0
    data = _json_arg(args.label, "--label")
    try:
        label = LatticeLabel(args.t, args.z, tuple(int(v) for v in data["v"]), int(data["check"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"--label must look like {{\"v\":[...],\"check\":c}}: {exc}") from None
    lam = psi_inverse(label)
    _emit({"lambda": list(lam), "size": sum(lam), "size_formula": size_formula(label)})
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="charfactor", description="twisted character factorizations")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn in (("core", cmd_core), ("quotient", cmd_quotient)):
        s = sub.add_parser(name, help=f"t-{name} of a partition")
        s.add_argument("--t", type=int, required=True)
        s.add_argument("--lambda", dest="lam", required=True)
        s.add_argument("--ell", type=int, help="beta-set length (default: len(lambda))")
        s.set_defaults(func=fn)

    s = sub.add_parser("classify", help="vanishing test and i0")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--lambda", dest="lam", required=True)
    s.set_defaults(func=cmd_classify)

    for name, fn in (("eval", cmd_eval), ("factor", cmd_factor)):
        s = sub.add_parser(name, help="direct value" if name == "eval" else "factorized form")
        s.add_argument("--request", help="JSON request document")
        s.add_argument("--family", choices=FAMILIES)
        s.add_argument("--t", type=int)
        s.add_argument("--n", type=int)
        s.add_argument("--m", type=int, default=1)
        s.add_argument("--lambda", dest="lam")
        s.add_argument("--x", help='JSON array of rationals, e.g. ["2","1/3"]')
        s.add_argument("--y")
        s.set_defaults(func=fn)

    s = sub.add_parser("verify", help="sweep direct values against factorizations")
    s.add_argument("--family", choices=FAMILIES + ("all",), default="all")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--max-size", type=int, default=8)
    s.add_argument("--points", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enum-asym", help="list (z1,z2,k)-asymmetric partitions or t-cores")
    s.add_argument("--z1", type=int, required=True)
    s.add_argument("--z2", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--t", type=int)
    s.add_argument("--max-size", type=int, required=True)
    s.set_defaults(func=cmd_enum_asym)

    s = sub.add_parser("gf", help="generating function against brute force (TSV)")
    s.add_argument("--z1", type=int, required=True)
    s.add_argument("--z2", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--max-size", type=int, required=True)
    s.set_defaults(func=cmd_gf)

    s = sub.add_parser("psi", help="lattice label of a family t-core, or its inverse")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--z", type=int, required=True)
    s.add_argument("--lambda", dest="lam")
    s.add_argument("--label", help='JSON {"v":[...],"check":c}')
    s.set_defaults(func=cmd_psi)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "t", None) is not None and args.t < 1:
        parser.error("--t must be positive")
    if getattr(args, "n", None) is not None and args.n < 0:
        parser.error("--n must be nonnegative")
    try:
        return args.func(args)
    except (UsageError, ValueError, NonGenericPoint) as exc:
        print(f"charfactor {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
