"""Command-line front end.

Subcommands:
  compute       single operations on Jordan / symplectic-space elements
  act           apply a generator word to an element
  fiber         emptiness / witness queries for rank-1 fibers
  verify        named verification suites
  census        finite-field rank enumerations
  algebra-info  dimensions and structure data for an algebra

All element I/O is exact JSON (scalars as decimal strings, never floats).
Exit codes: 0 success, 2 usage or parse error, 3 domain or overflow error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census, fibers, freudenthal as fr, jordan as jmod
from . import serialize as ser
from . import verify
from .composition import AlgebraError, construct
from .fields import FieldError, parse_field
from .quadform import FormError
from .serialize import ParseError

USAGE_EXIT = 2
DOMAIN_EXIT = 3


def _parse_algebra(spec, field):
    """'quaternion:1,1' / 'octonion-split' -> constructed algebra."""
    if ":" in spec:
        tag, raw = spec.split(":", 1)
        params = tuple(field.scalar(t.strip()) for t in raw.split(","))
    else:
        tag, params = spec, ()
    return construct(tag, params, field)


def _need_algebra(args):
    if not args.field or not args.algebra:
        raise ParseError("--field and --algebra are required here")
    field = parse_field(args.field)
    return _parse_algebra(args.algebra, field)


def _load_json(text):
    if text == "-":
        text = sys.stdin.read()
    return ser.loads(text)


def _emit(obj, out=None):
    text = ser.dumps(obj) if not isinstance(obj, str) else obj
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {out}")
    else:
        print(text)


# -- compute ------------------------------------------------------------

_JORDAN_OPS = {"norm", "trace", "sharp", "rank"}
_W_OPS = {"quartic", "flat", "rankw"}


def cmd_compute(args):
    A = _need_algebra(args)
    field = A.field
    j = _load_json(args.input)
    echo = {"what": args.what, "field": field.to_json(), "algebra": args.algebra}
    what = args.what
    if what in _JORDAN_OPS:
        X = ser.jordan_from_json(j, A)
        if what == "norm":
            res = {"N": ser.scalar_to_json(jmod.norm_N(X))}
        elif what == "trace":
            res = {"trace": ser.scalar_to_json(jmod.trace(X))}
        elif what == "sharp":
            res = {"sharp": ser.jordan_to_json(jmod.sharp(X))}
        else:
            res = {"rank": jmod.rank_jordan(X)}
    elif what == "cross":
        X = ser.jordan_from_json(j["X"], A)
        Y = ser.jordan_from_json(j["Y"], A)
        res = {"cross": ser.jordan_to_json(jmod.cross(X, Y))}
    elif what == "symplectic":
        v = ser.w_from_json(j["v"], A)
        w = ser.w_from_json(j["w"], A)
        res = {"symplectic": ser.scalar_to_json(fr.symplectic(v, w))}
    elif what in _W_OPS:
        v = ser.w_from_json(j, A)
        if what == "quartic":
            res = {"q": ser.scalar_to_json(fr.quartic(v))}
        elif what == "flat":
            res = {"flat": ser.jordan_to_json(fr.flat(v))}
        else:
            res = {"rank": fr.rank_w(v)}
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown operation {what!r}")
    res["input"] = j
    res.update(echo)
    _emit(res, args.out)
    return 0


def cmd_act(args):
    A = _need_algebra(args)
    word = ser.word_from_json(_load_json(args.word), A)
    v = ser.w_from_json(_load_json(args.input), A)
    gv = fr.apply_word(word, v)
    try:
        nu = fr.similitude_factor(word, A, probes=4, seed=args.seed)
        nu_json = ser.scalar_to_json(nu)
    except fr.SimilitudeError as e:
        nu_json = None
    res = {
        "result": ser.w_to_json(gv),
        "similitude_factor": nu_json,
        "field": A.field.to_json(),
        "algebra": args.algebra,
    }
    _emit(res, args.out)
    return 0


def cmd_fiber(args):
    A = _need_algebra(args)
    field = A.field
    xi_v = ser.w_from_json(_load_json(args.xi), fibers.unarion_of(field))
    xi = fibers.FiberTarget(xi_v)
    if xi.is_zero:
        res = {"target": "zero", "note": "use `census` for the full rank-0 fiber scan"}
        if A.dim == 4 and field.is_finite():
            rep = census.rank0_fiber_census(A, workers=args.workers)
            res.update(rep)
    elif A.dim == 2:
        res = fibers.quadratic_fiber_test(xi, A)
        res["witnesses"] = [
            [ser.comp_elem_to_json(t, with_algebra=False) for t in w]
            for w in res.get("witnesses", [])
        ]
    else:
        res = fibers.rank3_fiber_test(xi, A)
        if res.get("witness") is not None:
            res["witness"] = [
                ser.comp_elem_to_json(t, with_algebra=False) for t in res["witness"]
            ]
    res["field"] = field.to_json()
    res["algebra"] = args.algebra
    _emit(res, args.out)
    return 0


def cmd_verify(args):
    if args.suite not in verify.SUITES:
        print(f"unknown suite {args.suite!r}; known: {', '.join(sorted(verify.SUITES))}",
              file=sys.stderr)
        return USAGE_EXIT
    kwargs = {"seed": args.seed}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    if args.exhaustive:
        kwargs["exhaustive"] = True
    if args.workers is not None:
        kwargs["workers"] = args.workers
    if args.field and args.algebra:
        field = parse_field(args.field)
        kwargs["field"] = field
        kwargs["algebra"] = _parse_algebra(args.algebra, field)
    elif args.algebra:
        kwargs["algebra"] = _parse_algebra(args.algebra, parse_field("Q"))
    rep = verify.run_suite(args.suite, **kwargs)
    _emit(rep, args.out)
    return 0 if rep["passed"] else 1


def cmd_census(args):
    field = parse_field(args.field) if args.field else parse_field("Fp:5")
    if args.space == "fiber":
        if not args.algebra or not args.xi:
            raise ParseError("census fiber needs --algebra and --xi")
        A = _parse_algebra(args.algebra, field)
        xi_v = ser.w_from_json(_load_json(args.xi), fibers.unarion_of(field))
        xi = fibers.FiberTarget(xi_v)
        count = census.fiber_census(xi, A)
        _emit({"space": "fiber", "field": field.to_json(), "count": count}, args.out)
        return 0
    if not args.algebra:
        raise ParseError("census needs --algebra")
    A = _parse_algebra(args.algebra, field)
    mode = args.mode
    fn = census.jordan_census if args.space == "jordan" else census.freudenthal_census
    kwargs = {"mode": mode, "seed": args.seed, "workers": args.workers}
    if mode == "sampled":
        kwargs["n_samples"] = args.trials or 10**4
        print(f"seed: {args.seed}")
    rep = fn(A, **kwargs)
    if args.out and args.out.endswith(".csv"):
        _emit(rep.to_csv(), args.out)
    else:
        _emit(rep.to_dict(), args.out)
    return 0


def cmd_algebra_info(args):
    A = _need_algebra(args)
    res = {
        "algebra": ser.algebra_to_json(A),
        "dim": A.dim,
        "dim_jordan": jmod.dim_jordan(A),
        "dim_w": fr.dim_w(A),
        "basis_labels": list(A.labels),
        "gram": ser.matrix_to_json(A.gram()),
        "trace0_dim": len(A.trace0_basis()),
    }
    _emit(res, args.out)
    return 0


def _common_flags(p):
    p.add_argument("--field", help="field descriptor: Q, Fp:5, Fp2:5,2")
    p.add_argument("--algebra", help="algebra tag, e.g. quaternion:1,1")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers (default: FKIT_WORKERS or 1)")
    p.add_argument("--out", help="write the report here instead of stdout")


def build_parser():
    ap = argparse.ArgumentParser(prog="fkit", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="single operations on elements")
    p.add_argument("what", choices=sorted(_JORDAN_OPS | _W_OPS | {"cross", "symplectic"}))
    p.add_argument("--in", dest="input", required=True,
                   help="element JSON (or '-' for stdin)")
    _common_flags(p)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("act", help="apply a generator word")
    p.add_argument("--word", required=True, help="generator word JSON")
    p.add_argument("--in", dest="input", required=True, help="element JSON")
    _common_flags(p)
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("fiber", help="rank-1 fiber queries")
    p.add_argument("--xi", required=True, help="target element JSON (unarion coords)")
    _common_flags(p)
    p.set_defaults(fn=cmd_fiber)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(sorted(verify.SUITES))}")
    _common_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("census", help="finite-field enumerations")
    p.add_argument("space", choices=["jordan", "freudenthal", "fiber"])
    p.add_argument("mode", nargs="?", default="exhaustive",
                   choices=["exhaustive", "sampled"])
    p.add_argument("--xi", help="fiber target JSON (for space=fiber)")
    _common_flags(p)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("algebra-info", help="structure data for an algebra")
    _common_flags(p)
    p.set_defaults(fn=cmd_algebra_info)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE_EXIT if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, json.JSONDecodeError, KeyError, TypeError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return USAGE_EXIT
    except (AlgebraError, FieldError, FormError, census.OverflowSpaceError,
            fr.SimilitudeError, ZeroDivisionError, ValueError) as e:
        print(f"domain error: {e}", file=sys.stderr)
        return DOMAIN_EXIT


if __name__ == "__main__":
    sys.exit(main())
