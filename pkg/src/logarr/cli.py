"""Command-line front end.

Exit codes: 0 success or verified, 1 a verification or predicate failed,
2 usage error, 3 a cutoff was too small or a resolution stayed incomplete.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from . import arrangement as arr
from . import chern, logmodules as lm, resolutions as res
from .errors import (
    CutoffTooSmall,
    GenericityViolated,
    HypothesisFailed,
    LimitDoesNotExist,
    ResolutionIncomplete,
)
from .linalg import Field
from .reports import dumps, format_laurent, format_poly, plain

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CUTOFF = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output


def _flat(value) -> str:
    return value if isinstance(value, str) else json.dumps(value, sort_keys=True)


def _show(key: str, value, indent: int) -> None:
    pad = "  " * indent
    if isinstance(value, dict) and value:
        print(f"{pad}{key}:")
        for k in sorted(value):
            _show(k, value[k], indent + 1)
    elif isinstance(value, list) and any(isinstance(x, (dict, list)) for x in value) and len(_flat(value)) > 70:
        print(f"{pad}{key}:")
        for x in value:
            print(f"{pad}  - {_flat(x)}")
    else:
        print(f"{pad}{key}: {_flat(value)}")


def emit(report: dict, args) -> None:
    """JSON with --json, otherwise an indented key/value listing."""
    if args.json:
        print(dumps(report))
        return
    for key in sorted(report):
        _show(key, plain(report[key]), 0)


# ---------------------------------------------------------------------------
# argument handling


def load(args) -> arr.Arrangement:
    if bool(args.family) == bool(args.file):
        raise UsageError("give exactly one of --family or --file")
    if args.file:
        return arr.load_arrangement(args.file)
    spec = args.family
    if args.seed is not None and spec.split(":")[0].replace("-", "_") == "generic" and spec.count(",") == 1:
        spec = f"{spec},{args.seed}"
    return arr.parse_family(spec)


def field_of(args) -> Field:
    return Field(args.backend, seed=args.seed or 0)


def selector(args, A: arr.Arrangement) -> lm.ModuleSelector:
    side = lm.DER if args.side == "der" else lm.FORM
    p = 1 if args.p is None else args.p
    return lm.ModuleSelector(A, side, p, euler_complement=getattr(args, "euler_complement", False))


def default_gen_cutoff(sel: lm.ModuleSelector) -> int:
    # the generator search runs through degree d above the lowest possible degree
    return sel.min_degree + sel.arrangement.d if sel.side == lm.FORM else sel.arrangement.d


def parse_twists(text: str | None) -> list[int]:
    if not text:
        raise UsageError("--twists is required")
    return [int(x) for x in text.split(",") if x.strip()]


def poly_str(coeffs) -> str:
    return format_poly(coeffs)


# ---------------------------------------------------------------------------
# subcommands


def cmd_lattice(args) -> int:
    A = load(args)
    L = arr.intersection_lattice(A)
    report = {
        "arrangement": A.to_json(),
        "size": len(L),
        "rank_census": L.rank_census(),
        "profiles": {
            str(r): [[size, list(mus), count] for (size, mus), count in arr.rank_profile(A, r, L).items()]
            for r in range(1, L.top_rank + 1)
        },
        "mobius_by_rank": {str(r): list(arr.mu_multiset(A, r, L)) for r in range(L.top_rank + 1)},
    }
    emit(report, args)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    A = load(args)
    L = arr.intersection_lattice(A)
    pi = arr.poincare_poly(A, L)
    chi = arr.characteristic_poly(A, L)
    ok_minus_one = arr.poly_eval(pi, -1) == 0 if A.d else True
    ok_relation = tuple(chi) == arr.char_from_poincare(pi, A.n_vars)
    report = {
        "poincare": list(pi),
        "poincare_text": poly_str(pi),
        "characteristic": list(chi),
        "characteristic_text": poly_str(chi),
        "poincare_at_minus_one_vanishes": ok_minus_one,
        "chi_pi_relation": ok_relation,
    }
    emit(report, args)
    return EXIT_OK if (ok_minus_one and ok_relation) else EXIT_FAIL


def cmd_freeness(args) -> int:
    A = load(args)
    rep = lm.freeness_test(A)
    emit(rep.to_json(), args)
    return EXIT_OK if rep.free else EXIT_FAIL


def cmd_local_freeness(args) -> int:
    A = load(args)
    rep = lm.local_freeness_test(A)
    out = rep.to_json()
    if not args.json:
        out = {"locally_free": rep.locally_free, "elements_checked": len(rep.verdicts), "witness": rep.witness}
    emit(out, args)
    return EXIT_OK if rep.locally_free else EXIT_FAIL


def cmd_module_dims(args) -> int:
    A = load(args)
    sel = selector(args, A)
    lo = sel.min_degree if args.lo is None else args.lo
    hi = (lo + 8) if args.hi is None else args.hi
    if args.cutoff is not None and args.hi is None:
        hi = args.cutoff
    table = lm.graded_dim_table(sel, lo, hi, field_of(args))
    emit(table.to_json(), args)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    A = load(args)
    sel = selector(args, A)
    fld = field_of(args)
    if args.cutoff is None:
        h = lm.stable_hilbert_series(sel, chern.default_series_cutoff(A) + (0 if sel.side == lm.DER else 0), fld)
    else:
        h = lm.hilbert_series(sel, args.cutoff, fld)
    report = {
        "module": sel.label,
        "series": h,
        "numerator_text": format_laurent(h.numerator),
        "rank": h.rank(),
        "probabilistic": fld.probabilistic,
    }
    emit(report, args)
    return EXIT_OK


def cmd_betti(args) -> int:
    A = load(args)
    sel = selector(args, A)
    gen = default_gen_cutoff(sel) if args.gen_cutoff is None else args.gen_cutoff
    syz = gen + A.n_vars + 1 if args.syz_cutoff is None else args.syz_cutoff
    b = lm.betti_probe(sel, gen, syz, args.max_index, field_of(args))
    emit(b.to_json(), args)
    return EXIT_OK if b.complete else EXIT_CUTOFF


def cmd_chern(args) -> int:
    if args.twists is not None:
        n = args.n if args.n is not None else 3
        c = chern.chern_split(parse_twists(args.twists), n)
        emit({"twists": parse_twists(args.twists), "n": n, "c_t": c, "c_t_text": poly_str(c.coeffs)}, args)
        return EXIT_OK
    A = load(args)
    rep = chern.verify_main_theorem(
        A, args.strategy, cutoff=args.cutoff, gen_cutoff=args.gen_cutoff,
        syz_cutoff=args.syz_cutoff, field=field_of(args), check_hypothesis=not args.skip_hypothesis,
    )
    out = rep.to_json()
    emit({k: out[k] for k in ("strategy", "c_der1", "c_omega1", "c_omega1_0", "cutoffs", "probabilistic")}, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    what = args.what
    if what == "solomon-terao":
        A = load(args)
        st = chern.solomon_terao(A, args.cutoff, field_of(args))
        chi = list(arr.characteristic_poly(A))
        emit({"solomon_terao": st, "lattice": chi, "equal": st == chi, "probabilistic": args.backend == "modular"}, args)
        return EXIT_OK if st == chi else EXIT_FAIL
    if what == "main-theorem":
        A = load(args)
        rep = chern.verify_main_theorem(
            A, args.strategy, cutoff=args.cutoff, gen_cutoff=args.gen_cutoff,
            syz_cutoff=args.syz_cutoff, field=field_of(args),
        )
        emit(rep.to_json(), args)
        return EXIT_OK if rep.verified else EXIT_FAIL
    if what == "chern-split":
        tw = parse_twists(args.twists)
        n = args.n if args.n is not None else 3
        lim = chern.limit_at_one(chern.assemble_R(chern.RInput.split(tw, n)))
        direct = chern.chern_split(tw, n)
        emit({"twists": tw, "n": n, "limit": lim, "split": direct, "equal": lim == direct}, args)
        return EXIT_OK if lim == direct else EXIT_FAIL
    if what == "remark42":
        A = load(args)
        m0 = 3 if args.m0 is None else args.m0
        ok = chern.remark42_check(A, m0, args.cutoff, field_of(args))
        emit({"m0": m0, "unchanged": ok}, args)
        return EXIT_OK if ok else EXIT_FAIL
    if what == "top-chern":
        tw = parse_twists(args.twists)
        n = args.n if args.n is not None else len(tw)
        rep = chern.top_chern_checks(tw, n)
        emit(rep.to_json(), args)
        return EXIT_OK if rep.passed else EXIT_FAIL
    raise UsageError(f"unknown verification {what!r}")


def cmd_resolution(args) -> int:
    A = load(args)
    if args.kind == "ziegler":
        z = res.ziegler_matrix(A)
        lo = -1 if args.lo is None else args.lo
        hi = lo + 5 if args.hi is None else args.hi
        check = res.ziegler_check(A, (lo, hi))
        emit({"matrix": z.to_json(), "check": check.to_json()}, args)
        return EXIT_OK if check.passed else EXIT_FAIL
    p = 1 if args.p is None else args.p
    side = lm.DER if args.side == "der" else lm.FORM
    window = None if args.lo is None else (args.lo, args.hi if args.hi is not None else args.lo + 5)
    rep = res.lebelt_check(A, p, window, side)
    emit(rep.to_json(), args)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_demo(args) -> int:
    from .demo import run_edelman_reiner

    golden = None
    if args.golden:
        with open(args.golden) as fh:
            golden = json.load(fh)
    report, mismatches = run_edelman_reiner(field_of(args), golden)
    report["mismatches"] = mismatches
    emit(report, args)
    return EXIT_OK if not mismatches else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", help="NAME[:PARAMS], e.g. edelman-reiner or generic:2,4,7")
    common.add_argument("--file", help="arrangement JSON file")
    common.add_argument("--p", type=int)
    common.add_argument("--side", choices=["der", "form"], default="der")
    common.add_argument("--cutoff", type=int)
    common.add_argument("--gen-cutoff", type=int)
    common.add_argument("--syz-cutoff", type=int)
    common.add_argument("--max-index", type=int)
    common.add_argument("--backend", choices=["exact", "modular"], default="exact")
    common.add_argument("--strategy", choices=["limit", "betti"], default="betti")
    common.add_argument("--seed", type=int)
    common.add_argument("--json", action="store_true")
    common.add_argument("--lo", type=int)
    common.add_argument("--hi", type=int)
    common.add_argument("--m0", type=int)
    common.add_argument("--twists")
    common.add_argument("--n", type=int)
    common.add_argument("--euler-complement", action="store_true")
    common.add_argument("--skip-hypothesis", action="store_true")
    common.add_argument("--golden", help="JSON file overriding the demo's golden values")

    parser = argparse.ArgumentParser(prog="logarr", description="Logarithmic forms and derivations of hyperplane arrangements.")
    sub = parser.add_subparsers(dest="command", required=True)
    simple: dict[str, Callable] = {
        "lattice": cmd_lattice,
        "charpoly": cmd_charpoly,
        "freeness": cmd_freeness,
        "local-freeness": cmd_local_freeness,
        "module-dims": cmd_module_dims,
        "hilbert": cmd_hilbert,
        "betti": cmd_betti,
        "chern": cmd_chern,
    }
    for name, fn in simple.items():
        sp = sub.add_parser(name, parents=[common])
        sp.set_defaults(func=fn)
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("what", choices=["solomon-terao", "main-theorem", "chern-split", "remark42", "top-chern"])
    sp.set_defaults(func=cmd_verify)
    sp = sub.add_parser("resolution", parents=[common])
    sp.add_argument("kind", choices=["ziegler", "lebelt"])
    sp.set_defaults(func=cmd_resolution)
    sp = sub.add_parser("demo", parents=[common])
    sp.add_argument("name", choices=["edelman-reiner"])
    sp.set_defaults(func=cmd_demo)
    return parser


def _fail(args, message: str, code: int, witness=None) -> int:
    payload = {"error": message}
    if witness is not None:
        payload["witness"] = witness
    if getattr(args, "json", False):
        print(dumps(payload))
    else:
        print(f"error: {message}", file=sys.stderr)
        if witness is not None:
            print("witness: " + json.dumps(plain(witness), sort_keys=True), file=sys.stderr)
    return code


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, arr.ArrangementError) as exc:
        return _fail(args, str(exc), EXIT_USAGE)
    except GenericityViolated as exc:
        return _fail(args, str(exc), EXIT_FAIL, exc.witness)
    except HypothesisFailed as exc:
        return _fail(args, str(exc), EXIT_FAIL, exc.witness)
    except LimitDoesNotExist as exc:
        return _fail(args, str(exc), EXIT_FAIL, {"order": exc.order, "t_power": exc.t_power})
    except (CutoffTooSmall, ResolutionIncomplete) as exc:
        return _fail(args, f"cutoff too small: {exc}", EXIT_CUTOFF)
    except ValueError as exc:
        return _fail(args, str(exc), EXIT_USAGE)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
