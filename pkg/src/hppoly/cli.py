"""Command-line front end.

Subcommands: catalog, hpp, reproduce, nice, construct.  Structured output
is JSON on stdout (use --pretty for human-readable tables).  Exit codes:
0 success / no counterexample, 1 usage or input error, 2 counterexample
found.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures as fixtures_mod
from .catalog import catalog, catalog_manifest, catalog_names, family_patterns
from .hpp import (
    DEFAULT_TOL,
    ToleranceConfig,
    hpp_random_elementary,
    hpp_random_rays,
    shifted_hpp_random,
)
from .matroids import Matroid
from .niceness import nice_cotruncation_solve, nice_principal_solve, transversal_weight_verify
from .poly import (
    GeneralPolynomial,
    MultiAffinePolynomial,
    convolution,
    fold_mod2,
    leading_part,
    mask_of,
    multiaffine_part,
    parallel_connection,
    principal_coextension,
    principal_cotruncation,
    principal_extension,
    principal_truncation,
    series_connection,
    two_sum,
)
from .represent import det_construction, per_construction
from .serialize import dumps, load_any, to_dict_any


class UsageError(Exception):
    pass


def _tolerances(args) -> ToleranceConfig:
    kw = {}
    if getattr(args, "tol_im", None) is not None:
        kw["root_im_tol"] = args.tol_im
    if getattr(args, "tol_re", None) is not None:
        kw["root_re_tol"] = args.tol_re
    if getattr(args, "tol_eval", None) is not None:
        kw["eval_tol"] = args.tol_eval
    return ToleranceConfig(**kw) if kw else DEFAULT_TOL


def _resolve_input(text: str):
    """A catalog name or a path to a JSON artifact."""
    if text.endswith(".json"):
        return load_any(text)
    try:
        return catalog(text)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc


def _as_polynomial(obj):
    if isinstance(obj, Matroid):
        return obj.basis_polynomial()
    if isinstance(obj, (MultiAffinePolynomial, GeneralPolynomial)):
        return obj
    raise UsageError("input does not define a polynomial")


def _parse_elements(text: str, n: int) -> list[int]:
    if text == "all":
        return list(range(n))
    try:
        return [int(v) for v in text.split(",") if v != ""]
    except ValueError as exc:
        raise UsageError(f"bad element list {text!r}") from exc


def _emit(payload, pretty: bool) -> None:
    print(json.dumps(payload, indent=2 if pretty else None))


def cmd_catalog(args) -> int:
    if args.name is None:
        payload = {"names": catalog_names(), "families": family_patterns()}
        if args.manifest:
            payload["manifest"] = catalog_manifest()
        _emit(payload, args.pretty)
        return 0
    M = catalog(args.name)
    _emit(to_dict_any(M), args.pretty)
    return 0


def cmd_hpp(args) -> int:
    P = _as_polynomial(_resolve_input(args.input))
    cfg = _tolerances(args)
    if args.method == "rays":
        if isinstance(P, GeneralPolynomial):
            P = P.as_multiaffine()
        report = hpp_random_rays(P, args.trials, args.seed, cfg)
    elif args.method == "elementary":
        if isinstance(P, GeneralPolynomial):
            P = P.as_multiaffine()
        report = hpp_random_elementary(P, args.trials, args.seed, cfg)
    else:
        if isinstance(P, MultiAffinePolynomial):
            P = P.to_general()
        report = shifted_hpp_random(P, args.trials, args.seed, cfg)
    _emit(report.to_dict(), args.pretty)
    return 2 if report.verdict == "counterexample" else 0


def cmd_reproduce(args) -> int:
    names = fixtures_mod.fixture_names() if args.fixture in (None, "all") else [args.fixture]
    results = []
    for name in names:
        try:
            results.append(fixtures_mod.run_fixture(name, args.eps))
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
    if args.pretty:
        for r in results:
            print(r.line())
    else:
        _emit([{"name": r.name, "passed": r.passed, **r.details} for r in results], False)
    return 0 if all(r.passed for r in results) else 2


def cmd_nice(args) -> int:
    modes = [m for m in (args.flat, args.cotrunc, args.transversal) if m is not None]
    if len(modes) != 1:
        raise UsageError("choose exactly one of --flat, --cotrunc, --transversal")
    if args.transversal is not None:
        pres = load_any(args.transversal)
        if args.weights in (None, "ones"):
            weights = [[1.0] * s.bit_count() for s in pres.sets]
        else:
            with open(args.weights) as fh:
                weights = json.load(fh)
        ver = transversal_weight_verify(pres, weights)
        _emit(
            {
                "uniform": ver.uniform,
                "common": ver.common,
                "values": {" ".join(map(str, k)): v for k, v in ver.values.items()},
            },
            args.pretty,
        )
        return 0
    obj = _resolve_input(args.matroid)
    if not isinstance(obj, Matroid):
        raise UsageError("niceness solving needs a matroid")
    if args.flat is not None:
        sol = nice_principal_solve(obj, _parse_elements(args.flat, obj.n))
    else:
        sol = nice_cotruncation_solve(obj, _parse_elements(args.cotrunc, obj.n))
    _emit(
        {
            "status": sol.status,
            "weights": None if sol.weights is None else [str(w) for w in sol.weights],
            "weights_float": sol.weights_as_floats(),
            "kernel_dim": sol.kernel_dim,
            "heuristic": sol.heuristic,
        },
        args.pretty,
    )
    return 0


def _parse_weights_arg(text: str, n: int) -> list[float]:
    vals = [float(v) for v in text.split(",") if v != ""]
    if len(vals) == 1:
        return vals * n
    if len(vals) != n:
        raise UsageError(f"need 1 or {n} weights, got {len(vals)}")
    return vals


def _pipeline_step(value, op: str, argv: list[str]):
    """One stage of the construct pipeline applied to the running value."""
    is_poly = isinstance(value, (MultiAffinePolynomial, GeneralPolynomial))
    if op == "basis":
        return catalog(argv[0]).basis_polynomial()
    if op == "indep":
        return catalog(argv[0]).independent_set_polynomial()
    if op == "catalog":
        return catalog(argv[0])
    if op == "load":
        return load_any(argv[0])
    if op == "detpoly":
        return det_construction(load_any(argv[0]))
    if op == "perpoly":
        return per_construction(load_any(argv[0]).real)
    if value is None:
        raise UsageError(f"pipeline starts with a producing op, not {op!r}")
    if op == "dual":
        return value.dual()
    if op == "delete":
        if is_poly:
            return value.delete(int(argv[0]))
        return value.delete(_parse_elements(argv[0], value.n))
    if op == "contract":
        if is_poly:
            return value.contract(int(argv[0]))
        return value.contract(_parse_elements(argv[0], value.n))
    if op == "relax":
        elems = _parse_elements(argv[0], value.n)
        if is_poly:
            mono = MultiAffinePolynomial(value.n, {mask_of(elems, value.n): 1.0})
            if mono.support() & value.support():
                raise UsageError("relaxation term already present")
            return value + mono
        return value.relax(elems)
    if op in ("trunc", "ext", "cotrunc", "coext"):
        P = value.basis_polynomial() if isinstance(value, Matroid) else value
        w = _parse_weights_arg(argv[0], P.n)
        fn = {
            "trunc": principal_truncation,
            "ext": principal_extension,
            "cotrunc": principal_cotruncation,
            "coext": principal_coextension,
        }[op]
        return fn(P, w)
    if op == "flat":
        G = value.to_general() if isinstance(value, MultiAffinePolynomial) else value
        sub = _parse_elements(argv[0], G.n) if argv else None
        return multiaffine_part(G, sub)
    if op == "fold":
        G = value.to_general() if isinstance(value, MultiAffinePolynomial) else value
        sub = _parse_elements(argv[0], G.n) if argv else None
        return fold_mod2(G, sub)
    if op == "lead":
        G = value.to_general() if isinstance(value, MultiAffinePolynomial) else value
        return leading_part(G)
    if op == "conv":
        other = catalog(argv[0]).basis_polynomial()
        return convolution(value, other)
    if op in ("parallel", "series", "twosum"):
        other = catalog(argv[0]).basis_polynomial()
        e = int(argv[1])
        fn = {"parallel": parallel_connection, "series": series_connection, "twosum": two_sum}[op]
        return fn(value, other, e)
    if op == "union":
        from .matroids import matroid_union_fullrank

        if not isinstance(value, Matroid):
            raise UsageError("union applies to a matroid")
        res = matroid_union_fullrank(value, catalog(argv[0]))
        if isinstance(res, Matroid):
            return res
        raise UsageError(f"rank-deficient union: {res}")
    if op == "support":
        from .matroids import support_matroid

        P = value if is_poly else None
        if P is None:
            raise UsageError("support applies to a polynomial")
        if isinstance(P, GeneralPolynomial):
            P = P.as_multiaffine()
        return support_matroid(P)
    raise UsageError(f"unknown pipeline op {op!r}")


def cmd_construct(args) -> int:
    stages = [s.strip() for s in args.pipeline.split("|") if s.strip()]
    if not stages:
        raise UsageError("empty pipeline")
    value = None
    for idx, stage in enumerate(stages):
        parts = stage.split()
        try:
            value = _pipeline_step(value, parts[0], parts[1:])
        except (UsageError, KeyError, ValueError, IndexError) as exc:
            print(f"error at step {idx} ({stage!r}): {exc}", file=sys.stderr)
            return 1
    if isinstance(value, GeneralPolynomial) and value.is_multiaffine():
        value = value.as_multiaffine()
    _emit(to_dict_any(value), args.pretty)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hppoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    p = sub.add_parser("catalog", parents=[common], help="list or dump catalog matroids")
    p.add_argument("name", nargs="?")
    p.add_argument("--manifest", action="store_true", help="include the full definition table")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("hpp", parents=[common], help="randomized half-plane search")
    p.add_argument("input", help="catalog name or JSON file")
    p.add_argument("--method", choices=["rays", "elementary", "shifted"], default="rays")
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol-im", type=float, dest="tol_im")
    p.add_argument("--tol-re", type=float, dest="tol_re")
    p.add_argument("--tol-eval", type=float, dest="tol_eval")
    p.set_defaults(fn=cmd_hpp)

    p = sub.add_parser("reproduce", parents=[common], help="run the reproduction fixtures")
    p.add_argument("fixture", nargs="?", help="fixture name or 'all'")
    p.add_argument("--eps", type=float, default=None)
    p.set_defaults(fn=cmd_reproduce)

    p = sub.add_parser("nice", parents=[common], help="equal-coefficient weight solving")
    p.add_argument("matroid", nargs="?", help="catalog name or matroid JSON")
    p.add_argument("--flat", help="comma list of elements, or 'all'")
    p.add_argument("--cotrunc", help="comma list of elements, or 'all'")
    p.add_argument("--transversal", help="presentation JSON file")
    p.add_argument("--weights", help="'ones' or weights JSON file")
    p.set_defaults(fn=cmd_nice)

    p = sub.add_parser("construct", parents=[common], help="apply a pipeline of operations")
    p.add_argument("pipeline", help="stages separated by |, e.g. 'basis F7 | dual'")
    p.set_defaults(fn=cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
