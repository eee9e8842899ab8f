"""Command-line interface.

Every result is printed as JSON to stdout; progress notes go to stderr.
Exit status: 0 on success, 1 when verification claims fail, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone


def _apply_thread_cap() -> None:
    """KERDOCKLAB_THREADS caps BLAS worker pools; must run before numpy loads."""
    cap = os.environ.get("KERDOCKLAB_THREADS")
    if not cap:
        return
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(var, cap)


def _usage_error(message: str) -> "SystemExit":
    print(f"error: {message}", file=sys.stderr)
    return SystemExit(2)


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kerdocklab",
        description="Construct, analyze and verify Kerdock-type and distance-5 cyclic code families.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a code family and write it to disk")
    p_build.add_argument("--family", required=True,
                         choices=["rm1", "kerdock", "bch13", "bch13-dual", "gold-dual"])
    p_build.add_argument("--m", type=int, required=True)
    p_build.add_argument("--e", type=int, help="trace exponent (gold-dual only)")
    p_build.add_argument("--out", required=True)

    p_an = sub.add_parser("analyze", help="weight/distance/kernel analysis of a stored code")
    p_an.add_argument("what", choices=["weights", "distances", "kernel"])
    p_an.add_argument("--in", dest="infile", required=True)
    p_an.add_argument("--plot", help="also render a weight-distribution chart (weights only)")

    p_design = sub.add_parser("design", help="grade a fixed-weight class as a t-design")
    p_design.add_argument("--in", dest="infile", required=True)
    p_design.add_argument("--weight", type=int, required=True)
    p_design.add_argument("--max-t", type=int, required=True)

    p_scheme = sub.add_parser("scheme", help="association-scheme check of the distance restriction")
    p_scheme.add_argument("--in", dest="infile", required=True)
    p_scheme.add_argument("--sampled", action="store_true")
    p_scheme.add_argument("--seed", type=int)
    p_scheme.add_argument("--trials", type=int, default=100_000)

    p_comp = sub.add_parser("components", help="flip-graph component analysis")
    p_comp.add_argument("--in", dest="infile")
    p_comp.add_argument("--family", choices=["bch13"],
                        help="parity-check mode for codes too large to enumerate")
    p_comp.add_argument("--m", type=int, help="degree for --family mode")
    group = p_comp.add_mutually_exclusive_group(required=True)
    group.add_argument("--coordinate", type=int)
    group.add_argument("--all", action="store_true")
    p_comp.add_argument("--method", choices=["graph", "span"], default="graph")

    p_verify = sub.add_parser("verify-all", help="run the whole claim registry")
    eff = p_verify.add_mutually_exclusive_group()
    eff.add_argument("--quick", action="store_true")
    eff.add_argument("--full", action="store_true")
    p_verify.add_argument("--json", dest="json_path", help="also write the report to this path")
    p_verify.add_argument("--figures", help="directory for rendered report figures")
    return parser


def _cmd_build(args) -> int:
    from . import codes, storage

    if args.family == "rm1":
        code = codes.build_rm1(args.m)
    elif args.family == "kerdock":
        code = codes.build_kerdock(args.m)
    elif args.family == "bch13":
        built = codes.build_bch_c13(args.m)
        if isinstance(built, codes.BchParityCheck):
            raise SystemExit(
                f"error: dimension {built.dimension} exceeds the enumeration cap; "
                f"use `components --family bch13 --m {args.m}` for this range")
        code = built
    elif args.family == "bch13-dual":
        code = codes.build_trace_dual(args.m, 3)
    else:
        if args.e is None:
            raise _usage_error("--e is required for gold-dual")
        code = codes.build_trace_dual(args.m, args.e)
    storage.write_code(code, args.out)
    _emit({"family": code.family, "m": args.m, "n": code.n, "size": code.size,
           "out": args.out})
    return 0


def _cmd_analyze(args) -> int:
    from . import storage

    code = storage.read_code(args.infile)
    if args.what == "weights":
        wd = code.weight_distribution()
        if args.plot:
            from .figures import weight_distribution_figure
            weight_distribution_figure(wd, args.infile, args.plot)
        _emit({str(k): v for k, v in wd.items()})
    elif args.what == "distances":
        _emit({"n": code.n, "size": code.size,
               "distances": sorted(code.distance_set())})
    else:
        kernel = code.kernel_words()
        _emit({"n": code.n, "size": code.size, "kernel_size": len(kernel),
               "kernel_dimension": len(kernel).bit_length() - 1})
    return 0


def _cmd_design(args) -> int:
    from . import storage
    from .designs import design_strength

    code = storage.read_code(args.infile)
    blocks = [w for w in code.words if w.bit_count() == args.weight]
    if not blocks:
        raise _usage_error(f"no words of weight {args.weight}")
    rep = design_strength(blocks, code.n, args.max_t)
    _emit({"n": rep.n, "block_weight": rep.block_weight, "block_count": rep.block_count,
           "strength": rep.strength, "lambdas": rep.lambdas, "sampled": rep.sampled})
    return 0


def _cmd_scheme(args) -> int:
    from . import storage
    from .scheme import restriction_scheme_check

    code = storage.read_code(args.infile)
    if args.sampled:
        if args.seed is None:
            raise _usage_error("--sampled requires --seed")
        tensor = restriction_scheme_check(code, "sampled", seed=args.seed, trials=args.trials)
    else:
        tensor = restriction_scheme_check(code)
    payload = {"n": tensor.n, "size": tensor.size, "mode": tensor.mode,
               "consistent": tensor.consistent,
               "relations": list(tensor.relations),
               "delta": {f"{i},{j},{k}": v for (i, j, k), v in sorted(tensor.delta.items())}}
    if tensor.witness is not None:
        x, y, x2, y2, jk, c1, c2 = tensor.witness
        payload["witness"] = {"pair": [x, y], "other_pair": [x2, y2],
                              "distance": (x ^ y).bit_count(),
                              "jk": list(jk), "counts": [c1, c2]}
    _emit(payload)
    return 0


def _report_payload(rep) -> dict:
    return {"coordinate": rep.coordinate, "d_used": rep.d_used,
            "component_count": rep.component_count,
            "component_sizes": rep.component_sizes, "method": rep.method,
            "assumed_min_distance": rep.assumed_min_distance}


def _cmd_components(args) -> int:
    from . import codes, components, storage

    if args.family:
        if args.m is None:
            raise _usage_error("--family requires --m")
        built = codes.build_bch_c13(args.m)
        if isinstance(built, codes.Code):
            target = built
        else:
            pair_index = components.syndrome_pair_index(built)
            coords = range(built.n) if args.all else [args.coordinate]
            reports = [components.linear_span_components(built, i, pair_index=pair_index)
                       for i in coords]
            _emit([_report_payload(r) for r in reports])
            return 0
    elif args.infile:
        target = storage.read_code(args.infile)
    else:
        raise _usage_error("provide --in FILE or --family bch13 --m M")

    coords = list(range(target.n)) if args.all else [args.coordinate]
    if args.method == "span":
        reports = [components.linear_span_components(target, i) for i in coords]
    else:
        reports = components.i_components_sweep(target, coords)
    _emit([_report_payload(r) for r in reports])
    return 0


def _cmd_verify(args) -> int:
    from .harness import verify_all

    effort = "full" if args.full else "quick"
    report = verify_all(effort, progress=lambda line: print(line, file=sys.stderr))
    report["generated_at"] = datetime.now(timezone.utc).isoformat()
    if args.figures:
        from .figures import render_report_figures
        report["figures"] = [str(p) for p in render_report_figures(report, args.figures)]
    if args.json_path:
        with open(args.json_path, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    _emit(report)
    return 1 if report["summary"]["fail"] else 0


def main(argv: list[str] | None = None) -> int:
    _apply_thread_cap()
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"build": _cmd_build, "analyze": _cmd_analyze, "design": _cmd_design,
                "scheme": _cmd_scheme, "components": _cmd_components,
                "verify-all": _cmd_verify}
    try:
        return handlers[args.command](args)
    except SystemExit:
        raise
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
