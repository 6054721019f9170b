"""Command-line surface: a thin client over the core package.

Exit codes: 0 success / consistent, 1 usage or input error, 2 a theorem
consistency check failed (which would mean a bug or a counterexample).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import classify, verify_main_theorem
from .errors import PlanematchError
from .experiment import run_experiment
from .generators import GeneratorSpec, generate
from .matchings import (
    Matching,
    catalan,
    count_matchings,
    enumerate_matchings,
    gnt_lower_bound,
)
from .pointset_io import read_point_set, write_point_set, write_report
from .svg import render_svg
from .witness import build_witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2

_KIND_ALIASES = {
    "convex": "convex",
    "random": "random_disk",
    "one-interior": "one_interior",
    "many-interior": "many_interior",
    "exceptional": "exceptional",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planematch",
        description="Count, enumerate and certify non-crossing perfect matchings "
        "of planar point sets.",
    )
    parser.add_argument("--max-enum", type=int, default=None,
                        help="enumeration / counting size cap")
    parser.add_argument("--strict-gp", action="store_true",
                        help="force the full O(n^3) general-position scan")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a point set file")
    p.add_argument("--kind", required=True, choices=sorted(_KIND_ALIASES))
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--radius", type=int, default=10**6)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("count", help="pm(S), the Catalan baseline and the bound")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("enumerate", help="list all matchings, one per line")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("witness", help="construct a piercing-property matching")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("classify", help="convex / exceptional_six / generic")
    p.add_argument("-i", "--input", required=True)

    p = sub.add_parser("verify", help="check the theorem on a file or a batch")
    p.add_argument("-i", "--input")
    p.add_argument("--trials", type=int)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kinds", default="random")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("svg", help="render a point set (and matching) as SVG")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-m", "--matching")
    p.add_argument("--highlight", action="store_true")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _enum_kwargs(args):
    return {} if args.max_enum is None else {"max_n": args.max_enum}


def _read(args):
    return read_point_set(args.input, strict_gp=args.strict_gp)


def _load_matching(path) -> Matching:
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            return Matching.of(json.loads(line))
    raise PlanematchError(f"no matching found in {path}")


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(
        kind=_KIND_ALIASES[args.kind], n=args.n, seed=args.seed, radius=args.radius
    )
    write_point_set(generate(spec), args.output)
    return EXIT_OK


def _cmd_count(args) -> int:
    ps = _read(args)
    pm = count_matchings(ps, **_enum_kwargs(args))
    cat = catalan(len(ps) // 2)
    gnt = gnt_lower_bound(ps)
    if args.format == "json":
        print(json.dumps({"n": len(ps), "k": len(ps) // 2, "pm": str(pm),
                          "catalan_k": str(cat), "gnt": str(gnt)}, indent=2))
    else:
        print(f"n={len(ps)} k={len(ps) // 2}")
        print(f"pm={pm}")
        print(f"catalan={cat}")
        print(f"gnt={gnt}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    ps = _read(args)
    matchings = enumerate_matchings(ps, **_enum_kwargs(args))
    if args.limit is not None:
        matchings = matchings[: args.limit]
    for m in matchings:
        print(json.dumps([list(pair) for pair in m.pairs]))
    return EXIT_OK


def _witness_payload(result, include_trace):
    payload = {"found": result.found, "reason": result.reason}
    if result.found:
        payload["matching"] = [list(p) for p in result.matching.pairs]
        payload["piercing_pair"] = [list(p) for p in result.trace.piercing_pair]
        if include_trace:
            t = result.trace
            payload["trace"] = {
                "case_tag": t.case_tag,
                "q": t.q,
                "j0": t.j0,
                "delta": t.delta,
                "r": t.r,
                "r_prime": t.r_prime,
                "s1": list(t.s1) if t.s1 is not None else None,
                "s2": list(t.s2) if t.s2 is not None else None,
            }
    return payload


def _cmd_witness(args) -> int:
    ps = _read(args)
    result = build_witness(ps)
    if args.format == "json":
        print(json.dumps(_witness_payload(result, args.trace), indent=2))
    elif result.found:
        print("witness found")
        print("matching:", json.dumps([list(p) for p in result.matching.pairs]))
        (a, b), (c, d) = result.trace.piercing_pair
        print(f"piercing: segment ({a},{b}) pierces ({c},{d})")
        if args.trace:
            print(f"case: {result.trace.case_tag}")
    else:
        print(f"no piercing matching exists: {result.reason}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    print(classify(_read(args)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if (args.input is None) == (args.trials is None):
        print("verify needs exactly one of -i FILE or --trials T", file=sys.stderr)
        return EXIT_USAGE
    if args.input is not None:
        ps = _read(args)
        kwargs = {"max_enum": args.max_enum} if args.max_enum is not None else {}
        report = verify_main_theorem(ps, **kwargs)
        if args.format == "text":
            for key, value in (
                ("n", report.n), ("k", report.k), ("pm", report.pm),
                ("catalan_k", report.catalan_k), ("gnt", report.gnt),
                ("classification", report.classification),
                ("witness_found", report.witness_found),
                ("consistent", report.consistent),
            ):
                print(f"{key}={value}")
            if report.failed_checks:
                print("failed_checks=" + ",".join(report.failed_checks))
        else:
            sys.stdout.write(write_report(report, args.format).decode("utf-8"))
        return EXIT_OK if report.consistent else EXIT_INCONSISTENT

    kinds = [_KIND_ALIASES[k.strip()] for k in args.kinds.split(",") if k.strip()]
    kwargs = {"max_enum": args.max_enum} if args.max_enum is not None else {}
    summary = run_experiment(
        args.trials, args.n_min, args.n_max, args.seed, kinds, **kwargs
    )
    if args.format == "text":
        print(f"trials={summary.trials} n_range={summary.n_range}")
        print(f"failures={len(summary.failures)}")
        for f in summary.failures:
            print(f"  seed={f.seed} n={f.n} check={f.check}")
        print(f"total_s={summary.timings['total_s']:.3f}")
    else:
        sys.stdout.write(write_report(summary, args.format).decode("utf-8"))
    return EXIT_OK if summary.ok else EXIT_INCONSISTENT


def _cmd_svg(args) -> int:
    ps = _read(args)
    matching = None
    piercing = None
    if args.matching:
        matching = _load_matching(args.matching)
        matching.validate(ps)
        if args.highlight:
            from .matchings import find_piercing_pair

            piercing = find_piercing_pair(matching, ps)
    elif args.highlight:
        result = build_witness(ps)
        if result.found:
            matching = result.matching
            piercing = result.trace.piercing_pair
    Path(args.output).write_text(render_svg(ps, matching, piercing),
                                 encoding="utf-8")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "witness": _cmd_witness,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "svg": _cmd_svg,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (PlanematchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
