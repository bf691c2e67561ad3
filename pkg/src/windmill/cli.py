"""Command-line front end.

Subcommands: build, drazin, walks, index, verify.  Exit codes: 0 when every
requested check passes, 1 when a mathematical check fails, 2 for usage or
parameter errors.  Output is deterministic: identical invocations produce
byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys

from .drazin import drazin_general, drazin_index, drazin_windmill_closed
from .graphs import WindmillParams, adjacency_matrix, build_windmill, export_dot, windmill_json
from .matrices import RationalMatrix
from .verify import (
    DEFAULT_M_RANGE,
    DEFAULT_N_RANGE,
    DEFAULT_P_MAX,
    check_drazin_candidate,
    summarize_report,
    verify_grid,
)
from .walks import DEFAULT_CAP, count_walks_matrix, enumerate_walks


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _emit_json(obj, out):
    _emit(json.dumps(obj, indent=2) + "\n", out)


def _load_matrix(path):
    with open(path) as fh:
        return RationalMatrix.from_json(json.load(fh))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="windmill",
        description="Oriented Dutch windmill digraphs, their walk structure, "
                    "and exact Drazin inverses.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a windmill and export it")
    p_build.add_argument("-m", type=int, required=True, help="number of cycles")
    p_build.add_argument("-n", type=int, required=True, help="cycle length (>= 3)")
    p_build.add_argument("--format", choices=["dot", "json", "csv", "matrix"],
                         default="json",
                         help="dot/json: graph; csv/matrix: adjacency matrix")
    p_build.add_argument("--out", default=None, help="output path (default stdout)")

    p_drazin = sub.add_parser("drazin", help="compute a Drazin inverse")
    src = p_drazin.add_mutually_exclusive_group(required=True)
    src.add_argument("--windmill", nargs=2, type=int, metavar=("M", "N"))
    src.add_argument("--matrix", help="matrix JSON file")
    p_drazin.add_argument("--method", choices=["general", "closed", "both"],
                          default="both")
    p_drazin.add_argument("--out", default=None)

    p_walks = sub.add_parser("walks", help="count or enumerate walks")
    p_walks.add_argument("-m", type=int, required=True)
    p_walks.add_argument("-n", type=int, required=True)
    p_walks.add_argument("--length", type=int, required=True)
    p_walks.add_argument("--from", dest="src", type=int, default=None)
    p_walks.add_argument("--to", dest="dst", type=int, default=None)
    p_walks.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_walks.add_argument("--out", default=None)

    p_index = sub.add_parser("index", help="compute the Drazin index")
    isrc = p_index.add_mutually_exclusive_group(required=True)
    isrc.add_argument("--windmill", nargs=2, type=int, metavar=("M", "N"))
    isrc.add_argument("--matrix")
    p_index.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--m-range", nargs=2, type=int, default=list(DEFAULT_M_RANGE),
                          metavar=("LO", "HI"))
    p_verify.add_argument("--n-range", nargs=2, type=int, default=list(DEFAULT_N_RANGE),
                          metavar=("LO", "HI"))
    p_verify.add_argument("--p-max", type=int, default=DEFAULT_P_MAX)
    p_verify.add_argument("--check-matrix", default=None,
                          help="verify a candidate Drazin inverse from a matrix "
                               "JSON file instead of running the grid")
    p_verify.add_argument("--windmill", nargs=2, type=int, metavar=("M", "N"),
                          help="windmill the candidate matrix belongs to")
    p_verify.add_argument("--out", default=None)
    return parser


def _cmd_build(args):
    params = WindmillParams(args.m, args.n)
    if args.format == "dot":
        _emit(export_dot(build_windmill(params)), args.out)
    elif args.format == "json":
        _emit_json(windmill_json(params), args.out)
    elif args.format == "csv":
        _emit(adjacency_matrix(build_windmill(params)).to_csv(), args.out)
    else:
        _emit_json(adjacency_matrix(build_windmill(params)).to_json(), args.out)
    return 0


def _cmd_drazin(args):
    if args.matrix is not None:
        if args.method != "general":
            print("error: --matrix input supports --method general only",
                  file=sys.stderr)
            return 2
        result = drazin_general(_load_matrix(args.matrix))
        _emit_json(result.to_json(), args.out)
        return 0 if result.checks.all_pass else 1

    m, n = args.windmill
    params = WindmillParams(m, n)
    adjacency = adjacency_matrix(build_windmill(params))
    if args.method == "general":
        result = drazin_general(adjacency)
        payload = result.to_json()
    elif args.method == "closed":
        result = drazin_windmill_closed(params)
        payload = result.to_json()
    else:
        if params.m < 2:
            print("error: --method both needs the closed form, which requires "
                  "m >= 2; use --method general for m = 1", file=sys.stderr)
            return 2
        general = drazin_general(adjacency)
        closed = drazin_windmill_closed(params)
        if general.inverse != closed.inverse or general.index != closed.index:
            print("error: general and closed-form Drazin inverses disagree",
                  file=sys.stderr)
            return 1
        result = general
        payload = general.to_json()
        payload["method"] = "both"
    _emit_json(payload, args.out)
    return 0 if result.checks.all_pass else 1


def _cmd_walks(args):
    if (args.src is None) != (args.dst is None):
        print("error: --from and --to must be given together", file=sys.stderr)
        return 2
    g = build_windmill(WindmillParams(args.m, args.n))
    if args.src is None:
        _emit_json(count_walks_matrix(g, args.length).to_json(), args.out)
    else:
        listed = enumerate_walks(g, args.src, args.dst, args.length, cap=args.cap)
        _emit_json(listed.to_json(), args.out)
    return 0


def _cmd_index(args):
    if args.matrix is not None:
        matrix = _load_matrix(args.matrix)
    else:
        m, n = args.windmill
        matrix = adjacency_matrix(build_windmill(WindmillParams(m, n)))
    _emit_json({"index": drazin_index(matrix)}, args.out)
    return 0


def _cmd_verify(args):
    if args.check_matrix is not None:
        if args.windmill is None:
            print("error: --check-matrix requires --windmill M N", file=sys.stderr)
            return 2
        params = WindmillParams(*args.windmill)
        report = check_drazin_candidate(params, _load_matrix(args.check_matrix))
        _emit_json(report, args.out)
        return 0 if report["all_pass"] else 1
    if args.p_max < 2:
        print(f"error: --p-max must be at least 2, got {args.p_max}", file=sys.stderr)
        return 2
    report = verify_grid(tuple(args.m_range), tuple(args.n_range), args.p_max)
    _emit_json(report, args.out)
    sys.stderr.write(summarize_report(report))
    return 0 if report["all_pass"] else 1


_DISPATCH = {
    "build": _cmd_build,
    "drazin": _cmd_drazin,
    "walks": _cmd_walks,
    "index": _cmd_index,
    "verify": _cmd_verify,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
