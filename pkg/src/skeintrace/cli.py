"""Command-line front end.  Exit status: 0 success, 1 failed verification, 2 usage or input error."""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .acceptance import CRITERIA
from .cheb import FIRST, cheb_poly
from .errors import SkeinTraceError
from .jw import jw_biangle_trace, jw_expand, jw_triangle_trace
from .scalar import GENERIC_CONTEXT, choose_modulus, root_context
from .statesum import trace
from .surface import FIXTURES, fixture, load_surface, sigma_matrix
from .thread import (
    threaded_trace,
    thread_jw,
    thread_S,
    thread_T_embedded,
    thread_T_root,
    verify_centrality,
    verify_frobenius,
    verify_identities,
)

SCHEMA_HELP = """\
surface JSON (--input):
  {"edges": ["a", "b", "c"] or 3, "triangles": [["a", "b", "c"], ...],
   "curves": {"K": {"crossings": [["a", 0], ["b", 1], ...]}}}
  a crossing [edge, slot] enters the triangle holding that edge's slot-th appearance;
  multicurves use "components": [[crossings...], ...] with "elevations":
  per triangle, its arcs bottom to top as [component, arc] pairs;
  "simple_projection": false marks a curve whose projection has crossings.
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n\n{SCHEMA_HELP}")
        raise SystemExit(2)


def parse_mode(text):
    if text == "generic":
        return GENERIC_CONTEXT
    if text.startswith("root:"):
        try:
            m = int(text[5:])
        except ValueError:
            raise UsageError(f"bad root order in {text!r}") from None
        if m < 1:
            raise UsageError("root order must be positive")
        return root_context(m)
    raise UsageError(f"mode must be 'generic' or 'root:M', got {text!r}")


def _load(args):
    if args.input:
        try:
            with open(args.input) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
        try:
            return load_surface(data, args.input)
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            if isinstance(exc, SkeinTraceError):
                raise
            raise UsageError(f"malformed surface JSON: {exc!r}") from None
    if not args.fixture:
        raise UsageError("give --fixture NAME or --input FILE")
    return fixture(args.fixture)


def _curve(args):
    if not args.curve:
        raise UsageError("--curve is required")
    return _load(args).curve(args.curve)


def _source_args(p, curve=True):
    p.add_argument("--fixture", choices=FIXTURES)
    p.add_argument("--input", help="surface JSON file")
    if curve:
        p.add_argument("--curve")


def _emit(args, text, report):
    if args.report == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_trace(args):
    curve = _curve(args)
    scalars = parse_mode(args.mode)
    param = 1 if args.param == "omega" else args.n * args.n
    result = trace(curve, scalars, param)
    _emit(args, str(result), {"curve": curve.name, "mode": str(scalars), "param": param,
                              "trace": str(result), "monomials": len(result)})
    return 0


def cmd_thread(args):
    curve = _curve(args)
    scalars = parse_mode(args.mode)
    N = args.n
    report = None
    if args.poly == "S":
        if curve.lambda_simple and not scalars.is_root:
            report = thread_S(curve, N, scalars, keep_factors=args.report == "json")
            result = report.result
        else:
            result = thread_jw(curve, N, scalars)
    elif scalars.is_root:
        if curve.lambda_simple:
            report = thread_T_root(curve, N, scalars)
            result = report.result
        else:
            result = thread_T_embedded(curve, N, scalars)
    else:
        result = threaded_trace(curve, cheb_poly(FIRST, N), scalars)
    data = report.to_json() if report else {"result": str(result), "surviving": len(result)}
    data.update(curve=curve.name, poly=args.poly, n=N, mode=str(scalars))
    _emit(args, str(result), data)
    return 0


def cmd_verify(args):
    N = args.n
    scalars = choose_modulus(N, -1) if args.mode is None else parse_mode(args.mode)
    if args.what == "frobenius":
        rep = verify_frobenius(_curve(args), N, scalars)
        checks, data = rep.checks, rep.to_json()
    else:
        if args.input:
            raise UsageError(f"verify {args.what} runs on the packaged fixtures only")
        if args.what == "identities":
            if not args.fixture:
                raise UsageError("--fixture is required")
            checks = verify_identities(args.fixture, N, scalars)
        else:
            if args.fixture not in (None, "punctured_torus"):
                raise UsageError("centrality is checked on the punctured torus")
            checks = verify_centrality(N, scalars)
        data = {"ok": all(c.ok for c in checks), "checks": [c.to_json() for c in checks]}
    ok = all(c.ok for c in checks)
    data.update(n=N, mode=str(scalars), passed=sum(c.ok for c in checks), failed=sum(not c.ok for c in checks))
    lines = ["OK" if ok else "FAIL"] + [f"  {c.name}: {c.diff}" for c in checks if not c.ok]
    _emit(args, "\n".join(lines), data)
    return 0 if ok else 1


def cmd_jw(args):
    scalars = parse_mode(args.mode)
    if args.action == "expand":
        x = jw_expand(args.n, scalars)
        _emit(args, str(x), {"n": args.n, "terms": {str(d): str(c) for d, c in x.terms.items()}})
        return 0
    if args.s1 is None or args.s2 is None:
        raise UsageError("--s1 and --s2 are required")
    args.s1, args.s2 = (s.replace("p", "+").replace("m", "-") for s in (args.s1, args.s2))
    for s in (args.s1, args.s2):
        if len(s) != args.n or set(s) - {"+", "-"}:
            raise UsageError(f"sign state {s!r} must be {args.n} characters from '+-'")
    fn = jw_biangle_trace if args.action == "trace-biangle" else jw_triangle_trace
    value = fn(args.n, args.s1, args.s2, scalars)
    _emit(args, str(value), {"n": args.n, "s1": args.s1, "s2": args.s2, "value": str(value)})
    return 0


def cmd_sigma(args):
    t = _load(args).triangulation
    s = sigma_matrix(t)
    width = max(len(str(x)) for row in s for x in row)
    lines = ["  ".join(str(x).rjust(width) for x in row) for row in s]
    _emit(args, "\n".join(lines), {"edges": list(t.edges), "sigma": [list(r) for r in s]})
    return 0


def cmd_fixtures(args):
    if args.action == "list":
        print("\n".join(FIXTURES))
        return 0
    if args.name not in FIXTURES:
        raise UsageError(f"unknown fixture {args.name!r}")
    print(resources.files("skeintrace").joinpath("fixtures").joinpath(f"{args.name}.json").read_text(), end="")
    return 0


def cmd_suite(args):
    status = 0
    for check in CRITERIA:
        r = check()
        print(r.line(), flush=True)
        if not r.ok:
            status = 1
            if not args.keep_going:
                print(f"stopped at criterion {r.number} ({r.title})")
                break
    return status


def build_parser():
    p = _Parser(prog="skeintrace", description=__doc__, epilog=SCHEMA_HELP,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, **kw):
        q = sub.add_parser(name, **kw)
        q.set_defaults(func=fn)
        q.add_argument("--report", choices=["json"])
        return q

    q = add("trace", cmd_trace, help="quantum trace of a curve")
    _source_args(q)
    q.add_argument("--mode", default="generic")
    q.add_argument("--param", choices=["omega", "iota"], default="omega")
    q.add_argument("--n", type=int, default=1, help="iota = w^(n^2)")

    q = add("thread", cmd_thread, help="trace of a Chebyshev thread")
    _source_args(q)
    q.add_argument("--poly", choices=["S", "T"], required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mode", default="generic")

    q = add("verify", cmd_verify, help="Frobenius, identity and centrality checks")
    q.add_argument("what", choices=["frobenius", "identities", "centrality"])
    _source_args(q)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mode", help="default root:4N")

    q = add("jw", cmd_jw, help="Jones-Wenzl idempotents and their stated traces")
    q.add_argument("action", choices=["expand", "trace-biangle", "trace-triangle"])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s1")
    q.add_argument("--s2")
    q.add_argument("--mode", default="generic")

    q = add("sigma", cmd_sigma, help="sigma-matrix of a triangulation")
    _source_args(q, curve=False)

    q = sub.add_parser("fixtures", help="packaged fixtures")
    q.set_defaults(func=cmd_fixtures)
    q.add_argument("action", choices=["list", "show"])
    q.add_argument("name", nargs="?")

    q = sub.add_parser("suite", help="run the acceptance criteria")
    q.set_defaults(func=cmd_suite)
    q.add_argument("--keep-going", action="store_true", help="run every criterion even after a failure")
    return p


def _join_sign_values(argv):
    """Let ``--s1 -+`` through: argparse reads values starting with '-' as flags, so spell signs as p/m."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--s1", "--s2") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1].replace('+', 'p').replace('-', 'm')}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_sign_values(argv))
    if getattr(args, "n", None) is not None and args.n < 1:
        print("skeintrace: error: --n must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"skeintrace: error: {exc}\n\n{SCHEMA_HELP}", file=sys.stderr)
        return 2
    except SkeinTraceError as exc:
        print(f"skeintrace: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main(argv=None):
    sys.exit(run(argv))
