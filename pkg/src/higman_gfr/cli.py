"""Command line entry point: ``gfr <command> ...``.

Exit codes: 0 pass, 1 a check failed, 2 usage or precondition error.
JSON goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .density import SERIES_LIMIT, density_table, mu_partial_sum
from .errors import PreconditionError, ResourceLimitError
from .gf2m import to_hex
from .graph import load_graph
from .params import enumerate_u_set, find_u_summary
from .verify import StageError, aut_summary, cmd_verify, gpg_check, make_ctx

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _hex(s: str) -> int:
    try:
        return int(s, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex integer: {s!r}")


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _params(p, u_required=False):
    p.add_argument("--f", type=int, default=5)
    p.add_argument("--f0", type=int, default=1)
    p.add_argument("--poly", type=_hex, default=None, help="defining polynomial (hex)")
    p.add_argument("--u", type=_hex, required=u_required, default=None, help="u as hex")


def cmd_find_u(a) -> int:
    ctx = make_ctx(a.f, a.f0, a.poly)
    triples = enumerate_u_set(ctx)
    for t in triples:
        print(to_hex(t.u))
    print(json.dumps(find_u_summary(ctx)))
    return EXIT_PASS if triples else EXIT_FAIL


def cmd_build(a) -> int:
    from .cayley import build

    ctx = make_ctx(a.f, a.f0, a.poly)
    g = build(ctx, a.u)
    Path(a.out).write_bytes(g.export(a.format))
    _emit({"out": a.out, "format": a.format, "n": g.n, "edges": g.num_edges,
           "degree": int(g.deg[0]), "connected": g.connected()})
    return EXIT_PASS


def cmd_gpg_check(a) -> int:
    res = gpg_check(a.f, a.f0, a.u, a.poly)
    _emit(res)
    return EXIT_PASS if res["iso"] else EXIT_FAIL


def cmd_aut(a) -> int:
    g = load_graph(Path(a.graph).read_bytes())
    res = aut_summary(g)
    if not a.generators:
        res.pop("generators")
    _emit(res)
    return EXIT_PASS


def cmd_density(a) -> int:
    out = {"table": density_table(a.max_n)}
    if a.series_bound:
        s = mu_partial_sum(a.series_bound)
        out["series"] = {"D": a.series_bound, "partial_sum": s, "reference": SERIES_LIMIT,
                         "difference": s - SERIES_LIMIT}
    _emit(out)
    return EXIT_PASS


def cmd_verify_cli(a) -> int:
    reports = cmd_verify(a.f, a.f0, a.u, a.poly)
    _emit([r.to_json(timing=not a.no_timing) for r in reports])
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gfr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("find-u", help="list u satisfying (U1) and (U2)")
    _params(s)
    s.set_defaults(func=cmd_find_u)

    s = sub.add_parser("build", help="build Gamma_u and write it out")
    _params(s, u_required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--format", choices=["g6", "edges"], default="g6")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("gpg-check", help="verify the GPG(q-1, k) neighborhood witness")
    _params(s, u_required=True)
    s.set_defaults(func=cmd_gpg_check)

    s = sub.add_parser("aut", help="automorphism group of a graph file")
    s.add_argument("--graph", required=True)
    s.add_argument("--report", choices=["json"], default="json")
    s.add_argument("--generators", action="store_true", help="include generator images")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("density", help="phi(2^n-1)/(2^n-1) table and the mu-series")
    s.add_argument("--max-n", type=int, default=13)
    s.add_argument("--series-bound", type=int, default=0)
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("verify", help="full Aut(Gamma_u) = G verification")
    _params(s)
    s.add_argument("--report", choices=["json"], default="json")
    s.add_argument("--no-timing", action="store_true", help="omit timing for byte-stable output")
    s.set_defaults(func=cmd_verify_cli)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    try:
        return a.func(a)
    except StageError as e:
        print(json.dumps({"error": e.message, "stage": e.stage}), file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ResourceLimitError, OSError) as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
