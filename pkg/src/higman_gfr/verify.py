"""End-to-end check that Aut(Gamma_u) = G acts as a Frobenius group."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .automorphism import aut_group, block_systems, frobenius_report
from .cayley import build, g_generators, incidence_suite
from .errors import PreconditionError
from .gf2m import FieldCtx, to_hex
from .gpg import neighborhood_iso
from .higman import HigmanCtx
from .params import ParamTriple, check_u, enumerate_u_set, eta_from_u, u2_holds


class StageError(PreconditionError):
    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.message = message


@dataclass
class VerificationReport:
    params: dict
    checks: dict
    timing: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def passed(self) -> bool:
        c = self.checks
        bools = [v for v in c.values() if isinstance(v, bool)]
        return (
            all(bools)
            and c["aut_order"] == c["expected_order"]
            and c["incidence_violations"] == 0
        )

    def to_json(self, timing: bool = True) -> dict:
        out = {"params": self.params, "checks": self.checks, "pass": self.passed, "version": self.version}
        if timing:
            out["timing"] = self.timing
        return out


def _stage(name, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except PreconditionError as e:
        if isinstance(e, StageError):
            raise
        raise StageError(name, str(e)) from e


def make_ctx(f: int, f0: int, poly: int | None = None) -> HigmanCtx:
    ctx = _stage("params", lambda: HigmanCtx(FieldCtx(f, poly), f0))
    _stage("gcd", ctx.require_gcd)
    return ctx


def verify_one(ctx: HigmanCtx, triple: ParamTriple) -> VerificationReport:
    u, eta = triple.u, triple.eta
    q = ctx.q
    timing = {}
    checks = {"gcd_ok": ctx.gcd_ok}

    t = time.perf_counter()
    checks["u1"] = bool(ctx.field.is_primitive(eta) and eta_from_u(ctx, u) == eta)
    checks["u2"] = u2_holds(ctx, u)
    timing["params"] = time.perf_counter() - t

    t = time.perf_counter()
    g = _stage("build", build, ctx, u)
    timing["build"] = time.perf_counter() - t

    t = time.perf_counter()
    checks["connected"] = g.connected()
    checks["degree"] = int(g.deg[0]) if g.is_regular() else -1
    checks["regular_simple"] = bool(
        g.is_regular() and g.deg[0] == 2 * (q - 1) and g.is_symmetric() and not g.has_loops()
    )
    timing["shape"] = time.perf_counter() - t

    t = time.perf_counter()
    inc = _stage("incidences", incidence_suite, ctx, u)
    checks["incidence_violations"] = inc["total_violations"]
    timing["incidences"] = time.perf_counter() - t

    t = time.perf_counter()
    try:
        iso = neighborhood_iso(ctx, triple, g)
        checks["gpg_iso"] = iso.iso
        k = iso.k
        checks["gpg_k_not_pm1"] = k not in (1, q - 2)
    except PreconditionError:
        checks["gpg_iso"] = False
        k = None
    timing["gpg"] = time.perf_counter() - t

    t = time.perf_counter()
    A = _stage("aut", aut_group, g)
    checks["aut_order"] = A.order()
    checks["expected_order"] = q * q * (q - 1)
    checks["g_in_aut"] = all(A.contains(p) for p in g_generators(ctx, u, eta))
    timing["aut"] = time.perf_counter() - t

    t = time.perf_counter()
    fr = frobenius_report(A)
    checks["frobenius"] = fr.is_frobenius
    checks["stabilizer_order"] = fr.stabilizer_order
    checks["stabilizer_is_q_minus_1"] = fr.stabilizer_order == q - 1
    timing["frobenius"] = time.perf_counter() - t

    t = time.perf_counter()
    blocks = block_systems(A, 0)
    checks["unique_block_is_Kprime"] = blocks == [list(range(q))]
    timing["blocks"] = time.perf_counter() - t

    params = {
        "f": ctx.field.f,
        "poly": to_hex(ctx.field.poly),
        "f0": ctx.f0,
        "u": to_hex(u),
        "eta": to_hex(eta),
        "k": k,
    }
    return VerificationReport(params, checks, {k_: round(v, 4) for k_, v in timing.items()})


def _verify_worker(args):
    f, f0, poly, u, eta = args
    ctx = HigmanCtx(FieldCtx(f, poly), f0)
    return verify_one(ctx, ParamTriple(ctx, u, eta))


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("GFR_THREADS", "1")))
    except ValueError:
        return 1


def cmd_verify(f: int, f0: int, u: int | None = None, poly: int | None = None) -> list[VerificationReport]:
    """Run the full pipeline for one u, or for every admissible u."""
    ctx = make_ctx(f, f0, poly)
    if u is not None:
        triples = [_stage("params", check_u, ctx, u)]
    else:
        triples = _stage("params", enumerate_u_set, ctx)
        if not triples:
            raise StageError("params", "no u satisfies (U1) and (U2)")
    workers = min(thread_cap(), len(triples))
    if workers > 1:
        jobs = [(f, f0, ctx.field.poly, t.u, t.eta) for t in triples]
        with ProcessPoolExecutor(workers) as ex:
            reports = list(ex.map(_verify_worker, jobs))
    else:
        reports = [verify_one(ctx, t) for t in triples]
    return sorted(reports, key=lambda r: int(r.params["u"], 16))


def gpg_check(f: int, f0: int, u: int, poly: int | None = None) -> dict:
    ctx = make_ctx(f, f0, poly)
    triple = _stage("params", check_u, ctx, u)
    g = build(ctx, u)
    iso = neighborhood_iso(ctx, triple, g)
    sub, _ = g.induced(g.neighbors(0))
    return {"k": iso.k, "iso": iso.iso, "aut_order_neighborhood": aut_group(sub).order()}


def aut_summary(graph) -> dict:
    A = aut_group(graph)
    out = {"n": graph.n, "order": A.order(), "num_generators": len(A.strong_generators())}
    if A.is_transitive():
        out["frobenius"] = frobenius_report(A).to_json()
        out["blocks"] = block_systems(A, 0)
    else:
        out["frobenius"] = None
        out["blocks"] = None
    out["generators"] = [np.asarray(g).tolist() for g in A.strong_generators()]
    return out
