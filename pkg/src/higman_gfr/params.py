"""Conditions (U1)/(U2) and enumeration of the admissible u values.

(U1)  u = (1 + eta^q0) / (eta + eta^q0) for a primitive eta.
(U2)  P_u(X) = X^(q0+1) + u X^q0 + (u+1) X + 1 has no root in F_q.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import PreconditionError
from .gf2m import to_hex
from .higman import HigmanCtx


@dataclass
class ParamTriple:
    ctx: HigmanCtx
    u: int
    eta: int
    k: int | None = None

    def to_json(self) -> dict:
        return {"u": to_hex(self.u), "eta": to_hex(self.eta), "k": self.k}


def u_from_eta(ctx: HigmanCtx, eta: int) -> int:
    if eta in (0, 1):
        raise PreconditionError(f"eta={eta} makes eta + eta^q0 vanish")
    F = ctx.field
    e_q0 = ctx.fr(eta)
    den = eta ^ e_q0
    if not den:
        raise PreconditionError(f"eta={eta:#x} lies in F_q0 ∩ F_q, denominator vanishes")
    return F.div(1 ^ e_q0, den)


def eta_from_u(ctx: HigmanCtx, u: int) -> int:
    """Inverse of :func:`u_from_eta`: 1 + (u/(u+1))^(1/(q0-1))."""
    if u in (0, 1):
        raise PreconditionError(f"u={u} is excluded (u and u+1 must be nonzero)")
    if gcd(ctx.q0 - 1, ctx.q - 1) != 1:
        raise PreconditionError("x -> x^(q0-1) is not a bijection of F_q")
    F = ctx.field
    return 1 ^ F.root_exp(F.div(u, u ^ 1), ctx.q0 - 1)


def poly_u(ctx: HigmanCtx, u: int, x: int) -> int:
    """P_u(x) = x^(q0+1) + u x^q0 + (u+1) x + 1."""
    F = ctx.field
    xq = ctx.fr(x)
    return F.mul(x, xq) ^ F.mul(u, xq) ^ F.mul(u ^ 1, x) ^ 1


def poly_u_arr(ctx: HigmanCtx, u: int, x):
    F = ctx.field
    xq = F.frob_arr(x, ctx.f0)
    return F.mul_arr(x, xq) ^ F.mul_arr(u, xq) ^ F.mul_arr(u ^ 1, x) ^ 1


def u2_holds(ctx: HigmanCtx, u: int) -> bool:
    """(U2) by brute evaluation; 0 and 1 are never roots so they are skipped."""
    xs = np.arange(2, ctx.q, dtype=np.int64)
    return bool(np.all(poly_u_arr(ctx, u, xs) != 0))


def rational_U(ctx: HigmanCtx, x: int) -> int:
    """U(x) = (x^(q0+1) + x + 1) / (x^q0 + x); P_u has the root x iff u = U(x)."""
    if x in (0, 1):
        raise PreconditionError("U has poles at 0 and 1")
    F = ctx.field
    xq = ctx.fr(x)
    den = xq ^ x
    if not den:
        raise PreconditionError(f"x={x:#x} is fixed by x -> x^q0, U(x) undefined")
    return F.div(F.mul(x, xq) ^ x ^ 1, den)


def u_image(ctx: HigmanCtx) -> set[int]:
    """U(F_q minus {0, 1})."""
    return {rational_U(ctx, x) for x in range(2, ctx.q)}


def u1_candidates(ctx: HigmanCtx) -> dict[int, int]:
    """u -> primitive eta for every u satisfying (U1)."""
    out = {}
    for eta in ctx.field.primitive_elements():
        if eta == 1:
            continue
        out.setdefault(u_from_eta(ctx, eta), eta)
    return out


def enumerate_u_set(ctx: HigmanCtx) -> list[ParamTriple]:
    """All u with (U1) and (U2), sorted by integer encoding."""
    ctx.require_gcd()
    cands = u1_candidates(ctx)
    return [ParamTriple(ctx, u, cands[u]) for u in sorted(cands) if u2_holds(ctx, u)]


def check_u(ctx: HigmanCtx, u: int) -> ParamTriple:
    """Validate a single u against (U1) and (U2); raise if it fails either."""
    ctx.require_gcd()
    u = ctx.field.check(u)
    if u in (0, 1):
        raise PreconditionError(f"u={u:#x} violates (U1): u must avoid 0 and 1")
    eta = eta_from_u(ctx, u)
    if not ctx.field.is_primitive(eta):
        raise PreconditionError(f"u={u:#x} violates (U1): eta={eta:#x} is not primitive")
    if not u2_holds(ctx, u):
        raise PreconditionError(f"u={u:#x} violates (U2)")
    return ParamTriple(ctx, u, eta)


def find_u_summary(ctx: HigmanCtx) -> dict:
    ctx.require_gcd()
    u1 = set(u1_candidates(ctx))
    u2 = {u for u in range(ctx.q) if u2_holds(ctx, u)}
    return {
        "q": ctx.q,
        "q0": ctx.q0,
        "count_u1": len(u1),
        "count_u2": len(u2),
        "count_both": len(u1 & u2),
    }
