"""The Cayley graph Gamma_u = Cay(K, Omega_u ∪ Omega_{u+1}).

Vertex Phi(a, c) has id a*q + c, so vertex 0 is the identity and ids
0..q-1 are the commutator subgroup K'.
"""
from __future__ import annotations

import numpy as np

from .errors import PreconditionError
from .graph import Graph
from .higman import INF, HigmanCtx, PhiElt
from .params import eta_from_u, poly_u_arr


class CayleyGraph(Graph):
    def __init__(self, ctx: HigmanCtx, u: int, nbrs: np.ndarray):
        super().__init__(ctx.n, nbrs)
        self.ctx = ctx
        self.u = u

    def connection_set(self) -> np.ndarray:
        return self.ctx.connection_ids(self.u)


def build(ctx: HigmanCtx, u: int) -> CayleyGraph:
    """Neighbors of y are s*y for s in the (inverse-closed) connection set."""
    ctx.require_gcd()
    u = ctx.field.check(u)
    S = ctx.connection_ids(u)
    verts = np.arange(ctx.n, dtype=np.int64)
    nbrs = ctx.mul_ids(S[None, :], verts[:, None])
    return CayleyGraph(ctx, u, nbrs)


def _edge_form_iii(ctx: HigmanCtx, p: PhiElt, r: PhiElt, u: int) -> bool:
    F = ctx.field
    s = p.a ^ r.a
    return p.c ^ r.c == F.mul(ctx.fr(s), F.mul(u, p.a) ^ F.mul(u ^ 1, r.a))


def _edge_form_iv(ctx: HigmanCtx, p: PhiElt, r: PhiElt, u: int) -> bool:
    F = ctx.field
    rhs = F.mul(u, ctx.norm(p.a ^ r.a)) ^ F.mul(ctx.fr(p.a), r.a) ^ ctx.norm(r.a)
    return p.c ^ r.c == rhs


def _edge_form_ii(ctx: HigmanCtx, p: PhiElt, r: PhiElt, u: int) -> bool:
    d = ctx.phi_mul(p, ctx.phi_inv(r))
    return d.a != 0 and ctx.orbit_label(d) == u


EDGE_FORMS = {"ii": _edge_form_ii, "iii": _edge_form_iii, "iv": _edge_form_iv}


def u_edge(ctx: HigmanCtx, p: PhiElt, r: PhiElt, u: int, form: str = "iii") -> bool:
    """Directed u-edge p -> r, i.e. p r^-1 in Omega_u."""
    if p == r:
        raise PreconditionError("u_edge is undefined for a loop (p == r)")
    return EDGE_FORMS[form](ctx, PhiElt(*p), PhiElt(*r), u)


def connected(g: Graph) -> bool:
    return g.connected()


def neighborhood(g: Graph, v: int) -> tuple[Graph, np.ndarray]:
    return g.induced(g.neighbors(v))


EQUATIONS = ("eq1", "eq2", "eq3", "eq4", "eq5", "eq6")


def incidence_suite(ctx: HigmanCtx, u: int) -> dict:
    """Check the six incidence equivalences for all a, b != 0.

    The edge side is form (iii) of :func:`u_edge`, vectorized over all
    pairs; the ratio side uses field operations and
    eta = 1 + (u/(u+1))^(1/(q0-1)).  Returns violation counts.
    """
    ctx.require_gcd()
    if u in (0, 1):
        raise PreconditionError(f"u={u} must avoid 0 and 1")
    F = ctx.field
    v = u ^ 1
    eta = eta_from_u(ctx, u)
    e1 = eta ^ 1
    ratio = {
        "eq1": F.inv(eta),
        "eq2": eta,
        "eq3": F.div(eta, e1),
        "eq4": F.div(e1, eta),
        "eq5": F.inv(e1),
    }
    # (source orbit label, target orbit label, edge colour)
    shapes = {
        "eq1": (u, u, u), "eq2": (u, u, v), "eq3": (v, v, u),
        "eq4": (v, v, v), "eq5": (u, v, u), "eq6": (u, v, v),
    }
    ar = np.arange(1, ctx.q, dtype=np.int64)
    a, b = (x.ravel() for x in np.meshgrid(ar, ar, indexing="ij"))
    na, nb = F.mul_arr(a, F.frob_arr(a, ctx.f0)), F.mul_arr(b, F.frob_arr(b, ctx.f0))
    s_q0 = F.frob_arr(a ^ b, ctx.f0)
    eq6_rhs = poly_u_arr(ctx, u, F.mul_arr(a, F.inv_arr(b))) == 0
    violations, counts = {}, {}
    for name, (sl, tl, col) in shapes.items():
        pc, rc = F.mul_arr(sl, na), F.mul_arr(tl, nb)
        # edge form (iii) for p = Phi(a, pc), r = Phi(b, rc), loops excluded
        lhs = (pc ^ rc) == F.mul_arr(s_q0, F.mul_arr(col, a) ^ F.mul_arr(col ^ 1, b))
        lhs &= (a != b) | (pc != rc)
        rhs = eq6_rhs if name == "eq6" else b == F.mul_arr(a, ratio[name])
        counts[name] = int(lhs.sum())
        violations[name] = int((lhs != rhs).sum())
    return {
        "u": u,
        "eta": eta,
        "violations": violations,
        "edge_counts": counts,
        "total_violations": sum(violations.values()),
    }


def kprime_contacts(g: CayleyGraph) -> bool:
    """Each vertex outside K' has one u-neighbour and one distinct (u+1)-neighbour in K'."""
    ctx, u = g.ctx, g.u
    F = ctx.field
    for v in range(ctx.q, ctx.n):
        a, c = divmod(v, ctx.q)
        na = ctx.norm(a)
        d1, d2 = c ^ F.mul(u, na), c ^ F.mul(u ^ 1, na)
        nb = g.neighbors(v)
        inside = nb[nb < ctx.q].tolist()
        if sorted(inside) != sorted({d1, d2}) or d1 == d2:
            return False
    return True


def right_translation(ctx: HigmanCtx, k: int) -> np.ndarray:
    """Vertex permutation x -> x k."""
    return ctx.mul_ids(np.arange(ctx.n), k)


def psi_conjugation(ctx: HigmanCtx, lam: int) -> np.ndarray:
    """Vertex permutation x -> Psi^-1 x Psi."""
    return ctx.conj_ids(np.arange(ctx.n), lam)


def g_generators(ctx: HigmanCtx, u: int, eta: int) -> list[np.ndarray]:
    """Generators of G acting on K: translations by Omega_u and Psi_eta."""
    gens = [right_translation(ctx, int(k)) for k in ctx.connection_ids(u)[: ctx.q - 1]]
    gens.append(psi_conjugation(ctx, eta))
    return gens


def omega_vertex_ids(ctx: HigmanCtx, label) -> np.ndarray:
    if label == INF:
        return np.arange(1, ctx.q)
    return np.array([ctx.vid(p) for p in ctx.omega(label).elements])
