"""Generalized Petersen graphs GPG(n, k) and the neighborhood isomorphism.

Vertex ids: c_i -> (i-1) mod n and c'_i -> n + (i-1) mod n, subscripts
read modulo n.  Edge families: c_i c_{i+1}, c_i c'_i and c'_i c'_{i+k}.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .automorphism import aut_group
from .cayley import CayleyGraph, build
from .errors import PreconditionError
from .graph import Graph
from .higman import HigmanCtx
from .params import ParamTriple
from .perm import PermGroup, identity, inverse, is_identity, mul, perm_order, power


@dataclass(frozen=True)
class GpgSpec:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 3:
            raise PreconditionError(f"GPG needs n >= 3, got {self.n}")
        if not 1 <= self.k < self.n or 2 * self.k == self.n:
            raise PreconditionError(f"GPG({self.n},{self.k}): need 1 <= k < n and k != n/2")


def outer(n: int, i: int) -> int:
    return (i - 1) % n


def inner(n: int, i: int) -> int:
    return n + (i - 1) % n


def gpg_build(n: int, k: int) -> Graph:
    """GPG(n, k).  k and n-k give the same edge set, so no reduction is needed."""
    GpgSpec(n, k)
    edges = []
    for i in range(1, n + 1):
        edges.append((outer(n, i), outer(n, i + 1)))
        edges.append((outer(n, i), inner(n, i)))
        edges.append((inner(n, i), inner(n, i + k)))
    return Graph.from_edges(2 * n, edges)


def rho(n: int) -> np.ndarray:
    p = identity(2 * n)
    for i in range(1, n + 1):
        p[outer(n, i)] = outer(n, i + 1)
        p[inner(n, i)] = inner(n, i + 1)
    return p


def delta(n: int) -> np.ndarray:
    p = identity(2 * n)
    for i in range(1, n + 1):
        p[outer(n, i)] = outer(n, -i)
        p[inner(n, i)] = inner(n, -i)
    return p


def alpha(n: int, k: int) -> tuple[np.ndarray, bool]:
    """Candidate map c_i -> c'_{ki}, c'_i -> c_{ki}, with whether it is an automorphism."""
    GpgSpec(n, k)
    if gcd(n, k) != 1:
        raise PreconditionError(f"alpha is not a bijection when gcd({n},{k}) != 1")
    p = identity(2 * n)
    for i in range(1, n + 1):
        p[outer(n, i)] = inner(n, k * i)
        p[inner(n, i)] = outer(n, k * i)
    return p, gpg_build(n, k).is_automorphism(p)


def relations(n: int, k: int) -> dict:
    """The rho/delta/alpha relations; alpha ones only if alpha is an automorphism."""
    r, d = rho(n), delta(n)
    out = {
        "rho_n_id": is_identity(power(r, n)),
        "delta_sq_id": is_identity(mul(d, d)),
        "delta_rho_delta_is_rho_inv": np.array_equal(mul(mul(d, r), d), inverse(r)),
        "rho_delta_automorphisms": gpg_build(n, k).is_automorphism(r) and gpg_build(n, k).is_automorphism(d),
        "dihedral_order": PermGroup(2 * n, [r, d]).order(),
    }
    if gcd(n, k) == 1:
        a, is_aut = alpha(n, k)
        out["alpha_is_automorphism"] = is_aut
        if is_aut:
            a2 = mul(a, a)
            out["alpha_conj_rho_is_rho_k"] = np.array_equal(mul(mul(inverse(a), r), a), power(r, k))
            out["alpha_delta_commute"] = np.array_equal(mul(a, d), mul(d, a))
            out["alpha_sq"] = "id" if is_identity(a2) else ("delta" if np.array_equal(a2, d) else "other")
    return out


def gpgparam_check(n: int, k: int, group: PermGroup | None = None) -> dict:
    """Check, on the full automorphism group of GPG(n, k) with n odd, n != 5:

    (i)  the elements of odd order form one cyclic normal subgroup of order n;
    (ii) for k != +-1 mod n, no involution centralizes that subgroup.
    """
    if n % 2 == 0 or n == 5:
        raise PreconditionError(f"n={n}: need n odd and n != 5")
    if group is None:
        group = aut_group(gpg_build(n, k))
    elems = group.elements()
    orders = [perm_order(e) for e in elems]
    odd = {e.tobytes() for e, o in zip(elems, orders) if o % 2 == 1}
    odd_elems = [e for e, o in zip(elems, orders) if o % 2 == 1]
    closed = all(mul(x, y).tobytes() in odd for x in odd_elems for y in odd_elems)
    gens_n = [e for e, o in zip(elems, orders) if o == n]
    cyclic = bool(gens_n)
    normal = all(mul(mul(inverse(g), x), g).tobytes() in odd for g in group.strong_generators() for x in odd_elems)
    subgroups = {frozenset(power(z, j).tobytes() for j in range(n)) for z in gens_n}
    out = {
        "n": n,
        "k": k,
        "aut_order": group.order(),
        "odd_count": len(odd),
        "i_holds": len(odd) == n and closed and cyclic and normal and len(subgroups) == 1,
    }
    if k % n in (1, n - 1):
        out["ii_holds"] = None  # excluded by hypothesis
    else:
        z = gens_n[0] if gens_n else None
        bad = 0
        if z is not None:
            for e, o in zip(elems, orders):
                if o == 2 and np.array_equal(mul(e, z), mul(z, e)):
                    bad += 1
        out["commuting_involutions"] = bad
        out["ii_holds"] = z is not None and bad == 0
    return out


@dataclass
class NeighborhoodIso:
    k: int
    bijection: np.ndarray  # GPG id -> vertex id of Gamma_u
    iso: bool

    def to_json(self) -> dict:
        return {"k": self.k, "iso": self.iso}


def gpg_k(ctx: HigmanCtx, eta: int) -> int:
    """k with 1 + eta = eta^(k+1)."""
    n = ctx.q - 1
    return (ctx.field.dlog(eta, 1 ^ eta) - 1) % n


def neighborhood_iso(ctx: HigmanCtx, triple: ParamTriple, graph: CayleyGraph | None = None) -> NeighborhoodIso:
    """Explicit isomorphism GPG(q-1, k) -> neighborhood of the identity.

    c_i  -> Phi(eta^i, u eta^(i(q0+1)))
    c'_i -> Phi(b, (u+1) b^(q0+1)) with b = eta^i / (1 + eta)
    """
    ctx.require_gcd()
    F = ctx.field
    u, eta = triple.u, triple.eta
    if not F.is_primitive(eta):
        raise PreconditionError(f"eta={eta:#x} is not primitive")
    if graph is None:
        graph = build(ctx, u)
    n = ctx.q - 1
    k = gpg_k(ctx, eta)
    triple.k = k
    bij = np.empty(2 * n, dtype=np.int64)
    scale = F.inv(1 ^ eta)
    for i in range(1, n + 1):
        a = F.pow(eta, i)
        b = F.mul(a, scale)
        bij[outer(n, i)] = ctx.vid((a, F.mul(u, ctx.norm(a))))
        bij[inner(n, i)] = ctx.vid((b, F.mul(u ^ 1, ctx.norm(b))))
    iso = False
    if k not in (0,) and 2 * k != n:
        gp = gpg_build(n, k)
        nbhd = set(graph.neighbors(0).tolist())
        if len(set(bij.tolist())) == 2 * n and set(bij.tolist()) == nbhd:
            edges_ok = all(graph.has_edge(int(bij[x]), int(bij[y])) for x, y in gp.edges().tolist())
            sub, _ = graph.induced(graph.neighbors(0))
            iso = edges_ok and sub.num_edges == gp.num_edges
    if not iso:
        raise PreconditionError(f"c_i/c'_i map is not an isomorphism for u={u:#x}")
    return NeighborhoodIso(k, bij, iso)
