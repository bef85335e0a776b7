"""The groups K, H and G = HK = A(f, q0).

K consists of the lower unitriangular 3x3 matrices Phi(a, c) with (2,1)
entry a, (3,1) entry c and (3,2) entry a^q0.  H consists of the diagonal
matrices Psi(lam) = diag(1, lam, lam^(q0+1)).  Elements of K are stored as
coordinate pairs; the matrices only appear in tests.

Conjugation is right conjugation, g^h = h^-1 g h.
"""
from __future__ import annotations

from math import gcd
from typing import NamedTuple, Union

import numpy as np

from .errors import PreconditionError, ResourceLimitError
from .gf2m import FieldCtx, from_hex, to_hex

INF = "inf"
PAIRWISE_LIMIT = 1 << 12
Label = Union[int, str]


class PhiElt(NamedTuple):
    a: int
    c: int

    def to_str(self) -> str:
        return f"{to_hex(self.a)}:{to_hex(self.c)}"

    @classmethod
    def from_str(cls, s: str) -> "PhiElt":
        a, c = s.split(":")
        return cls(from_hex(a), from_hex(c))


class PsiElt(NamedTuple):
    lam: int


IDENTITY = PhiElt(0, 0)


class OrbitSet(NamedTuple):
    label: Label
    elements: list

    def to_json(self) -> dict:
        label = INF if self.label == INF else to_hex(self.label)
        return {"label": label, "elements": [p.to_str() for p in self.elements]}


class HigmanCtx:
    """Parameters (q, q0) of A(f, q0) together with the field."""

    def __init__(self, field: FieldCtx, f0: int):
        if not 1 <= f0 < field.f:
            raise PreconditionError(f"need 1 <= f0 < f, got f0={f0}, f={field.f}")
        self.field = field
        self.f0 = f0
        self.q = field.q
        self.q0 = 1 << f0
        self.n = self.q * self.q
        self.gcd_value = gcd(self.q - 1, self.q0 * self.q0 - 1)
        self.gcd_ok = self.gcd_value == 1

    @classmethod
    def create(cls, f: int, f0: int, poly: int | None = None) -> "HigmanCtx":
        return cls(FieldCtx(f, poly), f0)

    def __repr__(self):
        return f"HigmanCtx(f={self.field.f}, f0={self.f0}, poly={self.field.poly:#x})"

    def require_gcd(self):
        if not self.gcd_ok:
            raise PreconditionError(
                f"gcd(q-1, q0^2-1) = gcd({self.q - 1}, {self.q0 ** 2 - 1}) = {self.gcd_value} != 1"
            )

    # field shorthands

    def fr(self, x: int) -> int:
        """x^q0."""
        return self.field.frob(x, self.f0)

    def norm(self, x: int) -> int:
        """x^(q0+1)."""
        return self.field.mul(x, self.fr(x))

    # element algebra

    def phi_mul(self, p: PhiElt, r: PhiElt) -> PhiElt:
        F = self.field
        return PhiElt(p.a ^ r.a, p.c ^ r.c ^ F.mul(self.fr(p.a), r.a))

    def phi_inv(self, p: PhiElt) -> PhiElt:
        return PhiElt(p.a, p.c ^ self.norm(p.a))

    def phi_pow(self, p: PhiElt, e: int) -> PhiElt:
        r = IDENTITY
        for _ in range(e):
            r = self.phi_mul(r, p)
        return r

    def phi_commutator(self, p: PhiElt, r: PhiElt) -> PhiElt:
        """[p, r] = p^-1 r^-1 p r, in closed form."""
        F = self.field
        return PhiElt(0, F.mul(self.fr(p.a), r.a) ^ F.mul(p.a, self.fr(r.a)))

    def conj_by_psi(self, p: PhiElt, psi: PsiElt | int) -> PhiElt:
        lam = psi.lam if isinstance(psi, PsiElt) else psi
        if not lam:
            raise PreconditionError("Psi needs a nonzero lambda")
        F = self.field
        return PhiElt(F.div(p.a, lam), F.div(p.c, self.norm(lam)))

    def omega(self, label: Label) -> OrbitSet:
        """The H-orbit Omega_u (u in F_q) or Omega_inf."""
        if label == INF:
            return OrbitSet(INF, [PhiElt(0, c) for c in range(1, self.q)])
        u = self.field.check(label)
        return OrbitSet(u, [PhiElt(a, self.field.mul(u, self.norm(a))) for a in range(1, self.q)])

    def orbit_label(self, p: PhiElt) -> Label | None:
        """Which H-orbit p lies in (None for the identity)."""
        if p.a == 0:
            return INF if p.c else None
        return self.field.div(p.c, self.norm(p.a))

    # vertex indexing: id = a*q + c

    def vid(self, p: PhiElt) -> int:
        a, c = p
        return a * self.q + c

    def elt(self, v: int) -> PhiElt:
        return PhiElt(*divmod(int(v), self.q))

    # vectorized versions on id arrays

    def split(self, ids):
        ids = np.asarray(ids, dtype=np.int64)
        return ids // self.q, ids % self.q

    def join(self, a, c):
        return np.asarray(a, dtype=np.int64) * self.q + np.asarray(c, dtype=np.int64)

    def mul_ids(self, x, y):
        xa, xc = self.split(x)
        ya, yc = self.split(y)
        cross = self.field.mul_arr(self.field.frob_arr(xa, self.f0), ya)
        return self.join(xa ^ ya, xc ^ yc ^ cross)

    def inv_ids(self, x):
        a, c = self.split(x)
        return self.join(a, c ^ self.field.mul_arr(a, self.field.frob_arr(a, self.f0)))

    def conj_ids(self, x, lam: int):
        F = self.field
        a, c = self.split(x)
        li = F.inv(lam)
        return self.join(F.mul_arr(a, li), F.mul_arr(c, F.inv(self.norm(lam))))

    def connection_ids(self, u: int) -> np.ndarray:
        """Vertex ids of Omega_u followed by Omega_{u+1}."""
        F = self.field
        a = np.arange(1, self.q, dtype=np.int64)
        nm = F.mul_arr(a, F.frob_arr(a, self.f0))
        return np.concatenate([self.join(a, F.mul_arr(u, nm)), self.join(a, F.mul_arr(u ^ 1, nm))])

    def closure(self, gens) -> np.ndarray:
        """Subgroup of K generated by ``gens`` (vertex ids), as a sorted id array.

        Work-list over a q^2 membership mask.
        """
        gens = np.unique(np.asarray(gens, dtype=np.int64))
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.int64)
        while frontier.size:
            prods = self.mul_ids(frontier[:, None], gens[None, :]).ravel()
            new = np.unique(prods[~seen[prods]])
            seen[new] = True
            frontier = new
        return np.flatnonzero(seen)


def ghk_property_suite(ctx: HigmanCtx, us=None) -> dict:
    """Exhaustively check the structural facts about K and H.

    (i)   the commutators generate {1} u Omega_inf, which is the center of K;
    (ii)  K' and K/K' are elementary abelian of order q;
    (iii) each Omega_u generates K;
    (iv)  H is transitive on K' \\ {1} and on the nontrivial K'-cosets;
    (v)   no proper nontrivial H-invariant subgroup of K' or K/K' exists.
    """
    ctx.require_gcd()
    if ctx.n > PAIRWISE_LIMIT:
        raise ResourceLimitError(f"|K| = {ctx.n} exceeds the all-pairs limit {PAIRWISE_LIMIT}")
    F, q = ctx.field, ctx.q
    every = np.arange(ctx.n, dtype=np.int64)
    kprime = np.arange(q, dtype=np.int64)  # ids with a = 0
    report = {}

    # (i): commutators over all pairs, via the four-fold product
    x, y = every[:, None], every[None, :]
    comm = ctx.mul_ids(ctx.mul_ids(ctx.inv_ids(x), ctx.inv_ids(y)), ctx.mul_ids(x, y))
    comm_set = np.unique(comm)
    derived = ctx.closure(comm_set)
    center = every[np.all(comm == 0, axis=1)]
    report["i_derived_is_Kprime"] = bool(np.array_equal(derived, kprime))
    report["i_center_is_Kprime"] = bool(np.array_equal(center, kprime))
    del comm

    # (ii)
    sq = ctx.mul_ids(kprime, kprime)
    kp_comm = ctx.mul_ids(ctx.mul_ids(ctx.inv_ids(kprime[:, None]), ctx.inv_ids(kprime[None, :])),
                          ctx.mul_ids(kprime[:, None], kprime[None, :]))
    squares_all = ctx.mul_ids(every, every)
    quotient_abelian = bool(np.all(np.isin(comm_set, kprime)))
    report["ii_Kprime_elementary_abelian"] = bool(np.all(sq == 0) and np.all(kp_comm == 0)) and kprime.size == q
    report["ii_quotient_elementary_abelian"] = (
        bool(np.all(squares_all < q)) and quotient_abelian and ctx.n // kprime.size == q
    )

    # (iii)
    if us is None:
        us = range(q)
    gen_ok = {}
    for u in us:
        gen_ok[u] = bool(ctx.closure(ctx.connection_ids(u)[: q - 1]).size == ctx.n)
    report["iii_omega_generates"] = all(gen_ok.values())
    report["iii_by_u"] = {to_hex(u): v for u, v in gen_ok.items()}

    # (iv): orbits of Phi(0,1) and of the coset a = 1
    lams = np.arange(1, q, dtype=np.int64)
    norms = F.mul_arr(lams, F.frob_arr(lams, ctx.f0))
    orbit_center = np.unique(F.mul_arr(1, F.inv_arr(norms)))
    orbit_cosets = np.unique(F.inv_arr(lams))
    report["iv_transitive_on_Kprime"] = orbit_center.size == q - 1
    report["iv_transitive_on_cosets"] = orbit_cosets.size == q - 1

    # (v): the H-orbit of every nontrivial element spans everything
    span_ok = True
    for c in range(1, q):
        orb = F.mul_arr(c, F.inv_arr(norms))
        if ctx.closure(orb).size != q:
            span_ok = False
            break
    coset_ok = True
    for a in range(1, q):
        if _gf2_span_size(F.mul_arr(a, F.inv_arr(lams))) != q:
            coset_ok = False
            break
    report["v_Kprime_irreducible"] = span_ok
    report["v_quotient_irreducible"] = coset_ok

    report["ok"] = all(v for k, v in report.items() if k != "iii_by_u")
    return report


def _gf2_span_size(vectors) -> int:
    """Size of the GF(2)-span of integers viewed as bit vectors."""
    basis = {}
    for v in map(int, vectors):
        while v:
            top = v.bit_length()
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return 1 << len(basis)
