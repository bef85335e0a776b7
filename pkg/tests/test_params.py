import pytest
from math import gcd

from higman_gfr.errors import PreconditionError
from higman_gfr.higman import HigmanCtx
from higman_gfr.params import (
    check_u, enumerate_u_set, eta_from_u, find_u_summary, poly_u, rational_U, u2_holds,
    u_from_eta, u_image,
)

from conftest import oracle_inv, oracle_mul, oracle_pow

U51 = [0x6, 0x7, 0x8, 0x9, 0xA, 0xB, 0xE, 0xF, 0x12, 0x13, 0x14, 0x15,
       0x16, 0x17, 0x18, 0x19, 0x1C, 0x1D, 0x1E, 0x1F]


def oracle_u_set(f, f0):
    """Double filter with schoolbook arithmetic: (U1) by primitive eta, (U2) by root search."""
    poly = {5: 0x25, 7: 0x83}[f]
    q, q0 = 1 << f, 1 << f0
    prims = [e for e in range(2, q) if all(oracle_pow(e, (q - 1) // r, poly) != 1
                                           for r in (p for p in range(2, q) if (q - 1) % p == 0
                                                     and all(p % t for t in range(2, p))))]
    us = set()
    for e in prims:
        eq = oracle_pow(e, q0, poly)
        us.add(oracle_mul(1 ^ eq, oracle_inv(e ^ eq, poly), poly))

    def root_free(u):
        for x in range(q):
            xq = oracle_pow(x, q0, poly)
            val = oracle_mul(x, xq, poly) ^ oracle_mul(u, xq, poly) ^ oracle_mul(u ^ 1, x, poly) ^ 1
            if val == 0:
                return False
        return True

    return sorted(u for u in us if root_free(u))


def test_u_from_eta_worked_example(ctx51):
    assert u_from_eta(ctx51, 2) == oracle_mul(0x05, oracle_inv(0x06, 0x25), 0x25) == 0x13


def test_u_from_eta_rejects_degenerate(ctx51):
    for eta in (0, 1):
        with pytest.raises(PreconditionError):
            u_from_eta(ctx51, eta)


@pytest.mark.parametrize("f0", [1, 2])
def test_eta_round_trip(f0):
    ctx = HigmanCtx.create(5, f0)
    for eta in range(2, 32):
        assert eta_from_u(ctx, u_from_eta(ctx, eta)) == eta


def test_enumerated_set_frozen(ctx51, uset51):
    assert [t.u for t in uset51] == U51
    assert oracle_u_set(5, 1) == U51
    assert uset51[0].eta == 0xC


@pytest.mark.parametrize("f,f0", [(5, 2), (7, 1)])
def test_enumerated_set_matches_oracle(f, f0):
    ctx = HigmanCtx.create(f, f0)
    assert [t.u for t in enumerate_u_set(ctx)] == oracle_u_set(f, f0)


def test_summary_counts(ctx51, ctx52):
    for ctx in (ctx51, ctx52):
        s = find_u_summary(ctx)
        assert (s["count_u1"], s["count_u2"], s["count_both"]) == (30, 22, 20)


@pytest.mark.parametrize("f,f0", [(5, 1), (5, 2), (7, 1), (7, 2), (7, 3)])
def test_u2_count_bound(f, f0):
    ctx = HigmanCtx.create(f, f0)
    q = ctx.q
    count = sum(u2_holds(ctx, u) for u in range(q))
    assert 3 * count >= 2 * (q + 1)
    assert len(u_image(ctx)) <= q // 3


def test_rational_U_characterizes_roots(ctx51):
    for x in range(2, 32):
        u = rational_U(ctx51, x)
        assert poly_u(ctx51, u, x) == 0
    for u in range(32):
        roots = {x for x in range(2, 32) if poly_u(ctx51, u, x) == 0}
        assert roots == {x for x in range(2, 32) if rational_U(ctx51, x) == u}
    with pytest.raises(PreconditionError):
        rational_U(ctx51, 1)


def test_poly_u_never_vanishes_at_0_1(ctx51):
    for u in range(32):
        assert poly_u(ctx51, u, 0) == 1
        assert poly_u(ctx51, u, 1) == 1


def test_check_u(ctx51):
    t = check_u(ctx51, 0x6)
    assert t.eta == 0xC
    for bad in (0, 1):
        with pytest.raises(PreconditionError, match="U1"):
            check_u(ctx51, bad)
    u2_fail = next(u for u in range(2, 32) if not u2_holds(ctx51, u))
    with pytest.raises(PreconditionError, match="U2"):
        check_u(ctx51, u2_fail)


def test_enumeration_requires_gcd():
    with pytest.raises(PreconditionError):
        enumerate_u_set(HigmanCtx.create(4, 1))


@pytest.mark.parametrize("f", [5, 7])
def test_nonempty_for_admissible(f):
    for f0 in range(1, f):
        ctx = HigmanCtx.create(f, f0)
        if gcd(ctx.q - 1, ctx.q0 ** 2 - 1) == 1:
            assert enumerate_u_set(ctx)
