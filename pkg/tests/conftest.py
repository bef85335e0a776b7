"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own arithmetic: field
products use schoolbook polynomial multiplication and long division, and
irreducibility uses trial division by every lower-degree polynomial.
"""
import itertools

import numpy as np
import pytest

from higman_gfr.cayley import build
from higman_gfr.higman import HigmanCtx
from higman_gfr.params import enumerate_u_set


# --- polynomial long-division oracle over GF(2) ---------------------------

def poly_mul(a, b):
    r = 0
    i = 0
    while b >> i:
        if b >> i & 1:
            r ^= a << i
        i += 1
    return r


def poly_rem(a, m):
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def oracle_mul(a, b, poly):
    return poly_rem(poly_mul(a, b), poly)


def oracle_pow(a, e, poly):
    r = 1
    for _ in range(e):
        r = oracle_mul(r, a, poly)
    return r


def oracle_inv(a, poly):
    q = 1 << (poly.bit_length() - 1)
    return next(b for b in range(1, q) if oracle_mul(a, b, poly) == 1)


def oracle_irreducible(poly):
    d = poly.bit_length() - 1
    for div in range(2, 1 << (d // 2 + 1)):
        if div.bit_length() - 1 <= d // 2 and poly_rem(poly, div) == 0:
            return False
    return True


# --- brute-force automorphism oracles -------------------------------------

def brute_automorphisms(adj):
    """Every permutation p with adj[p][:, p] == adj, by exhaustive search."""
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    ok = np.ones(len(perms), dtype=bool)
    for start in range(0, len(perms), 50000):
        P = perms[start:start + 50000]
        # p is an automorphism iff adj[x, y] == adj[p[x], p[y]] for all x, y
        mapped = adj[P[:, :, None], P[:, None, :]]
        ok[start:start + 50000] = np.all(mapped == adj[None], axis=(1, 2))
    return perms[ok]


def backtrack_automorphisms(adj):
    """Automorphisms by vertex-by-vertex extension (no refinement involved)."""
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    deg = adj.sum(axis=1)
    out = []
    img = [-1] * n
    used = [False] * n

    def extend(x):
        if x == n:
            out.append(list(img))
            return
        for y in range(n):
            if used[y] or deg[y] != deg[x]:
                continue
            if all(adj[x, z] == adj[y, img[z]] for z in range(x)):
                img[x] = y
                used[y] = True
                extend(x + 1)
                used[y] = False
                img[x] = -1

    extend(0)
    return np.array(out, dtype=np.int64)


# --- common objects --------------------------------------------------------

@pytest.fixture(scope="session")
def ctx51():
    return HigmanCtx.create(5, 1)


@pytest.fixture(scope="session")
def ctx52():
    return HigmanCtx.create(5, 2)


@pytest.fixture(scope="session")
def uset51(ctx51):
    return enumerate_u_set(ctx51)


@pytest.fixture(scope="session")
def gamma51(ctx51, uset51):
    return build(ctx51, uset51[0].u)


# --- acceptance summary ----------------------------------------------------

def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if getattr(rep, "when", "call") != "call":
                continue
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if key == "passed" else "FAIL", props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, status, detail in sorted(lines, key=lambda t: (int(t[0].split()[0]), t[0])):
            terminalreporter.write_line(f"{status}  criterion {crit}  {detail}")
