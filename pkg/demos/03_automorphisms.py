# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Aut(Gamma_u) is a Frobenius group of order q^2 (q-1)
#
# The search refines the vertex partition, individualizes base points and
# collects one automorphism per orbit point.  The resulting generators go
# into a stabilizer chain, which gives the exact order and membership tests.

# +
import time

from higman_gfr import HigmanCtx
from higman_gfr.params import enumerate_u_set
from higman_gfr.cayley import build, g_generators
from higman_gfr.automorphism import aut_group, block_systems, frobenius_report, refine, individualize, cells

ctx = HigmanCtx.create(5, 1)
t = enumerate_u_set(ctx)[0]
g = build(ctx, t.u)
# -

# The graph is vertex-transitive, so refinement alone cannot split anything.
# Fixing the identity splits it into 34 cells; fixing a second vertex makes
# the partition discrete.

root = refine(g)
one = refine(g, individualize(root, 0))
print(len(cells(root)), len(cells(one)))

t0 = time.perf_counter()
A = aut_group(g)
print("order", A.order(), "=", 32 * 32 * 31, "base", A.base, "orbits", A.basic_orbit_lengths())
print(f"{time.perf_counter() - t0:.2f}s", A.search_stats.nodes, "search nodes")

# G is generated by right translations by Omega_u and by one Psi.  All of
# them sift through the chain.

print(all(A.contains(p) for p in g_generators(ctx, t.u, t.eta)))

# Transitive, not regular, and no nonidentity element fixes two vertices.

print(frobenius_report(A))

# The only minimal block through the identity is K' = ids 0..31.

print(block_systems(A, 0))
