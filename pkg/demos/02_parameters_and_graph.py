# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Admissible u and the Cayley graph Gamma_u
#
# u qualifies when it comes from a primitive eta through
# u = (1 + eta^q0) / (eta + eta^q0), and the polynomial
# X^(q0+1) + u X^q0 + (u+1) X + 1 has no root in the field.

# +
from higman_gfr import HigmanCtx
from higman_gfr.params import enumerate_u_set, find_u_summary, u_image
from higman_gfr.cayley import build, incidence_suite
from higman_gfr.gpg import neighborhood_iso, gpg_build

ctx = HigmanCtx.create(5, 1)
triples = enumerate_u_set(ctx)
print(find_u_summary(ctx))
print([hex(t.u) for t in triples])
print("values u with a root:", [hex(v) for v in sorted(u_image(ctx))])
# -

# Gamma_u has vertex set K and connection set Omega_u together with
# Omega_{u+1}, which is closed under inverses.

t = triples[0]
g = build(ctx, t.u)
print(g, "degree", int(g.deg[0]), "connected", g.connected())

# Every edge between two orbits near the identity is predicted by a ratio
# b/a, and the incidence suite checks each of those six statements for all
# pairs (a, b).

inc = incidence_suite(ctx, t.u)
print(inc["violations"], inc["edge_counts"])

# The neighbourhood of the identity is a cubic graph on 62 vertices.  The
# explicit map c_i -> Phi(eta^i, ...) identifies it with GPG(31, k), where
# 1 + eta = eta^(k+1).

iso = neighborhood_iso(ctx, t, g)
print("k =", iso.k, "isomorphic:", iso.iso)
print("GPG(31, k) girth", gpg_build(31, iso.k).girth())

# Graphs can be written as graph6 for other tools.

data = g.to_graph6()
print(len(data), "bytes of graph6")
