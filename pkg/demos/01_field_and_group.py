# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # The field GF(32) and the group K
#
# Field elements are plain ints: bit i is the coefficient of x^i.  The
# default modulus is the smallest irreducible polynomial of the degree,
# x^5 + x^2 + 1 = 0x25 for f = 5.

# +
import numpy as np

from higman_gfr import FieldCtx, HigmanCtx, PhiElt, ghk_property_suite

F = FieldCtx(5)
print(F, "generator", F.generator)
print("x^4 * x =", hex(F.mul(0x10, 0x02)))
print("1/x =", hex(F.inv(0x02)))
# -

# The multiplicative group is cyclic of prime order 31, so every element
# except 0 and 1 is primitive.

print(len(F.primitive_elements()), "primitive elements")

# Array versions take numpy arrays of ints and go through the log tables.

xs = np.arange(32)
cubes = F.pow_arr(xs, 3)
print("cubing is a bijection:", np.unique(cubes).size == 32)

# ## K = {Phi(a, c)}
#
# With q0 = 2 the product is Phi(a,c) Phi(b,d) = Phi(a+b, c+d+a^2 b).  K has
# order 1024, exponent 4, and its center is the subgroup K' with a = 0.

ctx = HigmanCtx.create(5, 1)
p, r = PhiElt(3, 7), PhiElt(5, 1)
print(ctx.phi_mul(p, r), ctx.phi_mul(r, p))
print("commutator", ctx.phi_commutator(p, r))
print("p^4 =", ctx.phi_pow(p, 4))

# H = {Psi(lambda)} acts by conjugation and splits K minus the identity into
# 33 orbits of size 31: one Omega_u for each u in the field and Omega_inf = K'.

orb = ctx.omega(6)
print("Omega_6 starts", orb.elements[:4])
print({ctx.orbit_label(x) for x in orb.elements})

# The structural facts about K and H can be checked exhaustively at this size.

rep = ghk_property_suite(ctx)
print({k: v for k, v in rep.items() if k != "iii_by_u"})
