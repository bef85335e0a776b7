import numpy as np
import pytest

from higman_gfr.automorphism import aut_group
from higman_gfr.cayley import build
from higman_gfr.errors import PreconditionError
from higman_gfr.gpg import (
    GpgSpec, alpha, delta, gpg_build, gpg_k, gpgparam_check, inner, neighborhood_iso, outer,
    relations, rho,
)
from higman_gfr.higman import HigmanCtx
from higman_gfr.params import enumerate_u_set


def test_spec_validation():
    GpgSpec(7, 2)
    for n, k in [(2, 1), (8, 4), (7, 0), (7, 7)]:
        with pytest.raises(PreconditionError):
            GpgSpec(n, k)


def test_structure():
    g = gpg_build(7, 2)
    assert g.n == 14 and g.num_edges == 21 and g.is_regular() and int(g.deg[0]) == 3
    assert g.has_edge(outer(7, 1), outer(7, 2))
    assert g.has_edge(outer(7, 1), inner(7, 1))
    assert g.has_edge(inner(7, 1), inner(7, 3))
    assert not g.has_edge(outer(7, 1), inner(7, 3))


def test_k_and_n_minus_k_same_graph():
    assert np.array_equal(gpg_build(9, 2).edges(), gpg_build(9, 7).edges())


def test_petersen():
    g = gpg_build(5, 2)
    assert g.girth() == 5
    assert aut_group(g).order() == 120
    with pytest.raises(PreconditionError):
        gpgparam_check(5, 2)


@pytest.mark.parametrize("n,k", [(7, 2), (9, 2), (31, 11), (31, 17), (31, 18)])
def test_relations(n, k):
    r = relations(n, k)
    assert r["rho_n_id"] and r["delta_sq_id"] and r["delta_rho_delta_is_rho_inv"]
    assert r["rho_delta_automorphisms"]
    assert r["dihedral_order"] == 2 * n


def test_alpha_when_k_squared_is_pm1():
    # 5^2 = 25 = -1 mod 13
    a, is_aut = alpha(13, 5)
    assert is_aut
    r = relations(13, 5)
    assert r["alpha_conj_rho_is_rho_k"] and r["alpha_delta_commute"]
    assert r["alpha_sq"] == "delta"
    assert aut_group(gpg_build(13, 5)).order() == 4 * 13
    with pytest.raises(PreconditionError):
        alpha(9, 3)


@pytest.mark.parametrize("n,k", [(7, 2), (9, 2)])
def test_gpgparam(n, k):
    res = gpgparam_check(n, k)
    assert res["aut_order"] == 2 * n
    assert res["i_holds"] and res["ii_holds"]
    assert res["odd_count"] == n


def test_gpgparam_excluded_k():
    res = gpgparam_check(7, 1)  # prism: k = 1 is outside the hypothesis
    assert res["ii_holds"] is None


def test_gpg_k_definition(ctx51):
    F = ctx51.field
    for eta in F.primitive_elements():
        k = gpg_k(ctx51, eta)
        assert F.pow(eta, k + 1) == 1 ^ eta


@pytest.mark.parametrize("f0", [1, 2])
def test_neighborhood_iso_all_u(f0):
    ctx = HigmanCtx.create(5, f0)
    ks = set()
    for t in enumerate_u_set(ctx):
        iso = neighborhood_iso(ctx, t)
        assert iso.iso and t.k == iso.k
        assert iso.k not in (1, 30)
        ks.add(iso.k)
        assert sorted(iso.bijection.tolist()) == build(ctx, t.u).neighbors(0).tolist()
    assert ks == ({11, 17, 18, 19} if f0 == 1 else {11, 12, 13, 17})


def test_first_u_has_k18(ctx51, uset51):
    assert neighborhood_iso(ctx51, uset51[0]).k == 18


def test_neighborhood_aut_is_dihedral(gamma51):
    sub, _ = gamma51.induced(gamma51.neighbors(0))
    assert aut_group(sub).order() == 62


def test_rho_delta_shapes():
    assert rho(5)[outer(5, 5)] == outer(5, 1)
    assert delta(5)[inner(5, 1)] == inner(5, -1)
