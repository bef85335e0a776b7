import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from math import gcd

from higman_gfr.errors import PreconditionError
from higman_gfr.gf2m import FieldCtx, field_new, from_hex, is_irreducible, to_hex

from conftest import oracle_inv, oracle_irreducible, oracle_mul


@pytest.fixture(scope="module")
def F5():
    return FieldCtx(5)


# --- construction -----------------------------------------------------------

def test_default_poly_is_smallest_irreducible():
    expected = next(p for p in range(0x20, 0x40) if oracle_irreducible(p))
    assert expected == 0x25
    assert FieldCtx(5).poly == 0x25


def test_irreducibility_agrees_with_trial_division():
    for f in range(2, 11):
        for p in range(1 << f, 1 << (f + 1)):
            assert is_irreducible(p) == oracle_irreducible(p), hex(p)


def test_reducible_poly_rejected():
    assert not oracle_irreducible(0x23)
    with pytest.raises(PreconditionError, match="reducible"):
        FieldCtx(5, 0x23)


def test_x4_x_1_accepted():
    assert FieldCtx(4, 0x13).poly == 0x13


@pytest.mark.parametrize("f", [3, 21, 0])
def test_exponent_range(f):
    with pytest.raises(PreconditionError):
        field_new(f)


def test_wrong_degree_rejected():
    with pytest.raises(PreconditionError, match="degree"):
        FieldCtx(5, 0x13)


def test_serialization_round_trip(F5):
    assert F5.to_json() == {"f": 5, "poly": "0x25"}
    assert FieldCtx.from_json(F5.to_json()) == F5
    assert to_hex(0x1F) == "0x1f" and from_hex("0x1f") == 31


# --- arithmetic examples ------------------------------------------------------

def test_add_examples(F5):
    assert F5.add(0x05, 0x06) == 0x03
    for a in range(32):
        assert F5.add(a, a) == 0
        assert F5.add(a, 0) == a


def test_mul_examples(F5):
    assert F5.mul(0x10, 0x02) == 0x05 == oracle_mul(0x10, 0x02, 0x25)
    for a in range(32):
        assert F5.mul(a, 1) == a


def test_inv_examples(F5):
    assert F5.inv(1) == 1
    assert F5.inv(0x02) == 0x12 == oracle_inv(0x02, 0x25)
    for a in range(1, 32):
        assert F5.mul(a, F5.inv(a)) == 1
        assert F5.inv(F5.inv(a)) == a
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


@pytest.mark.parametrize("f", [4, 5, 6, 7, 8])
def test_mul_matches_long_division_exhaustively(f):
    F = FieldCtx(f)
    if f > 6:
        rng = np.random.default_rng(f)
        pairs = rng.integers(0, F.q, size=(2000, 2)).tolist()
    else:
        pairs = [(a, b) for a in range(F.q) for b in range(F.q)]
    for a, b in pairs:
        assert F.mul(a, b) == oracle_mul(a, b, F.poly)


def test_pow_examples(F5):
    q = F5.q
    for a in range(1, q):
        assert F5.pow(a, 0) == 1
        assert F5.pow(a, q - 1) == 1
        assert F5.pow(a, q) == a
        assert F5.pow(a, -1) == F5.inv(a)
    assert F5.pow(0, 0) == 1 and F5.pow(0, 3) == 0
    with pytest.raises(ZeroDivisionError):
        F5.pow(0, -1)


def test_frob_examples(F5):
    for f0 in range(5):
        assert F5.frob(0, f0) == 0
        assert F5.frob(1, f0) == 1
        for x in range(32):
            assert F5.frob(x, f0) == F5.pow(x, 2**f0)


def test_root_exp(F5):
    # 3 * 21 = 63 = 1 mod 31
    assert pow(3, -1, 31) == 21
    for x in range(32):
        assert F5.pow(F5.root_exp(x, 3), 3) == x
        assert F5.root_exp(x, 3) == F5.pow(x, 21)
    assert F5.root_exp(1, 7) == 1
    assert F5.root_exp(0, 3) == 0
    with pytest.raises(PreconditionError):
        FieldCtx(4).root_exp(2, 3)  # gcd(3, 15) = 3


def _phi(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@pytest.mark.parametrize("f", [4, 5, 6])
def test_primitive_count(f):
    F = FieldCtx(f)
    assert not F.is_primitive(1)
    prims = F.primitive_elements()
    assert len(prims) == _phi(F.q - 1)
    # order oracle: smallest e with x^e = 1, by repeated multiplication
    for x in range(1, F.q):
        e, y = 1, x
        while y != 1:
            y = oracle_mul(y, x, F.poly)
            e += 1
        assert F.order(x) == e
        assert F.is_primitive(x) == (e == F.q - 1)
    with pytest.raises(PreconditionError):
        F.is_primitive(0)


def test_primitive_counts_f4_f5():
    assert len(FieldCtx(5).primitive_elements()) == 30
    assert len(FieldCtx(4).primitive_elements()) == 8


def test_dlog(F5):
    for eta in F5.primitive_elements():
        assert F5.dlog(eta, 1) == 0
        assert F5.dlog(eta, eta) == 1
        for x in range(1, 32):
            i = F5.dlog(eta, x)
            assert 0 <= i <= 30 and F5.pow(eta, i) == x
            assert F5.bsgs_log(eta, x) == i
    with pytest.raises(PreconditionError):
        F5.dlog(2, 0)
    with pytest.raises(PreconditionError):
        FieldCtx(4).dlog(FieldCtx(4).pow(2, 3), 1)  # order-5 element


# --- table vs shift-and-reduce --------------------------------------------------

@pytest.mark.parametrize("f", [4, 5, 7, 9])
def test_tables_agree_with_shift_and_reduce(f):
    T = FieldCtx(f)
    S = FieldCtx(f, use_tables=False)
    assert T.has_tables and not S.has_tables
    rng = np.random.default_rng(0)
    xs = rng.integers(0, T.q, 3000)
    ys = rng.integers(0, T.q, 3000)
    assert np.array_equal(T.mul_arr(xs, ys), S.mul_arr(xs, ys))
    for x, y in zip(xs[:300].tolist(), ys[:300].tolist()):
        assert T.mul(x, y) == S.mul(x, y) == int(T.mul_arr(x, y))
        if x:
            assert T.inv(x) == S.inv(x)
            assert T.pow(x, y) == S.pow(x, y)
    eta = T.generator
    for x in range(1, min(T.q, 200)):
        assert T.dlog(eta, x) == S.dlog(eta, x)


def test_large_field_without_tables():
    F = FieldCtx(18)
    assert not F.has_tables
    x = 0x2ABCD
    assert F.mul(x, F.inv(x)) == 1
    assert F.pow(x, F.q) == x
    assert F.pow(F.generator, F.dlog(F.generator, x)) == x


# --- field axioms and structural properties -----------------------------------

@pytest.mark.parametrize("f", [4, 5, 7])
def test_field_axioms_random_triples(f):
    F = FieldCtx(f)
    rng = np.random.default_rng(100 + f)
    a, b, c = rng.integers(0, F.q, (3, 10_000))
    m = F.mul_arr
    assert np.array_equal(m(m(a, b), c), m(a, m(b, c)))
    assert np.array_equal(m(a, b ^ c), m(a, b) ^ m(a, c))
    assert np.array_equal(m(a, b), m(b, a))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 127), st.integers(0, 127), st.integers(0, 127))
def test_field_axioms_scalar(a, b, c):
    F = FieldCtx(7)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)


def test_frobenius_additive(F5):
    for f0 in range(1, 5):
        for a in range(32):
            for b in range(32):
                assert F5.frob(a ^ b, f0) == F5.frob(a, f0) ^ F5.frob(b, f0)


@pytest.mark.parametrize("f,f0", [(5, 1), (5, 2), (7, 1), (7, 3)])
def test_norm_map_bijective(f, f0):
    F = FieldCtx(f)
    q0 = 2**f0
    assert gcd(q0 + 1, F.q - 1) == 1
    assert sorted(F.pow(a, q0 + 1) for a in range(1, F.q)) == list(range(1, F.q))


@pytest.mark.parametrize("f,f0", [(5, 1), (5, 2), (7, 2)])
def test_trace_like_map_kernel(f, f0):
    F = FieldCtx(f)
    assert gcd(2 ** (2 * f0) - 1, F.q - 1) == 1
    kernel = [a for a in range(F.q) if a ^ F.frob(a, f0) == 0]
    assert kernel == [0, 1]


def test_vectorized_helpers(F5):
    xs = np.arange(32)
    assert np.array_equal(F5.pow_arr(xs, 5), [F5.pow(x, 5) for x in range(32)])
    assert np.array_equal(F5.frob_arr(xs, 2), [F5.frob(x, 2) for x in range(32)])
    assert np.array_equal(F5.inv_arr(xs[1:]), [F5.inv(x) for x in range(1, 32)])
    with pytest.raises(ZeroDivisionError):
        F5.inv_arr(xs)
