import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2poly.ring import (
    A6P1,
    A12P1,
    DELTA,
    PHI18,
    A_CIRCLE,
    B_BIGON,
    LaurentA,
    NotDivisible,
    SurfacePoly,
    exact_div,
    laurent_arith,
    named_constant,
    parse_laurent,
    quotient_reduce,
    render_laurent,
    render_surface,
)

laurents = st.dictionaries(
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentA)

nonzero_laurents = laurents.filter(lambda p: not p.is_zero())


@given(laurents, laurents, laurents)
def test_ring_laws(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * LaurentA({0: 1}) == p


@given(laurents, laurents)
def test_sub_neg(p, q):
    assert p - q == p + (-q)
    assert p + (-p) == LaurentA()


@given(laurents, st.integers(min_value=0, max_value=5))
def test_pow_matches_repeated_product(p, n):
    expected = LaurentA({0: 1})
    for _ in range(n):
        expected = expected * p
    assert p**n == expected


def test_laurent_arith_dispatch():
    p, q = A_CIRCLE, B_BIGON
    assert laurent_arith(p, q, "add") == p + q
    assert laurent_arith(p, q, "sub") == p - q
    assert laurent_arith(p, q, "mul") == p * q
    assert laurent_arith(p, None, "neg") == -p
    assert laurent_arith(q, None, "pow", 2) == q * q


def test_named_constants():
    A = named_constant("A")
    B = named_constant("B")
    assert A == LaurentA({-6: 1, 0: 1, 6: 1})
    assert B == LaurentA({-3: 1, 3: 1})
    assert B * B - A == LaurentA({0: 1})
    assert named_constant("DELTA") == A * A - LaurentA({0: 1})
    assert DELTA == LaurentA({-12: 1, -6: 2, 0: 2, 6: 2, 12: 1})
    factored = LaurentA({-12: 1}) * LaurentA({0: 1, 12: 1}) * LaurentA({0: 1, 6: 1}) ** 2
    assert factored == DELTA


def test_power_sum_identity():
    assert LaurentA({-3: 1, 3: 1}) ** 2 == A_CIRCLE + LaurentA({0: 1})


@given(nonzero_laurents, nonzero_laurents)
def test_exact_div_roundtrip(p, q):
    assert exact_div(p * q, q) == p


def test_exact_div_cases():
    A, B = A_CIRCLE, B_BIGON
    assert exact_div(A * A, A) == A
    assert exact_div(A * B**3, B) == A * B**2
    with pytest.raises(NotDivisible):
        exact_div(A, B)


@given(laurents, laurents)
@settings(max_examples=60)
def test_quotient_homomorphism(p, q):
    for ring in (A6P1, A12P1, PHI18):
        assert quotient_reduce(p * q, ring) == quotient_reduce(p, ring) * quotient_reduce(q, ring)
        assert quotient_reduce(p + q, ring) == quotient_reduce(p, ring) + quotient_reduce(q, ring)


def test_quotient_values():
    assert str(quotient_reduce(LaurentA({12: 1}), A6P1)) == "1"
    assert str(quotient_reduce(A_CIRCLE, A6P1)) == "-1"
    trefoil = LaurentA({12: 1, 24: 1, 36: -1})
    assert str(quotient_reduce(trefoil, PHI18)) == "-2"
    assert quotient_reduce(DELTA, A6P1).is_zero()
    assert quotient_reduce(DELTA, A12P1).is_zero()


def test_unit_inverse_of_a():
    for ring in (A6P1, A12P1, PHI18):
        a = ring.from_laurent(LaurentA({1: 1}))
        a_inv = ring.from_laurent(LaurentA({-1: 1}))
        one = ring.from_laurent(LaurentA({0: 1}))
        assert a * a_inv == one


def test_rendering_grammar():
    assert render_laurent(LaurentA({-24: 1, -18: 1, -6: 1})) == "a^-24 + a^-18 + a^-6"
    assert render_laurent(LaurentA({12: 1, 24: 1, 36: -1})) == "a^12 + a^24 - a^36"
    assert render_laurent(LaurentA({0: 2, 1: -3})) == "2 - 3*a"
    assert render_laurent(LaurentA()) == "0"
    s = SurfacePoly({(2, 0): A_CIRCLE})
    assert render_surface(s) == "(a^-6 + 1 + a^6)*x^2*y^0"


@given(laurents)
def test_render_parse_roundtrip(p):
    assert parse_laurent(render_laurent(p)) == p


@given(laurents, laurents, laurents)
@settings(max_examples=40)
def test_surface_poly_laws(a, b, c):
    p = SurfacePoly({(1, 0): a, (0, 1): b})
    q = SurfacePoly({(1, 1): c})
    assert p * q == q * p
    assert (p + q) - q == p


def test_surface_total_degree_division():
    p = SurfacePoly({(2, 1): A_CIRCLE})
    assert p.div_xy_monomial(1, 1) == SurfacePoly({(1, 0): A_CIRCLE})
    with pytest.raises(NotDivisible):
        SurfacePoly({(1, 0): A_CIRCLE}).div_xy_monomial(0, 1)
