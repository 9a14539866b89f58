"""Exact polynomial layer: parsing, arithmetic, gcd, resultants, roots."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from mldlab.errors import PolySyntaxError, UnknownVariable
from mldlab.poly import (
    BiPoly,
    exact_div,
    factor_rational,
    format_poly,
    gcd_poly,
    poly_parse,
    resultant_y,
    squarefree_decomposition,
    uni_gcd,
    uni_rational_roots,
)


def P(text):
    return poly_parse(text)


# -- parser -------------------------------------------------------------------


def test_parse_direct_support():
    assert P("x^2 + y^3").terms == {(2, 0): F(1), (0, 3): F(1)}


def test_parse_cancellation_gives_zero():
    assert P("x - x").is_zero()


def test_parse_expands_parenthesised_square():
    # oracle: expand by hand
    assert P("(x+y)^2").terms == {(2, 0): F(1), (1, 1): F(2), (0, 2): F(1)}


def test_parse_rational_coefficients_and_signs():
    p = P("x^2 - 3/2*x*y + y^3")
    assert p.terms[(1, 1)] == F(-3, 2)


def test_parse_unknown_variable_is_rejected():
    with pytest.raises(UnknownVariable):
        P("x + z")


def test_parse_syntax_error_carries_position():
    with pytest.raises(PolySyntaxError) as err:
        P("x + + ^")
    assert err.value.pos >= 0


def test_parse_rejects_unbalanced_parens():
    with pytest.raises(PolySyntaxError):
        P("(x + y")


@st.composite
def bipolys(draw):
    n = draw(st.integers(1, 6))
    terms = {}
    for _ in range(n):
        i = draw(st.integers(0, 6))
        j = draw(st.integers(0, 6))
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 5))
        if num:
            terms[(i, j)] = F(num, den)
    return BiPoly(terms)


@settings(max_examples=1000, deadline=None)
@given(bipolys())
def test_print_parse_round_trip(p):
    assert poly_parse(format_poly(p)) == p


def test_sympy_expansion_oracle_agrees():
    import sympy

    x, y = sympy.symbols("x y")
    for text, expr in [
        ("(x+y)^2", (x + y) ** 2),
        ("(x - 2*y)^3 + x*y", (x - 2 * y) ** 3 + x * y),
        ("(1/2*x + y)*(x - 1/3)", (x / 2 + y) * (x - sympy.Rational(1, 3))),
    ]:
        got = P(text)
        want = sympy.Poly(sympy.expand(expr), x, y)
        assert got == _from_sympy_poly(want)


def _from_sympy_poly(p):
    terms = {}
    for (i, j), c in p.terms():
        terms[(i, j)] = F(c.p, c.q)
    return BiPoly(terms)


# -- orders and arithmetic -----------------------------------------------------


@settings(max_examples=300, deadline=None)
@given(bipolys(), bipolys())
def test_order_is_additive_on_products(f, g):
    assert (f * g).order() == f.order() + g.order()


@settings(max_examples=300, deadline=None)
@given(bipolys(), bipolys())
def test_order_of_sum_at_least_min(f, g):
    assert (f + g).order() >= min(f.order(), g.order())


def test_zero_order_is_infinite():
    assert BiPoly.zero().order() == math.inf


def test_pow_matches_repeated_multiplication():
    p = P("x + 2*y - 1")
    assert p**4 == p * p * p * p


def test_translate_recentres():
    p = P("x^2 - x")
    assert p.translate(1, 0).order() == 1


# -- gcd / division / factorisation --------------------------------------------


def test_exact_division_round_trip():
    f, g = P("x^2*y - y^3 + x"), P("x*y - 1 + y^2")
    assert exact_div(f * g, g) == f


def test_exact_division_rejects_non_divisor():
    with pytest.raises(ArithmeticError):
        exact_div(P("x^2 + y"), P("x + 1"))


@settings(max_examples=120, deadline=None)
@given(bipolys(), bipolys(), bipolys())
def test_gcd_divides_and_is_monic(f, g, h):
    from mldlab.poly import divides

    a, b = f * h, g * h
    if a.is_zero() and b.is_zero():
        return
    d = gcd_poly(a, b)
    assert divides(d, a) and divides(d, b)
    assert divides(h, d)
    assert d.leading_term()[1] == 1


def test_gcd_matches_sympy_oracle():
    import sympy

    x, y = sympy.symbols("x y")
    cases = [
        ("x^2*y + x*y^2", "x*y + y^2"),
        ("(x+y)^2*(x-1)", "(x+y)*(y-1)"),
        ("x^3 - y^3", "x^2 - y^2"),
        ("x^2 - 2*y^2", "x^2 + y^2"),
    ]
    for a, b in cases:
        ours = gcd_poly(P(a), P(b))
        theirs = sympy.gcd(
            sympy.Poly(sympy.sympify(a.replace("^", "**")), x, y),
            sympy.Poly(sympy.sympify(b.replace("^", "**")), x, y),
        )
        want = _from_sympy_poly(sympy.Poly(theirs, x, y)).monic()
        assert ours == want


def test_factor_rational_splits_components():
    factors = factor_rational(P("x^2*y + x*y^2"))
    polys = sorted(format_poly(p) for p, _ in factors)
    assert polys == ["x", "x + y", "y"]
    assert all(m == 1 for _, m in factors)


def test_squarefree_decomposition_groups_multiplicities():
    f = P("x") ** 2 * P("y + x^2")
    dec = squarefree_decomposition(f)
    assert [(format_poly(p), m) for p, m in dec] == [("x^2 + y", 1), ("x", 2)]


# -- univariate helpers ---------------------------------------------------------


def test_resultant_detects_common_roots():
    r = resultant_y(P("x^2 - 1"), P("y"))
    roots, resid = uni_rational_roots(r)
    assert roots == [F(-1), F(1)] and resid == 0


def test_rational_roots_quadratic_and_residual():
    roots, resid = uni_rational_roots([F(-2), F(0), F(1)])  # t^2 - 2
    assert roots == [] and resid == 2
    roots, resid = uni_rational_roots([F(-1), F(0), F(1)])  # t^2 - 1
    assert roots == [F(-1), F(1)] and resid == 0


def test_rational_roots_cubic_with_fraction():
    # (2t - 1)(t + 3)(t - 5)
    from mldlab.poly import uni_mul

    c = uni_mul(uni_mul([F(-1), F(2)], [F(3), F(1)]), [F(-5), F(1)])
    roots, resid = uni_rational_roots(c)
    assert roots == [F(-3), F(1, 2), F(5)] and resid == 0


def test_uni_gcd_normalises_monic():
    g = uni_gcd([F(0), F(2)], [F(0), F(0), F(4)])
    assert g == [F(0), F(1)]
