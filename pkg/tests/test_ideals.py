"""Point-local ideal analysis: orders, splits, rational common zeros."""

import math
import random
from fractions import Fraction as F

import pytest

from mldlab.errors import (
    AllZeroGenerators,
    EmptyGeneratorList,
    IrrationalBasePoint,
    PositiveDimensionalCosupport,
)
from mldlab.ideals import (
    ORIGIN,
    RationalPoint,
    divisorial_split,
    ideal_order_at,
    order_at,
    rational_cosupport,
)
from mldlab.poly import BiPoly, format_poly, poly_parse as P


def test_order_at_reads_lowest_degree():
    assert order_at(ORIGIN, P("x^2 + y^3")) == 2
    assert order_at(ORIGIN, P("1 + x")) == 0


def test_order_at_translates_first():
    assert order_at(RationalPoint.base(1, 0), P("x^2 - x")) == 1


def test_order_at_zero_is_infinity():
    assert order_at(ORIGIN, BiPoly.zero()) == math.inf


def test_ideal_order_is_min_of_generators():
    assert ideal_order_at(ORIGIN, [P("x^2"), P("x*y"), P("y^5")]) == 2
    assert ideal_order_at(ORIGIN, [P("1 + x"), P("y")]) == 0
    assert ideal_order_at(RationalPoint.base(0, 1), [P("x"), P("y - 1")]) == 1


def test_ideal_order_requires_generators():
    with pytest.raises(EmptyGeneratorList):
        ideal_order_at(ORIGIN, [])


# -- divisorial split -----------------------------------------------------------


def test_split_pulls_common_factor():
    sp = divisorial_split([P("x^2"), P("x*y^2")])
    assert format_poly(sp.h) == "x"
    assert [format_poly(r) for r in sp.residual] == ["x", "y^2"]


def test_split_trivial_gcd():
    sp = divisorial_split([P("x"), P("y")])
    assert sp.h == BiPoly.const(1)
    assert [format_poly(r) for r in sp.residual] == ["x", "y"]


def test_split_factors_single_generator():
    sp = divisorial_split([P("x^2*y + x*y^2")])
    assert sp.residual == [BiPoly.const(1)]
    comps = sorted((format_poly(p), m) for p, m in sp.components)
    assert comps == [("x", 1), ("x + y", 1), ("y", 1)]


def test_split_rejects_all_zero():
    with pytest.raises(AllZeroGenerators):
        divisorial_split([BiPoly.zero()])


def test_split_remultiplication_preserves_orders():
    rng = random.Random(4)
    for _ in range(40):
        gens = []
        for _ in range(rng.randint(1, 3)):
            terms = {}
            for _ in range(rng.randint(1, 4)):
                terms[(rng.randint(0, 4), rng.randint(0, 4))] = F(rng.randint(-3, 3) or 1)
            gens.append(BiPoly(terms))
        gens = [g for g in gens if not g.is_zero()] or [P("x")]
        sp = divisorial_split(gens)
        rebuilt = [sp.h * r for r in sp.residual]
        for _ in range(10):
            p = RationalPoint.base(F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
            assert ideal_order_at(p, gens) == ideal_order_at(p, rebuilt)


# -- rational cosupport -----------------------------------------------------------


def test_cosupport_coordinate_ideal():
    pts = rational_cosupport([P("x"), P("y")])
    assert [(p.u, p.v) for p in pts] == [(0, 0)]


def test_cosupport_two_points():
    pts = rational_cosupport([P("x^2 - 1"), P("y")])
    assert [(p.u, p.v) for p in pts] == [(-1, 0), (1, 0)]


def test_cosupport_irrational_raises():
    with pytest.raises(IrrationalBasePoint):
        rational_cosupport([P("x^2 - 2"), P("y")])


def test_cosupport_positive_dimensional_raises():
    with pytest.raises(PositiveDimensionalCosupport):
        rational_cosupport([P("x*y"), P("x*y^2")])


def test_cosupport_empty_for_unit_like_ideal():
    # the only candidate factor is root-free but carries no actual zero
    assert rational_cosupport([P("x^2 - 2"), P("y*(x^2 - 2) + 1")]) == []


def test_cosupport_mixed_rational_and_extension_points():
    # (x^2 - 2)(x - 1) and y: rational point (1, 0) plus extension points
    with pytest.raises(IrrationalBasePoint):
        rational_cosupport([P("(x^2 - 2)*(x - 1)"), P("y")])


def test_cosupport_pairwise_degenerate_resultants():
    # pairwise common factors, trivial global gcd; falls back to a combination
    f1 = P("(y - x)*(y + x)")
    f2 = P("(y + x)*(y - 1)")
    f3 = P("(y - 1)*(y - x)")
    pts = rational_cosupport([f1, f2, f3])
    assert [(p.u, p.v) for p in pts] == [(-1, 1), (0, 0), (1, 1)]


def test_cosupport_points_vanish_and_grid_finds_no_others():
    gens = [P("x^2 - y"), P("y^2 - y")]
    pts = rational_cosupport(gens)
    got = {(p.u, p.v) for p in pts}
    assert got == {(0, 0), (1, 1), (-1, 1)}
    for p in pts:
        assert ideal_order_at(p, gens) >= 1
    # exhaustive sweep over a bounded rational grid
    grid = [F(n, d) for d in (1, 2, 3) for n in range(-9, 10)]
    for u in grid:
        for v in grid:
            if all(g.eval(u, v) == 0 for g in gens):
                assert (u, v) in got
