"""Point-local analysis of ideals in the plane.

Local orders at rational points, splitting off the divisorial (curve) part
of an ideal, and complete rational common-zero finding via resultants.
Everything is exact; a common zero that only exists over a proper field
extension is reported as IrrationalBasePoint rather than approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    AllZeroGenerators,
    BudgetExceeded,
    EmptyGeneratorList,
    IrrationalBasePoint,
    PositiveDimensionalCosupport,
)
from .poly import (
    BiPoly,
    exact_div,
    factor_rational,
    gcd_many,
    resultant_x,
    resultant_y,
    uni_deg,
    uni_divmod,
    uni_eval,
    uni_gcd,
    uni_mul,
    uni_rational_roots,
    uni_trim,
)

BASE_CHART = 0


@dataclass(frozen=True)
class RationalPoint:
    """A rational point in a named chart; chart 0 is the base plane."""

    chart: int
    u: Fraction
    v: Fraction

    @classmethod
    def base(cls, u, v) -> RationalPoint:
        return cls(BASE_CHART, Fraction(u), Fraction(v))

    def coords(self) -> tuple[Fraction, Fraction]:
        return (self.u, self.v)

    def __str__(self) -> str:
        return f"({self.u}, {self.v})@chart{self.chart}"


ORIGIN = RationalPoint.base(0, 0)


def order_at(p: RationalPoint, f: BiPoly):
    """Local multiplicity of f at p (minimal total degree after recentring).

    Returns math.inf exactly when f is the zero polynomial.
    """
    return f.translate(p.u, p.v).order()


def ideal_order_at(p: RationalPoint, gens: list[BiPoly]):
    """Order of the ideal (gens) at p: the minimum of the generator orders."""
    if not gens:
        raise EmptyGeneratorList("ideal needs at least one generator")
    return min(order_at(p, g) for g in gens)


@dataclass(frozen=True)
class DivisorialSplit:
    """Gcd part of an ideal plus the finite-cosupport residual."""

    h: BiPoly
    residual: list[BiPoly]
    components: list[tuple[BiPoly, int]]


def divisorial_split(gens: list[BiPoly]) -> DivisorialSplit:
    """Split (gens) = h * residual with h = gcd, residual of trivial gcd.

    h is monic under the graded-lex term order; components lists the
    irreducible rational factors of h with multiplicities.
    """
    if not gens:
        raise EmptyGeneratorList("ideal needs at least one generator")
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        raise AllZeroGenerators("all generators are zero")
    h = gcd_many(nonzero).monic()
    residual = [exact_div(g, h) for g in nonzero]
    return DivisorialSplit(h=h, residual=residual, components=factor_rational(h))


def rational_cosupport(
    gens: list[BiPoly], degree_bound: int | None = None
) -> list[RationalPoint]:
    """All rational common zeros of an ideal with finite cosupport.

    The rational list is complete: candidates come from gcds of pairwise
    resultants (plus variable-free generators), then get verified by
    substitution.  If common zeros remain over a proper field extension,
    IrrationalBasePoint is raised; absence of extension zeros behind a
    root-free resultant factor is certified by an exact ideal-membership
    test, so the error never fires spuriously.

    degree_bound caps the degree of the univariate candidate polynomials
    handed to root extraction (default: twice the max generator degree).
    """
    if not gens:
        raise EmptyGeneratorList("ideal needs at least one generator")
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        raise AllZeroGenerators("all generators are zero")
    if any(g.is_constant() for g in polys):
        return []
    g = gcd_many(polys)
    if not g.is_constant():
        raise PositiveDimensionalCosupport(
            f"generators share the nonconstant factor {g!r}"
        )
    if degree_bound is None:
        degree_bound = 2 * max(p.degree() for p in polys)

    xcand = _candidate_poly(polys, axis="x")
    if uni_deg(xcand) > degree_bound:
        raise BudgetExceeded(
            f"candidate polynomial degree {uni_deg(xcand)} exceeds bound {degree_bound}"
        )
    xroots, resid = uni_rational_roots(xcand)
    if resid > 0:
        residual = _root_free_part(xcand)
        if _extension_zero_exists(polys, residual):
            raise IrrationalBasePoint(
                "common zeros exist only over a field extension of Q"
            )

    points: list[RationalPoint] = []
    for x0 in xroots:
        slices = [uni_trim([_coeff(p, x0, j) for j in range(p.deg_y() + 1)]) for p in polys]
        slices = [s for s in slices if s]
        if not slices:
            continue
        gy: list[Fraction] = []
        for s in slices:
            gy = uni_gcd(gy, s)
        if uni_deg(gy) == 0:
            continue
        yroots, yresid = uni_rational_roots(gy)
        if yresid > 0:
            raise IrrationalBasePoint(
                f"common zeros over x = {x0} exist only over a field extension of Q"
            )
        for y0 in yroots:
            points.append(RationalPoint.base(x0, y0))
    points.sort(key=lambda p: (p.u, p.v))
    return points


def _coeff(p: BiPoly, x0: Fraction, j: int) -> Fraction:
    return sum((c * x0**i for (i, jj), c in p.terms.items() if jj == j), Fraction(0))


def _candidate_poly(polys: list[BiPoly], axis: str) -> list[Fraction]:
    """A nonzero univariate polynomial vanishing at every common-zero
    x-coordinate (axis="x") or y-coordinate (axis="y")."""
    res = resultant_y if axis == "x" else resultant_x
    var_free = "y" if axis == "x" else "x"
    deg_other = (lambda p: p.deg_y()) if axis == "x" else (lambda p: p.deg_x())

    constraints: list[list[Fraction]] = []
    for p in polys:
        if deg_other(p) == 0:
            constraints.append(p.restrict(var_free))
    acc: list[Fraction] = []
    for c in constraints:
        acc = uni_gcd(acc, c)
        if uni_deg(acc) == 0:
            return acc
    positive = [p for p in polys if deg_other(p) > 0]
    for i in range(len(positive)):
        for j in range(i + 1, len(positive)):
            r = uni_trim(res(positive[i], positive[j]))
            if r:
                acc = uni_gcd(acc, r)
                if uni_deg(acc) == 0:
                    return acc
    if acc:
        return acc
    # Degenerate: every pairwise resultant vanished (pairwise shared
    # factors with trivial global gcd).  Reduce to two polynomials via a
    # generic combination of the rest.
    base = min(positive, key=lambda p: p.degree())
    others = [p for p in positive if p is not base] or [base]
    c = 1
    while True:
        combo = BiPoly.zero()
        scale = Fraction(1)
        for p in others:
            combo = combo + p.scale(scale)
            scale *= c
        if not combo.is_zero() and gcd_many([base, combo]).is_constant():
            r = uni_trim(res(base, combo))
            if r:
                return r
        c += 1
        if c > 64:
            raise PositiveDimensionalCosupport(
                "could not separate a finite common-zero locus"
            )


def _root_free_part(c: list[Fraction]) -> list[Fraction]:
    """Squarefree part of c with all rational roots divided out."""
    from .poly import uni_deriv

    sqfree, _ = uni_divmod(c, uni_gcd(c, uni_deriv(c)))
    roots, _ = uni_rational_roots(sqfree)
    for r in roots:
        q, rem = uni_divmod(sqfree, [-r, Fraction(1)])
        assert not rem
        sqfree = q
    return sqfree


def _extension_zero_exists(polys: list[BiPoly], u: list[Fraction]) -> bool:
    """Exact test: does (polys) have a common zero with x-coordinate a root
    of the squarefree rational-root-free u?

    Works in K[y] for K = Q[x]/(u) (a product of fields): the zero locus is
    empty iff the reduced generators generate the unit ideal, a solvable
    Q-linear Bezout system.  Avoids any factorisation of u.
    """
    du = uni_deg(u)
    if du <= 0:
        return False
    reduced = []
    for p in polys:
        rows = []
        for cf in p.coeffs_in_y():
            _, r = uni_divmod(cf.restrict("y"), u)
            rows.append(r + [Fraction(0)] * (du - len(r)))
        while rows and not any(rows[-1]):
            rows.pop()
        if rows:
            reduced.append(rows)  # reduced[i][j][m]: coeff of y^j x^m
    if not reduced:
        return True
    dmax = max(len(r) for r in reduced)
    hdeg = sum(len(r) for r in reduced) + 1
    ncols_y = hdeg + dmax
    columns = []
    for rows in reduced:
        for k in range(hdeg):
            for m in range(du):
                # column = y^k * x^m * g  reduced mod u, flattened
                col = [Fraction(0)] * (ncols_y * du)
                for j, cf in enumerate(rows):
                    prod = uni_mul(cf, [Fraction(0)] * m + [Fraction(1)])
                    _, prod = uni_divmod(prod, u)
                    for mm, val in enumerate(prod):
                        if val:
                            col[(j + k) * du + mm] = val
                columns.append(col)
    target = [Fraction(0)] * (ncols_y * du)
    target[0] = Fraction(1)
    return not linalg.solvable(columns, target)
