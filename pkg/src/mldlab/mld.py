"""Log discrepancies, minimal log discrepancies and stability constants.

On a completed resolution the minimal log discrepancy over the origin is
combinatorial: it is minus infinity as soon as some exceptional divisor
has negative log discrepancy or some curve through the origin carries
total coefficient above one, and otherwise the minimum of the exceptional
log discrepancies.  docs/notes.md records the one-page argument (corner
blow-ups only combine the two adjacent values, free blow-ups add one
minus the local curve coefficient).

The weight-enumeration oracle at the bottom recomputes the same number
for monomial systems by minimising over divisorial monomial valuations,
fully independently of the blow-up engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .blowup import INF, ResolutionGraph, log_resolution, refine_for_D
from .errors import (
    EngineBug,
    FactorCountMismatch,
    NonMonomialInput,
    NotInScope,
    NotPlt,
    TooManyDivisorsThroughPoint,
    UnknownDivisor,
)
from .ideals import RationalPoint
from .poly import BiPoly, format_poly
from .system import IdealSystem, _frac_str


class _MinusInfinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()

KLT = "klt"
PLT_WITH_CENTRE = "plt-with-centre"
LC_NOT_PLT = "lc-not-plt"
NOT_LC = "not-lc"


@dataclass(frozen=True)
class BoundarySpec:
    """Auxiliary boundary: sD scales the divisor D, tM is the exponent on
    the maximal ideal."""

    sD: Fraction = Fraction(0)
    tM: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "sD", Fraction(self.sD))
        object.__setattr__(self, "tM", Fraction(self.tM))
        if self.sD < 0 or self.tM < 0:
            raise ValueError("boundary coefficients must be nonnegative")


TRIVIAL_BOUNDARY = BoundarySpec()


@dataclass
class MldReport:
    value: object  # Fraction or MINUS_INFINITY
    computed_by: tuple[str, int] | None
    classification: str
    non_klt_centres: list[int]
    boundary: BoundarySpec
    graph: ResolutionGraph = field(repr=False, default=None)
    F: int | None = None

    def value_str(self) -> str:
        return "-inf" if self.value is MINUS_INFINITY else _frac_str(self.value)

    def computed_by_str(self) -> str:
        if self.computed_by is None:
            return "-"
        kind, ident = self.computed_by
        return ("E" if kind == "divisor" else "C") + str(ident)

    def to_json_dict(self) -> dict:
        doc = {
            "schema": "mldlab.mld-report/1",
            "value": self.value_str(),
            "computed_by": self.computed_by_str(),
            "classification": self.classification,
            "non_klt_centres": [f"C{c}" for c in self.non_klt_centres],
            "boundary": {"sD": _frac_str(self.boundary.sD), "tM": _frac_str(self.boundary.tM)},
        }
        if self.F is not None:
            doc["F"] = f"E{self.F}"
        if self.graph is not None:
            doc["centres"] = [
                format_poly(self.graph.component(c).poly) for c in self.non_klt_centres
            ]
        return doc


def log_discrepancy(
    graph: ResolutionGraph,
    div_id: int,
    system: IdealSystem | None = None,
    boundary: BoundarySpec = TRIVIAL_BOUNDARY,
) -> Fraction:
    """a_E of one exceptional divisor under the given boundary.

    Pure arithmetic on the stored order vectors: 1 + k minus the weighted
    ideal orders, minus sD times ord(D) and tM times ord(m).
    """
    div = graph.divisor(div_id)
    sys = system if system is not None else graph.system
    if sys.factors and len(sys.factors) != len(graph.system.factors):
        raise FactorCountMismatch("system shape does not match the resolution")
    total = Fraction(1 + div.k)
    for j, factor in enumerate(sys.factors):
        total -= factor.exponent * graph.ord_factor(div, j)
    if boundary.sD:
        total -= boundary.sD * graph.ord_D(div)
    if boundary.tM:
        total -= boundary.tM * div.ord_m
    return total


def _curve_total_coefficient(graph: ResolutionGraph, comp, boundary: BoundarySpec) -> Fraction:
    coeff = comp.coefficient(graph.system)
    if boundary.sD and any(c.id == comp.id for c in graph.d_components()):
        coeff += boundary.sD
    return coeff


def evaluate_graph(
    graph: ResolutionGraph,
    boundary: BoundarySpec = TRIVIAL_BOUNDARY,
    system: IdealSystem | None = None,
) -> MldReport:
    """Apply the combinatorial mld rule to a completed resolution."""
    coeffs = {c.id: _curve_total_coefficient(graph, c, boundary) for c in graph.components()}
    centres = sorted(cid for cid, d in coeffs.items() if d == 1)
    heavy = sorted(cid for cid, d in coeffs.items() if d > 1)
    if heavy:
        return MldReport(
            value=MINUS_INFINITY,
            computed_by=("curve", heavy[0]),
            classification=NOT_LC,
            non_klt_centres=centres,
            boundary=boundary,
            graph=graph,
        )
    values = {
        div.id: log_discrepancy(graph, div.id, system=system, boundary=boundary)
        for div in graph.divisors
    }
    negative = sorted(i for i, a in values.items() if a < 0)
    if negative:
        return MldReport(
            value=MINUS_INFINITY,
            computed_by=("divisor", negative[0]),
            classification=NOT_LC,
            non_klt_centres=centres,
            boundary=boundary,
            graph=graph,
        )
    value = min(values.values())
    argmin = min(i for i, a in values.items() if a == value)
    if value == 0:
        cls = LC_NOT_PLT
    elif centres:
        cls = PLT_WITH_CENTRE
    else:
        cls = KLT
    return MldReport(
        value=value,
        computed_by=("divisor", argmin),
        classification=cls,
        non_klt_centres=centres,
        boundary=boundary,
        graph=graph,
        F=graph.F,
    )


def mld_at_origin(
    system: IdealSystem,
    boundary: BoundarySpec = TRIVIAL_BOUNDARY,
    boundary_curves: list[BiPoly] | None = None,
    cap: int | None = None,
) -> MldReport:
    """Resolve (system * m) and read off the mld over the origin.

    boundary_curves pins the support of the sD-part explicitly (used when
    the divisor D of one system is imposed on another); by default D is
    the sub-one-coefficient part of the system's own divisorial locus.
    """
    graph = log_resolution(system, boundary_curves=boundary_curves, cap=cap)
    return evaluate_graph(graph, boundary)


def classify(system: IdealSystem, cap: int | None = None) -> MldReport:
    """mld_at_origin plus the structural checks of the curve-centre case.

    For a plt result the centre must be a single curve smooth at the
    origin whose strict transform meets exactly one divisor; violations
    signal an engine bug (NotInScope), never a user error.
    """
    report = mld_at_origin(system, cap=cap)
    if report.classification == PLT_WITH_CENTRE:
        if len(report.non_klt_centres) != 1:
            raise NotInScope(
                "positive mld with several coefficient-one curves cannot happen"
            )
        comp = report.graph.component(report.non_klt_centres[0])
        if not comp.smooth_at_origin():
            raise NotInScope(
                "positive mld with a singular coefficient-one curve cannot happen"
            )
        if report.graph.F is None:
            raise EngineBug("resolved plt system without an identified F")
        report.F = report.graph.F
    return report


# -- stability certificate ----------------------------------------------------


@dataclass
class StabilityCertificate:
    """Every effective constant of the perturbation-stability argument."""

    system: IdealSystem
    c: Fraction
    s: Fraction
    t: Fraction
    t_prime: Fraction
    level: int
    F: int
    ratios: dict[int, list[Fraction]]  # divisor id -> per-factor ord(a_j)/ord(m)
    d_polys: list[BiPoly]
    centre_poly: BiPoly
    graph: ResolutionGraph = field(repr=False, default=None)

    def to_json_dict(self) -> dict:
        return {
            "schema": "mldlab.certificate/1",
            "system": self.system.to_json_dict(),
            "c": _frac_str(self.c),
            "s": _frac_str(self.s),
            "t": _frac_str(self.t),
            "t_prime": _frac_str(self.t_prime),
            "level": self.level,
            "F": f"E{self.F}",
            "centre": format_poly(self.centre_poly),
            "D": [format_poly(p) for p in self.d_polys],
            "ratios": {
                f"E{i}": [_frac_str(r) for r in rs] for i, rs in sorted(self.ratios.items())
            },
        }


def compute_constants(system: IdealSystem, cap: int | None = None) -> StabilityCertificate:
    """Extract (c, s, t, t', l, F) from a plt system.

    t and s are the minimising ratios that drive the auxiliary mlds to
    exactly zero; 1 - d caps s so no D-component's total coefficient can
    pass one.  l is the least integer strictly above every ord_E(a_j) /
    ord_E(m) on the refined resolution.  All certificate identities are
    re-verified before returning.
    """
    report = classify(system, cap=cap)
    if report.classification != PLT_WITH_CENTRE:
        raise NotPlt(f"expected a plt system, got {report.classification}")
    graph = report.graph
    c = report.value
    plain = {div.id: log_discrepancy(graph, div.id) for div in graph.divisors}
    t = min(a / graph.divisor(i).ord_m for i, a in plain.items())

    d_comps = graph.d_components()
    if not d_comps:
        s = Fraction(1)
        t_prime = t
    else:
        ratios_d = [
            plain[div.id] / graph.ord_D(div)
            for div in graph.divisors
            if graph.ord_D(div) > 0
        ]
        caps = [1 - comp.coefficient(system) for comp in d_comps]
        s = min(ratios_d + caps)
        t_prime = min(
            (plain[div.id] - s * graph.ord_D(div)) / div.ord_m for div in graph.divisors
        )

    refined = refine_for_D(graph, s, c)
    ratios = {
        div.id: [
            Fraction(refined.ord_factor(div, j), div.ord_m)
            for j in range(len(system.factors))
        ]
        for div in refined.divisors
    }
    level = 1 + math.floor(max(r for rs in ratios.values() for r in rs))

    _verify_certificate(system, refined, c, s, t, t_prime, level)
    comp = refined.component(refined.centre_component)
    return StabilityCertificate(
        system=system,
        c=c,
        s=s,
        t=t,
        t_prime=t_prime,
        level=level,
        F=refined.F,
        ratios=ratios,
        d_polys=[x.poly for x in refined.d_components()],
        centre_poly=comp.poly,
        graph=refined,
    )


def _verify_certificate(system, refined, c, s, t, t_prime, level):
    aux1 = evaluate_graph(refined, BoundarySpec(sD=s, tM=t_prime))
    aux2 = evaluate_graph(refined, BoundarySpec(tM=t))
    if aux1.value is MINUS_INFINITY or aux1.value != 0:
        raise EngineBug(f"mld(X, sD, a*m^t') = {aux1.value_str()} instead of 0")
    if aux2.value is MINUS_INFINITY or aux2.value != 0:
        raise EngineBug(f"mld(X, a*m^t) = {aux2.value_str()} instead of 0")
    f_div = refined.divisor(refined.F)
    if t * f_div.ord_m != c:
        raise EngineBug("t * ord_F(m) = c fails; inversion of adjunction broken")
    for div in refined.divisors:
        for j, factor in enumerate(system.factors):
            if not level > Fraction(refined.ord_factor(div, j), div.ord_m):
                raise EngineBug(f"level {level} not above the ratio at E{div.id}")
    bound = c / s - 1
    for comp in refined.d_components():
        for div_id, _ in comp.locations:
            if refined.ord_D(refined.divisor(div_id)) < bound:
                raise EngineBug(f"refinement bound fails at E{div_id}")


# -- monomial oracle ----------------------------------------------------------


@dataclass(frozen=True)
class MonomialValuation:
    """Divisorial valuation given by coprime positive weights on x, y."""

    w1: int
    w2: int

    def __post_init__(self):
        if self.w1 <= 0 or self.w2 <= 0 or math.gcd(self.w1, self.w2) != 1:
            raise ValueError("weights must be positive coprime integers")


def _monomial_exponents(system: IdealSystem) -> list[list[tuple[int, int]]]:
    out = []
    for factor in system.factors:
        exps = []
        for g in factor.generators:
            if g.is_zero():
                continue
            if not g.is_monomial():
                raise NonMonomialInput(f"{format_poly(g)} is not a monomial")
            exps.append(next(iter(g.terms)))
        out.append(exps)
    return out


def _newton_normals(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Primitive inner normals of the compact edges of the Newton polygon
    (the convex hull of points + the positive quadrant)."""
    pts = sorted(set(points))
    pts = [p for p in pts if not any(q[0] <= p[0] and q[1] <= p[1] and q != p for q in pts)]
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    normals = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        di, dj = x2 - x1, y2 - y1
        if di > 0 and dj < 0:
            g = math.gcd(di, -dj)
            normals.append((-dj // g, di // g))
    return normals


def monomial_mld(
    system: IdealSystem, boundary: BoundarySpec = TRIVIAL_BOUNDARY
):
    """mld over the origin of a monomial system, by direct minimisation
    over divisorial monomial valuations.

    Enumerates every primitive weight pair up to a bound covering all
    Newton-polygon edge normals (docs/notes.md sketches why minimisers lie
    there); each coordinate axis with total coefficient above one forces
    minus infinity, as does a negative value anywhere on the grid.
    """
    exps = _monomial_exponents(system)
    rs = [f.exponent for f in system.factors]

    d_x = sum((r * min(i for i, _ in e) for r, e in zip(rs, exps)), Fraction(0))
    d_y = sum((r * min(j for _, j in e) for r, e in zip(rs, exps)), Fraction(0))
    d_axes = []
    if 0 < d_x < 1:
        d_axes.append("x")
    if 0 < d_y < 1:
        d_axes.append("y")
    coeff_x = d_x + (boundary.sD if "x" in d_axes else 0)
    coeff_y = d_y + (boundary.sD if "y" in d_axes else 0)
    if coeff_x > 1 or coeff_y > 1:
        return MINUS_INFINITY

    maxdeg = sum(
        (r * max(i + j for i, j in e) for r, e in zip(rs, exps)), Fraction(0)
    )
    bound = math.ceil(2 * (1 + maxdeg))
    normals = {(1, 1)}
    for e in exps:
        normals.update(_newton_normals(e))
    bound = max(bound, max(w1 + w2 for w1, w2 in normals) + 2)

    def value(w1: int, w2: int) -> Fraction:
        total = Fraction(w1 + w2)
        for r, e in zip(rs, exps):
            total -= r * min(w1 * i + w2 * j for i, j in e)
        if boundary.tM:
            total -= boundary.tM * min(w1, w2)
        if boundary.sD:
            total -= boundary.sD * (
                (w1 if "x" in d_axes else 0) + (w2 if "y" in d_axes else 0)
            )
        return total

    best = None
    candidates = set(normals)
    for w1 in range(1, bound):
        for w2 in range(1, bound + 1 - w1):
            if math.gcd(w1, w2) == 1:
                candidates.add((w1, w2))
    for w1, w2 in sorted(candidates):
        a = value(w1, w2)
        if a < 0:
            return MINUS_INFINITY
        if best is None or a < best:
            best = a
    return best


def weighted_order(f: BiPoly, w1: int, w2: int):
    """min of w1*i + w2*j over the support; math.inf for the zero poly."""
    if f.is_zero():
        return math.inf
    return min(w1 * i + w2 * j for (i, j) in f.terms)


def monomial_valuation_data(
    v: MonomialValuation,
    system: IdealSystem | None,
    at: RationalPoint,
    graph: ResolutionGraph,
    boundary: BoundarySpec = TRIVIAL_BOUNDARY,
):
    """Log discrepancy and per-factor orders of the monomial valuation with
    weights (w1, w2) in the chart coordinates centred at `at`.

    At a corner of two divisors this reduces to w1*a' + w2*a''; at a free
    point the second weight multiplies the transverse coordinate, picking
    up order corrections from whatever residual ideal or curve passes
    through the point.
    """
    chart = graph.chart(at.chart)
    sys = system if system is not None else graph.system
    if len(sys.factors) != len(graph.system.factors):
        raise FactorCountMismatch("system shape does not match the resolution")
    w1, w2 = v.w1, v.w2

    branches = []
    for d, eq in chart.div_eqs.items():
        if eq.eval(at.u, at.v) == 0:
            teq = eq.translate(at.u, at.v)
            if set(teq.terms) not in ({(1, 0)}, {(0, 1)}):
                raise EngineBug(f"divisor E{d} is not a coordinate at {at}")
            branches.append((graph.divisor(d), weighted_order(teq, w1, w2)))
    if len(branches) > 2:
        raise TooManyDivisorsThroughPoint(f"{len(branches)} divisors through {at}")

    def tr(f: BiPoly) -> BiPoly:
        return f.translate(at.u, at.v)

    k_g = w1 + w2 - 1 + sum(w_e * div.k for div, w_e in branches)
    ord_m = min(weighted_order(tr(g), w1, w2) for g in chart.weak_m)
    ord_m += sum(w_e * div.ord_m for div, w_e in branches)

    d_ids = {c.id for c in graph.d_components()}
    curve_vals = {c: weighted_order(tr(f), w1, w2) for c, f in chart.curves.items()}

    factor_orders = []
    for j in range(len(sys.factors)):
        o = min(weighted_order(tr(g), w1, w2) for g in chart.weak_fac[j])
        o += sum(w_e * graph.ord_factor(div, j) for div, w_e in branches)
        for comp in graph.components():
            m = comp.sys_mult.get(j, 0)
            if m:
                o += m * curve_vals[comp.id]
        factor_orders.append(o)

    ord_d = sum(w_e * graph.ord_D(div) for div, w_e in branches)
    ord_d += sum(curve_vals[cid] for cid in d_ids)

    a = Fraction(1 + k_g)
    for factor, o in zip(sys.factors, factor_orders):
        a -= factor.exponent * o
    a -= boundary.sD * ord_d
    a -= boundary.tM * ord_m
    return a, factor_orders


def pullback_order(
    graph: ResolutionGraph,
    at: RationalPoint,
    v: MonomialValuation,
    gens: list[BiPoly],
):
    """Order of an arbitrary plane ideal under the monomial valuation at a
    chart point, via total pullback along the chart's map to the base."""
    chart = graph.chart(at.chart)
    tb_x, tb_y = chart.to_base
    vals = []
    for g in gens:
        pulled = g.subst(tb_x, tb_y).translate(at.u, at.v)
        vals.append(weighted_order(pulled, v.w1, v.w2))
    return min(vals)
