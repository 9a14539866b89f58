"""Log resolutions of plane ideal systems by sequences of point blow-ups.

The engine keeps, for every blow-up chart, the weak transforms of each
factor's finite-cosupport residual, the strict transforms of the curve
components, and local equations of the exceptional divisors.  Every new
divisor gets its invariants from the proximity recursions:

    k           = 1 + sum of the parents' k,
    ord(ideal)  = local order of its weak transform at the centre
                  + sum of the parents' orders,

where the parents are the (at most two) divisors through the centre.
A divisor created by blowing up a point p is parametrised by the second
coordinate of its first creation chart; the single missing point ("at
infinity") is the origin of the second creation chart.  Points already
blown up are remembered per divisor, so the creation charts of a divisor
stay a faithful local model at all of its remaining points.

Base points and simple-normal-crossing violations are located on each
divisor by exact univariate gcd computations on restrictions; a violation
whose coordinates are not rational raises IrrationalBasePoint.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BudgetExceeded,
    ChartExpressionError,
    EngineBug,
    IrrationalBasePoint,
    NotResolved,
    PointNotOverOrigin,
    TooManyDivisorsThroughPoint,
    UnknownDivisor,
)
from .ideals import ORIGIN, RationalPoint
from .poly import (
    BiPoly,
    format_poly,
    uni_deg,
    uni_deriv,
    uni_eval,
    uni_gcd,
    uni_rational_roots,
)
from .system import CurveComponent, IdealSystem, SplitSystem, split_system

DEFAULT_BLOWUP_CAP = 10_000
_CAP_ENV = "MLDLAB_BLOWUP_CAP"


class _InfPoint:
    """The single point of a divisor outside its first creation chart."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _InfPoint()


def _coord_sort_key(coord):
    if coord is INF:
        return (1, Fraction(0))
    return (0, coord)


@dataclass
class Chart:
    """Affine coordinate patch with the transformed local data.

    Chart coordinates occupy the (x, y) slots of BiPoly.  In an "A" chart
    the new divisor is {u = 0} with v running along it; in a "B" chart it
    is {v = 0}.  Charts are immutable once created and may be shared.
    """

    id: int
    parent: int | None
    kind: str  # "base" | "A" | "B"
    own_divisor: int | None
    to_base: tuple[BiPoly, BiPoly]
    div_eqs: dict[int, BiPoly]
    weak_fac: list[list[BiPoly]]
    weak_m: list[BiPoly]
    curves: dict[int, BiPoly]


@dataclass
class ExcDivisor:
    """Exceptional divisor with its proximity bookkeeping."""

    id: int
    k: int
    ord_m: int
    ord_res: list[int]
    ord_curve: dict[int, int]
    parents: tuple[int, ...]
    chart_a: int
    chart_b: int
    parent_meet: dict[int, object]  # parent id -> coordinate on this divisor
    dead: set = field(default_factory=set)
    neighbors: set = field(default_factory=set)

    def copy(self) -> ExcDivisor:
        return ExcDivisor(
            id=self.id,
            k=self.k,
            ord_m=self.ord_m,
            ord_res=list(self.ord_res),
            ord_curve=dict(self.ord_curve),
            parents=self.parents,
            chart_a=self.chart_a,
            chart_b=self.chart_b,
            parent_meet=dict(self.parent_meet),
            dead=set(self.dead),
            neighbors=set(self.neighbors),
        )


@dataclass(frozen=True)
class BlowUpRecord:
    chart: int
    point: tuple[Fraction, Fraction]
    parents: tuple[int, ...]
    new_divisor: int


@dataclass(frozen=True)
class SncViolation:
    kind: str
    divisor: int | None
    coord: object
    detail: str

    def __str__(self):
        where = f"E{self.divisor} at {self.coord}" if self.divisor else "origin"
        return f"{self.kind}: {self.detail} ({where})"


class ResolutionGraph:
    """Tree of exceptional divisors over the origin with chart data."""

    def __init__(self, split: SplitSystem, cap: int | None = None):
        self.split = split
        self.system = split.system
        self.cap = cap if cap is not None else blowup_cap()
        base = Chart(
            id=0,
            parent=None,
            kind="base",
            own_divisor=None,
            to_base=(BiPoly.var("x"), BiPoly.var("y")),
            div_eqs={},
            weak_fac=[list(gens) for gens in split.residuals],
            weak_m=[BiPoly.var("x"), BiPoly.var("y")],
            curves={c.id: c.poly for c in split.components},
        )
        self.charts: list[Chart] = [base]
        self.divisors: list[ExcDivisor] = []
        self.blow_log: list[BlowUpRecord] = []
        self.snc_complete = False
        self.F: int | None = None
        self.centre_component: int | None = None

    # -- accessors -----------------------------------------------------------

    def divisor(self, div_id: int) -> ExcDivisor:
        if not 1 <= div_id <= len(self.divisors):
            raise UnknownDivisor(f"no divisor E{div_id}")
        return self.divisors[div_id - 1]

    def chart(self, chart_id: int) -> Chart:
        if not 0 <= chart_id < len(self.charts):
            raise ChartExpressionError(f"no chart {chart_id}")
        return self.charts[chart_id]

    def components(self) -> list[CurveComponent]:
        return self.split.components

    def component(self, comp_id: int) -> CurveComponent:
        return self.split.components[comp_id]

    def ord_factor(self, div: ExcDivisor, j: int) -> int:
        total = div.ord_res[j]
        for c in self.split.components:
            m = c.sys_mult.get(j, 0)
            if m:
                total += m * div.ord_curve[c.id]
        return total

    def d_components(self) -> list[CurveComponent]:
        """The components supporting the auxiliary divisor D.

        With explicit boundary curves these are exactly the boundary
        components; otherwise the components of the system's own divisorial
        locus with coefficient strictly between 0 and 1.
        """
        comps = [c for c in self.split.components if c.bnd_mult > 0]
        if comps:
            return comps
        out = []
        for c in self.split.components:
            d = c.coefficient(self.system)
            if 0 < d < 1:
                out.append(c)
        return out

    def ord_D(self, div: ExcDivisor) -> int:
        return sum(div.ord_curve[c.id] for c in self.d_components())

    def clone(self) -> ResolutionGraph:
        g = object.__new__(ResolutionGraph)
        g.split = SplitSystem(
            system=self.split.system,
            residuals=self.split.residuals,
            components=[
                CurveComponent(
                    id=c.id,
                    poly=c.poly,
                    sys_mult=dict(c.sys_mult),
                    bnd_mult=c.bnd_mult,
                    locations=list(c.locations),
                )
                for c in self.split.components
            ],
        )
        g.system = self.system
        g.cap = self.cap
        g.charts = list(self.charts)
        g.divisors = [d.copy() for d in self.divisors]
        g.blow_log = list(self.blow_log)
        g.snc_complete = self.snc_complete
        g.F = self.F
        g.centre_component = self.centre_component
        return g


def blowup_cap() -> int:
    env = os.environ.get(_CAP_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return DEFAULT_BLOWUP_CAP


# -- the blow-up -------------------------------------------------------------


def blow_up(graph: ResolutionGraph, p: RationalPoint) -> tuple[ResolutionGraph, int]:
    """Blow up the point p, appending one exceptional divisor.

    p must be the origin of the base plane (first call) or lie on the
    divisor owned by its chart, i.e. on {u = 0} of an "A" chart or
    {v = 0} of a "B" chart.  Every point of the exceptional locus admits
    such a presentation.
    """
    chart = graph.chart(p.chart)
    if chart.kind == "base":
        if graph.divisors:
            raise PointNotOverOrigin("the base plane is already blown up")
        if (p.u, p.v) != (0, 0):
            raise PointNotOverOrigin("the first centre must be the origin")
        own = None
        own_coord = None
    else:
        own = graph.divisor(chart.own_divisor)
        if chart.kind == "A":
            if p.u != 0:
                raise PointNotOverOrigin(f"{p} is not on E{own.id} in chart {chart.id}")
            own_coord = p.v
        else:
            if p.v != 0:
                raise PointNotOverOrigin(f"{p} is not on E{own.id} in chart {chart.id}")
            own_coord = INF if p.u == 0 else 1 / p.u
        if own_coord in own.dead:
            raise PointNotOverOrigin(f"{p} was already blown up")

    parents = sorted(d for d, eq in chart.div_eqs.items() if eq.eval(p.u, p.v) == 0)
    if len(parents) > 2:
        raise TooManyDivisorsThroughPoint(
            f"{len(parents)} divisors through {p}; the model is not snc"
        )
    if len(graph.divisors) + 1 > graph.cap:
        raise BudgetExceeded(f"blow-up cap {graph.cap} reached")

    trans_fac = [[g.translate(p.u, p.v) for g in gens] for gens in chart.weak_fac]
    trans_m = [g.translate(p.u, p.v) for g in chart.weak_m]
    trans_curves = {c: f.translate(p.u, p.v) for c, f in chart.curves.items()}
    trans_eqs = {d: e.translate(p.u, p.v) for d, e in chart.div_eqs.items()}

    fac_mults = [min(int(g.order()) for g in gens if not g.is_zero()) for gens in trans_fac]
    m_mult = min(int(g.order()) for g in trans_m)
    curve_mults = {c: int(f.order()) for c, f in trans_curves.items()}

    new_id = len(graph.divisors) + 1
    parent_divs = [graph.divisor(d) for d in parents]
    k = 1 + sum(d.k for d in parent_divs)
    ord_m = m_mult + sum(d.ord_m for d in parent_divs)
    ord_res = [
        fac_mults[j] + sum(d.ord_res[j] for d in parent_divs)
        for j in range(len(trans_fac))
    ]
    ord_curve = {
        c: curve_mults[c] + sum(d.ord_curve[c] for d in parent_divs)
        for c in trans_curves
    }

    chart_a = _make_chart(graph, chart, "A", new_id, trans_fac, fac_mults, trans_m,
                          m_mult, trans_curves, curve_mults, trans_eqs, p)
    chart_b = _make_chart(graph, chart, "B", new_id, trans_fac, fac_mults, trans_m,
                          m_mult, trans_curves, curve_mults, trans_eqs, p)

    parent_meet: dict[int, object] = {}
    for d in parents:
        eq_a = chart_a.div_eqs.get(d)
        r = eq_a.restrict("x") if eq_a is not None else []
        if uni_deg(r) == 1:
            parent_meet[d] = -r[0] / r[1]
            continue
        if uni_deg(r) > 1:
            raise EngineBug(f"parent E{d} has a nonlinear trace on E{new_id}")
        eq_b = chart_b.div_eqs.get(d)
        rb = eq_b.restrict("y") if eq_b is not None else []
        if uni_deg(rb) != 1 or uni_eval(rb, Fraction(0)) != 0:
            raise EngineBug(f"parent E{d} does not meet E{new_id} transversally")
        parent_meet[d] = INF

    div = ExcDivisor(
        id=new_id,
        k=k,
        ord_m=ord_m,
        ord_res=ord_res,
        ord_curve=ord_curve,
        parents=tuple(parents),
        chart_a=chart_a.id,
        chart_b=chart_b.id,
        parent_meet=parent_meet,
    )
    graph.divisors.append(div)

    for d in parent_divs:
        d.neighbors.add(new_id)
        div.neighbors.add(d.id)
    if len(parent_divs) == 2:
        a, b = parent_divs
        if b.id not in a.neighbors or a.id not in b.neighbors:
            raise EngineBug("satellite centre on two non-adjacent divisors")
        a.neighbors.discard(b.id)
        b.neighbors.discard(a.id)

    if own is not None:
        own.dead.add(own_coord)
    graph.blow_log.append(
        BlowUpRecord(chart=p.chart, point=(p.u, p.v), parents=tuple(parents), new_divisor=new_id)
    )
    graph.snc_complete = False
    return graph, new_id


def _make_chart(graph, parent_chart, kind, new_id, trans_fac, fac_mults, trans_m,
                m_mult, trans_curves, curve_mults, trans_eqs, p) -> Chart:
    u, v = BiPoly.var("x"), BiPoly.var("y")
    if kind == "A":
        px, py = u, u * v

        def strip(f, m):
            return f.subst(px, py).divide_monomial(m, 0)
    else:
        px, py = u * v, v

        def strip(f, m):
            return f.subst(px, py).divide_monomial(0, m)

    div_eqs = {}
    for d, e in trans_eqs.items():
        mult = int(e.order()) if e.eval(0, 0) == 0 else 0
        if mult not in (0, 1):
            raise EngineBug(f"divisor E{d} is singular at a blow-up centre")
        eq = strip(e, mult)
        if not eq.is_constant():
            div_eqs[d] = eq
    div_eqs[new_id] = u if kind == "A" else v

    tb_parent = parent_chart.to_base
    sub_x = px + BiPoly.const(p.u)
    sub_y = py + BiPoly.const(p.v)
    to_base = (tb_parent[0].subst(sub_x, sub_y), tb_parent[1].subst(sub_x, sub_y))

    chart = Chart(
        id=len(graph.charts),
        parent=parent_chart.id,
        kind=kind,
        own_divisor=new_id,
        to_base=to_base,
        div_eqs=div_eqs,
        weak_fac=[[strip(g, fac_mults[j]) for g in gens] for j, gens in enumerate(trans_fac)],
        weak_m=[strip(g, m_mult) for g in trans_m],
        curves={c: strip(f, curve_mults[c]) for c, f in trans_curves.items()},
    )
    graph.charts.append(chart)
    return chart


# -- violation scan ----------------------------------------------------------


def _scan_divisor(graph: ResolutionGraph, div: ExcDivisor) -> list[tuple[object, str]]:
    """All snc/base-point violations on the live part of one divisor.

    Returns (coordinate, description) pairs; coordinate INF means the point
    outside the first creation chart.  Raises IrrationalBasePoint if a
    violation exists only at non-rational coordinates.
    """
    found: dict[object, str] = {}

    def add(coord, why):
        if coord not in div.dead and coord not in found:
            found[coord] = why

    ca = graph.chart(div.chart_a)

    def roots_of(coeffs, what):
        roots, resid = uni_rational_roots(coeffs)
        if resid > 0:
            raise IrrationalBasePoint(
                f"{what} on E{div.id} lies at non-rational coordinates"
            )
        return roots

    for j, gens in enumerate(ca.weak_fac):
        rs = [g.restrict("x") for g in gens]
        nz = [r for r in rs if r]
        if not nz:
            raise EngineBug(f"weak transform of factor {j} vanishes along E{div.id}")
        g = []
        for r in nz:
            g = uni_gcd(g, r)
        if uni_deg(g) >= 1:
            for r in roots_of(g, f"a base point of factor {j}"):
                add(r, f"base point of factor {j}")

    mz = [g.restrict("x") for g in ca.weak_m]
    mg = []
    for r in (r for r in mz if r):
        mg = uni_gcd(mg, r)
    if uni_deg(mg) >= 1:
        raise EngineBug("the maximal-ideal factor is not principal after blow-up")

    restr = {}
    for c, f in ca.curves.items():
        f0 = f.restrict("x")
        if not f0:
            raise EngineBug(f"strict transform of component {c} contains E{div.id}")
        restr[c] = f0

    for c, f0 in restr.items():
        if uni_deg(f0) < 1:
            continue
        m = uni_gcd(f0, uni_deriv(f0))
        if uni_deg(m) >= 1:
            for r in roots_of(m, f"a tangency of component {c}"):
                add(r, f"component {c} tangent or singular")

    comp_ids = sorted(restr)
    for i in range(len(comp_ids)):
        for jj in range(i + 1, len(comp_ids)):
            a, b = comp_ids[i], comp_ids[jj]
            g = uni_gcd(restr[a], restr[b])
            if uni_deg(g) >= 1:
                for r in roots_of(g, f"a crossing of components {a} and {b}"):
                    add(r, f"components {a} and {b} cross")

    for parent, coord in div.parent_meet.items():
        if coord is INF:
            continue
        for c, f0 in restr.items():
            if uni_eval(f0, coord) == 0:
                add(coord, f"component {c} through the corner with E{parent}")

    inf_reason = _inf_point_violation(graph, div)
    if inf_reason:
        add(INF, inf_reason)

    return sorted(found.items(), key=lambda kv: _coord_sort_key(kv[0]))


def _inf_point_violation(graph: ResolutionGraph, div: ExcDivisor) -> str | None:
    cb = graph.chart(div.chart_b)
    origin_zero = lambda f: f.eval(0, 0) == 0
    for j, gens in enumerate(cb.weak_fac):
        if all(origin_zero(g) for g in gens):
            return f"base point of factor {j}"
    if all(origin_zero(g) for g in cb.weak_m):
        raise EngineBug("the maximal-ideal factor is not principal after blow-up")
    through = [c for c, f in cb.curves.items() if origin_zero(f)]
    others = [d for d, eq in cb.div_eqs.items() if d != div.id and origin_zero(eq)]
    if len(through) >= 2:
        return f"components {through[0]} and {through[1]} cross"
    for c in through:
        f = cb.curves[c]
        if f.order() >= 2:
            return f"component {c} singular"
        if f.deriv("x").eval(0, 0) == 0:
            return f"component {c} tangent to E{div.id}"
        if others:
            return f"component {c} through the corner with E{others[0]}"
    return None


def snc_status(graph: ResolutionGraph) -> list[SncViolation]:
    """Every current simple-normal-crossing violation; empty iff resolved.

    Works on any construction state: with no blow-ups yet, the fibre over
    the origin is not even divisorial, which is itself the violation.
    """
    if not graph.divisors:
        return [
            SncViolation(
                kind="origin-not-divisorial",
                divisor=None,
                coord=(Fraction(0), Fraction(0)),
                detail="the maximal ideal is not principal on the base plane",
            )
        ]
    out = []
    for div in graph.divisors:
        for coord, why in _scan_divisor(graph, div):
            out.append(SncViolation(kind="pending", divisor=div.id, coord=coord, detail=why))
    return out


# -- the resolution loop -----------------------------------------------------


def _finding_point(graph: ResolutionGraph, div: ExcDivisor, coord) -> RationalPoint:
    if coord is INF:
        return RationalPoint(div.chart_b, Fraction(0), Fraction(0))
    return RationalPoint(div.chart_a, Fraction(0), coord)


def log_resolution(
    system: IdealSystem,
    boundary_curves: list[BiPoly] | None = None,
    cap: int | None = None,
) -> ResolutionGraph:
    """Resolve (system * m), plus any explicit boundary curves, to a model
    where every weak transform is trivial on the exceptional locus and the
    full divisor has simple normal crossings.

    Deterministic: pending centres are processed on the oldest divisor
    first, within one divisor by coordinate (the point at infinity last).
    """
    split = split_system(system, boundary_curves)
    graph = ResolutionGraph(split, cap)
    _, first = blow_up(graph, ORIGIN)

    queue: list[tuple[tuple, int, object]] = []

    def push(div: ExcDivisor):
        for coord, _why in _scan_divisor(graph, div):
            heapq.heappush(queue, ((div.id,) + _coord_sort_key(coord), div.id, coord))

    push(graph.divisor(first))
    while queue:
        _, div_id, coord = heapq.heappop(queue)
        div = graph.divisor(div_id)
        if coord in div.dead:
            raise EngineBug("a pending centre was blown up twice")
        _, new_id = blow_up(graph, _finding_point(graph, div, coord))
        push(graph.divisor(new_id))

    leftovers = snc_status(graph)
    if leftovers:
        raise EngineBug(f"resolution loop finished with violations: {leftovers[0]}")
    graph.snc_complete = True
    _finalize_curves(graph)
    return graph


def _finalize_curves(graph: ResolutionGraph) -> None:
    """Record where each component's strict transform meets the divisors,
    and identify the divisor F met by a unique coefficient-one curve."""
    for comp in graph.split.components:
        locations = []
        for div in graph.divisors:
            ca = graph.chart(div.chart_a)
            f0 = ca.curves[comp.id].restrict("x")
            if uni_deg(f0) >= 1:
                roots, resid = uni_rational_roots(f0)
                for r in roots:
                    if r not in div.dead:
                        locations.append((div.id, r))
                if resid > 0:
                    locations.append((div.id, None))
            cb = graph.chart(div.chart_b)
            if INF not in div.dead and cb.curves[comp.id].eval(0, 0) == 0:
                locations.append((div.id, INF))
        comp.locations = locations

    graph.F = None
    graph.centre_component = None
    ones = [c for c in graph.split.components if c.coefficient(graph.system) == 1]
    if len(ones) == 1:
        c = ones[0]
        if len(c.locations) == 1 and c.locations[0][1] is not None:
            graph.F = c.locations[0][0]
            graph.centre_component = c.id


def refine_for_D(graph: ResolutionGraph, s: Fraction, c: Fraction) -> ResolutionGraph:
    """Blow up along the strict transform of D until every divisor meeting
    it has ord_E(D) >= c/s - 1; a no-op when D is empty or the bound is
    already met.  Returns a refined copy; the input graph is unchanged."""
    if not graph.snc_complete:
        raise NotResolved("refine_for_D needs a completed resolution")
    s, c = Fraction(s), Fraction(c)
    if s <= 0:
        raise ValueError("s must be positive")
    bound = c / s - 1
    out = graph.clone()
    d_ids = [comp.id for comp in out.d_components()]
    for comp_id in d_ids:
        comp = out.component(comp_id)
        for div_id, coord in list(comp.locations):
            while True:
                div = out.divisor(div_id)
                if out.ord_D(div) >= bound:
                    break
                if coord is None:
                    raise IrrationalBasePoint(
                        f"refinement needs the non-rational point where component "
                        f"{comp_id} meets E{div_id}"
                    )
                _, new_id = blow_up(out, _finding_point(out, div, coord))
                div_id, coord = new_id, _crossing_on(out, out.divisor(new_id), comp_id)
    leftovers = snc_status(out)
    if leftovers:
        raise EngineBug(f"refinement broke the snc model: {leftovers[0]}")
    out.snc_complete = True
    _finalize_curves(out)
    return out


def _crossing_on(graph: ResolutionGraph, div: ExcDivisor, comp_id: int):
    ca = graph.chart(div.chart_a)
    f0 = ca.curves[comp_id].restrict("x")
    if uni_deg(f0) == 1:
        return -f0[0] / f0[1]
    cb = graph.chart(div.chart_b)
    if cb.curves[comp_id].eval(0, 0) == 0:
        return INF
    raise EngineBug(f"component {comp_id} lost its crossing with E{div.id}")


def replay_resolution(
    system: IdealSystem,
    records: list[BlowUpRecord],
    boundary_curves: list[BiPoly] | None = None,
    cap: int | None = None,
) -> ResolutionGraph:
    """Rebuild a graph by re-applying a recorded blow-up log.

    Chart ids are deterministic, so a log captured from log_resolution
    reproduces the identical graph, invariants included.
    """
    split = split_system(system, boundary_curves)
    graph = ResolutionGraph(split, cap)
    for rec in records:
        _, new_id = blow_up(graph, RationalPoint(rec.chart, rec.point[0], rec.point[1]))
        if new_id != rec.new_divisor or graph.divisor(new_id).parents != rec.parents:
            raise EngineBug("replayed blow-up log diverged from the record")
    if not snc_status(graph):
        graph.snc_complete = True
        _finalize_curves(graph)
    return graph


# -- exports ------------------------------------------------------------------


def to_dot(graph: ResolutionGraph) -> str:
    """Dual graph in DOT format: divisors as ellipses labelled with their
    invariants, curve components as boxes with their coefficients."""
    lines = ["graph dual {"]
    for div in graph.divisors:
        ords = ",".join(str(graph.ord_factor(div, j)) for j in range(len(graph.system.factors)))
        lines.append(
            f'  E{div.id} [label="E{div.id} [k={div.k}, m={div.ord_m}, a=({ords})]"];'
        )
    for comp in graph.components():
        d = comp.coefficient(graph.system)
        lines.append(
            f'  C{comp.id} [shape=box, label="C{comp.id} [d={d}] {format_poly(comp.poly)}"];'
        )
    for div in graph.divisors:
        for n in sorted(div.neighbors):
            if n > div.id:
                lines.append(f"  E{div.id} -- E{n};")
    for comp in graph.components():
        for div_id, _coord in sorted(comp.locations, key=lambda t: t[0]):
            lines.append(f"  C{comp.id} -- E{div_id};")
    lines.append("}")
    return "\n".join(lines)


def graph_table(graph: ResolutionGraph) -> list[dict]:
    """Per-divisor invariant table (orders as plain ints)."""
    rows = []
    for div in graph.divisors:
        rows.append(
            {
                "divisor": div.id,
                "k": div.k,
                "ord_m": div.ord_m,
                "ord_factors": [graph.ord_factor(div, j) for j in range(len(graph.system.factors))],
                "ord_curves": {f"C{c.id}": div.ord_curve[c.id] for c in graph.components()},
                "parents": list(div.parents),
                "neighbors": sorted(div.neighbors),
            }
        )
    return rows
