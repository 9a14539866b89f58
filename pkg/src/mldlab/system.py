"""Ideal systems: formal products of ideals with positive rational exponents."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AllZeroGenerators, EmptyGeneratorList, MldlabError
from .poly import BiPoly, divides, exact_div, factor_rational, format_poly, poly_parse


@dataclass(frozen=True)
class IdealFactor:
    """One factor a^r: finitely many generators and a positive exponent."""

    generators: tuple[BiPoly, ...]
    exponent: Fraction

    def __post_init__(self):
        if not self.generators:
            raise EmptyGeneratorList("factor needs at least one generator")
        if all(g.is_zero() for g in self.generators):
            raise AllZeroGenerators("factor generators are all zero")
        if self.exponent <= 0:
            raise MldlabError(f"factor exponent must be positive, got {self.exponent}")

    @classmethod
    def make(cls, gens, exponent) -> IdealFactor:
        polys = tuple(poly_parse(g) if isinstance(g, str) else g for g in gens)
        return cls(polys, Fraction(exponent))

    def max_degree(self) -> int:
        return max(g.degree() for g in self.generators if not g.is_zero())


@dataclass(frozen=True)
class IdealSystem:
    """Formal product of ideal factors; an empty product is the trivial system."""

    factors: tuple[IdealFactor, ...] = ()

    @classmethod
    def make(cls, *factors) -> IdealSystem:
        """Build from (gens, exponent) pairs; gens may be polynomial text."""
        return cls(tuple(IdealFactor.make(g, e) for g, e in factors))

    @classmethod
    def parse(cls, pairs: list[tuple[str, str]]) -> IdealSystem:
        """From CLI-style ("(g1, g2)", "p/q") pairs."""
        factors = []
        for ideal_text, exp_text in pairs:
            text = ideal_text.strip()
            if text.startswith("(") and text.endswith(")") and _balanced_inner(text):
                text = text[1:-1]
            gens = [g for g in _split_top_level(text) if g.strip()]
            if not gens:
                raise EmptyGeneratorList(f"no generators in {ideal_text!r}")
            factors.append(IdealFactor.make(gens, Fraction(exp_text)))
        return cls(tuple(factors))

    def to_json_dict(self) -> dict:
        return {
            "factors": [
                {
                    "generators": [format_poly(g) for g in f.generators],
                    "exponent": _frac_str(f.exponent),
                }
                for f in self.factors
            ]
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> IdealSystem:
        return cls(
            tuple(
                IdealFactor.make(f["generators"], Fraction(f["exponent"]))
                for f in doc["factors"]
            )
        )

    def digest(self) -> str:
        blob = json.dumps(self.to_json_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def describe(self) -> str:
        if not self.factors:
            return "(trivial system)"
        parts = []
        for f in self.factors:
            gens = ", ".join(format_poly(g) for g in f.generators)
            parts.append(f"({gens})^{_frac_str(f.exponent)}")
        return " * ".join(parts)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _balanced_inner(text: str) -> bool:
    depth = 0
    for i, ch in enumerate(text[1:-1], start=1):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth < 0:
            return False
    return depth == 0


@dataclass
class CurveComponent:
    """An irreducible rational curve through the origin in the support of
    the system (or of an explicit boundary divisor)."""

    id: int
    poly: BiPoly
    sys_mult: dict[int, int] = field(default_factory=dict)  # factor index -> multiplicity
    bnd_mult: int = 0  # multiplicity in the explicit boundary divisor
    # Filled in once a resolution is complete: where the strict transform
    # meets the exceptional locus, as (divisor id, coordinate) pairs; the
    # coordinate is None for a crossing only visible over an extension.
    locations: list = field(default_factory=list)

    def coefficient(self, system: IdealSystem) -> Fraction:
        return sum(
            (system.factors[j].exponent * m for j, m in self.sys_mult.items()),
            Fraction(0),
        )

    def smooth_at_origin(self) -> bool:
        return self.poly.order() == 1


@dataclass
class SplitSystem:
    """Per-factor residual generators plus the shared curve component list."""

    system: IdealSystem
    residuals: list[list[BiPoly]]
    components: list[CurveComponent]


def split_system(system: IdealSystem, boundary_curves: list[BiPoly] | None = None) -> SplitSystem:
    """Separate every factor into curve components and a finite-cosupport
    residual; components not passing through the origin are dropped (they
    cannot meet any divisor over the origin)."""
    comps: list[CurveComponent] = []

    def lookup(p: BiPoly) -> CurveComponent:
        for c in comps:
            if c.poly == p:
                return c
        c = CurveComponent(id=len(comps), poly=p)
        comps.append(c)
        return c

    residuals: list[list[BiPoly]] = []
    for j, factor in enumerate(system.factors):
        gens = [g for g in factor.generators if not g.is_zero()]
        from .poly import gcd_many

        h = gcd_many(gens).monic()
        residuals.append([exact_div(g, h) for g in gens])
        if not h.is_constant():
            for p, mult in factor_rational(h):
                if p.eval(0, 0) == 0:
                    lookup(p).sys_mult[j] = mult
    for b in boundary_curves or []:
        for p, mult in factor_rational(b):
            if p.eval(0, 0) == 0:
                c = lookup(p)
                c.bnd_mult += mult
    return SplitSystem(system=system, residuals=residuals, components=comps)
