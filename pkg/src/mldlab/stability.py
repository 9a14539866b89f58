"""Perturbation harness: ideal-adic stability of the mld, tested for real.

Perturbs a system within its equivalence class modulo m^l, recomputes the
mld of every perturbation from scratch on a fresh resolution, and checks
exact equality with the original value.  The equivalence class membership
of every emitted sample is itself re-verified by exact linear algebra in
the quotient by m^l, so a bug in the generator cannot silently weaken the
test.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .blowup import ResolutionGraph, log_resolution
from .errors import (
    EngineBug,
    FactorCountMismatch,
    PointNotOnExceptionalLocus,
    UnsupportedClassification,
)
from .ideals import RationalPoint
from .mld import (
    LC_NOT_PLT,
    KLT,
    MINUS_INFINITY,
    NOT_LC,
    PLT_WITH_CENTRE,
    BoundarySpec,
    MldReport,
    StabilityCertificate,
    classify,
    compute_constants,
    evaluate_graph,
    mld_at_origin,
)
from .poly import BiPoly, format_poly, iter_monomials
from .system import IdealFactor, IdealSystem

STRATEGIES = ("truncate", "add-tails", "add-generators", "mixed")

TAIL_SPAN = 3  # added terms live in degrees [l, l + TAIL_SPAN]
COEFF_POOL = [c for c in range(-3, 4) if c != 0]


@dataclass
class Perturbation:
    """Record of one sampled edit; enough to replay it exactly."""

    strategy: str
    level: int
    seed: int
    index: int
    tails: list[list[BiPoly]]  # per factor, per generator (zero = untouched)
    extra_generators: list[list[BiPoly]]  # per factor
    truncated: bool
    degenerate_reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "level": self.level,
            "seed": self.seed,
            "index": self.index,
            "tails": [[format_poly(t) for t in fs] for fs in self.tails],
            "extra_generators": [[format_poly(g) for g in fs] for fs in self.extra_generators],
            "truncated": self.truncated,
            "degenerate": self.degenerate_reason,
        }


def _rng(seed: int, index: int) -> random.Random:
    # string seeding hashes deterministically across platforms and runs
    return random.Random(f"{seed}:{index}")


def _random_tail(rng: random.Random, level: int) -> BiPoly:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(level, level + TAIL_SPAN)
        i = rng.randint(0, d)
        terms[(i, d - i)] = Fraction(rng.choice(COEFF_POOL))
    return BiPoly(terms)


def _truncate(g: BiPoly, level: int) -> BiPoly:
    return BiPoly({t: c for t, c in g.terms.items() if t[0] + t[1] < level})


def perturb(
    system: IdealSystem,
    level: int,
    seed: int,
    strategy: str,
    index: int = 0,
) -> tuple[IdealSystem | None, Perturbation]:
    """One sample from the m^level-equivalence class of the system.

    truncate drops all generator terms of degree >= level; add-tails adds
    random polynomials supported in degrees [level, level+3]; add-generators
    appends random elements of m^level; mixed picks per factor.  Randomness
    is a pure function of (seed, index).  A sample that would empty out a
    factor (truncation killing every generator) is returned as degenerate
    with system None.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    rng = _rng(seed, index)
    tails: list[list[BiPoly]] = []
    extras: list[list[BiPoly]] = []
    truncated = False
    new_factors = []
    for factor in system.factors:
        mode = strategy if strategy != "mixed" else rng.choice(STRATEGIES[:3])
        gens = list(factor.generators)
        f_tails = [BiPoly.zero()] * len(gens)
        f_extras: list[BiPoly] = []
        if mode == "truncate":
            truncated = True
            gens = [_truncate(g, level) for g in gens]
        elif mode == "add-tails":
            f_tails = [_random_tail(rng, level) for _ in gens]
            gens = [g + t for g, t in zip(gens, f_tails)]
        elif mode == "add-generators":
            f_extras = [_random_tail(rng, level) for _ in range(rng.randint(1, 2))]
            gens = gens + f_extras
        tails.append(f_tails)
        extras.append(f_extras)
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            pert = Perturbation(strategy, level, seed, index, tails, extras, truncated,
                                degenerate_reason="truncation emptied a factor")
            return None, pert
        new_factors.append(IdealFactor(tuple(gens), factor.exponent))
    pert = Perturbation(strategy, level, seed, index, tails, extras, truncated)
    return IdealSystem(tuple(new_factors)), pert


def _ideal_image_rref(gens, level: int):
    """Row space of the image of the ideal in Q[x,y]/m^level."""
    basis = list(iter_monomials(level - 1))
    index = {t: i for i, t in enumerate(basis)}
    rows = []
    for g in gens:
        for (a, b) in basis:
            prod = g * BiPoly.monomial(a, b)
            row = [Fraction(0)] * len(basis)
            nonzero = False
            for t, c in prod.terms.items():
                if t[0] + t[1] < level:
                    row[index[t]] = c
                    nonzero = True
            if nonzero:
                rows.append(row)
    return linalg.rref(rows)


def equiv_l_check(a: IdealSystem, b: IdealSystem, level: int) -> bool:
    """Exact test of a_j + m^level = b_j + m^level for every factor.

    Compares the factor images inside the finite-dimensional quotient by
    m^level via reduced row echelon forms.
    """
    if len(a.factors) != len(b.factors):
        raise FactorCountMismatch("factor counts differ")
    for fa, fb in zip(a.factors, b.factors):
        if fa.exponent != fb.exponent:
            raise FactorCountMismatch("factor exponents differ")
    if level < 1:
        raise ValueError("level must be a positive integer")
    for fa, fb in zip(a.factors, b.factors):
        if _ideal_image_rref(fa.generators, level) != _ideal_image_rref(fb.generators, level):
            return False
    return True


# -- lemma-level checks --------------------------------------------------------


def verify_lemma5(
    certificate: StabilityCertificate, perturbed: IdealSystem
) -> tuple[Fraction, Fraction]:
    """(mld(X, sD, b*m^t'), mld(X, b*m^t)) on a fresh resolution of b.

    D is the certificate's divisor, imposed on the perturbed system's
    resolution; the contract is that both values are exactly zero.
    """
    graph = log_resolution(perturbed, boundary_curves=certificate.d_polys)
    first = evaluate_graph(graph, BoundarySpec(sD=certificate.s, tM=certificate.t_prime))
    second = evaluate_graph(graph, BoundarySpec(tM=certificate.t))
    if first.value is MINUS_INFINITY or second.value is MINUS_INFINITY:
        raise EngineBug("auxiliary boundary mld collapsed to -inf on a perturbation")
    return first.value, second.value


def centre_case(graph: ResolutionGraph, p: RationalPoint) -> int:
    """Position of a point of the exceptional locus relative to the strict
    transforms: 1 away from them, 2 on a D-component, 3 on the centre curve
    (then necessarily on F)."""
    chart = graph.chart(p.chart)
    on = [d for d, eq in chart.div_eqs.items() if eq.eval(p.u, p.v) == 0]
    if not on:
        raise PointNotOnExceptionalLocus(f"{p} lies on no exceptional divisor")
    if graph.centre_component is not None:
        if chart.curves[graph.centre_component].eval(p.u, p.v) == 0:
            if graph.F not in on:
                raise EngineBug("centre curve met away from F")
            return 3
    for comp in graph.d_components():
        if chart.curves[comp.id].eval(p.u, p.v) == 0:
            return 2
    return 1


# -- the stability theorem, executably -----------------------------------------


@dataclass
class SampleResult:
    index: int
    strategy: str
    perturbation: Perturbation
    system: IdealSystem | None
    mld_value: object = None  # Fraction | MINUS_INFINITY | None when skipped
    equal: bool | None = None
    lemma5: tuple[Fraction, Fraction] | None = None
    skipped: bool = False

    def passed(self) -> bool:
        if self.skipped:
            return True
        ok = bool(self.equal)
        if self.lemma5 is not None:
            ok = ok and self.lemma5 == (0, 0)
        return ok

    def to_json_dict(self) -> dict:
        doc = {
            "index": self.index,
            "strategy": self.strategy,
            "skipped": self.skipped,
            "perturbation": self.perturbation.to_json_dict(),
        }
        if self.system is not None:
            doc["system"] = self.system.to_json_dict()
        if not self.skipped:
            doc["mld"] = "-inf" if self.mld_value is MINUS_INFINITY else str(self.mld_value)
            doc["equal"] = self.equal
            if self.lemma5 is not None:
                doc["lemma5"] = [str(self.lemma5[0]), str(self.lemma5[1])]
        return doc


@dataclass
class VerificationReport:
    digest: str
    system: IdealSystem
    path: str  # "plt" | "mld-zero" | "klt" | "not-lc"
    level: int | None
    baseline: MldReport
    certificate: StabilityCertificate | None
    samples: list[SampleResult]
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(s.passed() for s in self.samples)

    def counterexamples(self) -> list[SampleResult]:
        return [s for s in self.samples if not s.passed()]

    def to_json_dict(self) -> dict:
        return {
            "schema": "mldlab.verification/1",
            "digest": self.digest,
            "system": self.system.to_json_dict(),
            "path": self.path,
            "level": self.level,
            "mld": self.baseline.value_str(),
            "classification": self.baseline.classification,
            "certificate": self.certificate.to_json_dict() if self.certificate else None,
            "verdict": "pass" if self.verdict else "counterexample",
            "notes": self.notes,
            "samples": [s.to_json_dict() for s in sorted(self.samples, key=lambda s: s.index)],
        }


def remark_level(report: MldReport) -> int:
    """Effective level for an mld-zero triple: one more than the largest
    ord_E(a_j)/ord_E(m) on the divisor computing the mld."""
    kind, ident = report.computed_by
    if kind != "divisor":
        raise UnsupportedClassification("mld 0 must be computed by a divisor")
    graph = report.graph
    div = graph.divisor(ident)
    if not graph.system.factors:
        return 1
    worst = max(
        Fraction(graph.ord_factor(div, j), div.ord_m)
        for j in range(len(graph.system.factors))
    )
    return 1 + math.floor(worst)


def eqn2_level(report: MldReport) -> int:
    """Level strictly above ord_E(a_j)/ord_E(m) for every divisor of the
    resolution (the klt fallback; see the ledger note on this choice)."""
    graph = report.graph
    if not graph.system.factors:
        return 1
    worst = max(
        Fraction(graph.ord_factor(div, j), div.ord_m)
        for div in graph.divisors
        for j in range(len(graph.system.factors))
    )
    return 1 + math.floor(worst)


def verify_semicontinuity(
    system: IdealSystem, samples: int = 50, seed: int = 0
) -> VerificationReport:
    """Draw seeded perturbations at the effective level and confirm the mld
    of every one equals the original, as exact rationals.

    plt inputs get the full certificate treatment including the two
    auxiliary zero-mld checks per sample; mld-zero inputs use the computing-
    divisor level; klt inputs use the all-divisor level; non-lc inputs are
    trivially stable and pass with a note.
    """
    baseline = classify(system)
    notes: list[str] = []
    certificate = None
    if baseline.classification == NOT_LC:
        return VerificationReport(
            digest=system.digest(),
            system=system,
            path="not-lc",
            level=None,
            baseline=baseline,
            certificate=None,
            samples=[],
            notes=["mld is -inf: every perturbation keeps it, nothing to sample"],
        )
    if baseline.classification == PLT_WITH_CENTRE:
        path = "plt"
        certificate = compute_constants(system)
        level = certificate.level
    elif baseline.classification == LC_NOT_PLT:
        path = "mld-zero"
        level = remark_level(baseline)
    else:
        path = "klt"
        level = eqn2_level(baseline)
        notes.append(
            "klt path: level taken from the all-divisor order ratios; "
            "empirical_min_level probes how tight this is"
        )

    results: list[SampleResult] = []
    for i in range(samples):
        strategy = STRATEGIES[i % len(STRATEGIES)]
        b, pert = perturb(system, level, seed, strategy, index=i)
        sample = SampleResult(index=i, strategy=strategy, perturbation=pert, system=b)
        if b is None:
            sample.skipped = True
            results.append(sample)
            continue
        if not equiv_l_check(system, b, level):
            raise EngineBug(f"perturb emitted a sample outside the m^{level} class")
        rep_b = mld_at_origin(b)
        sample.mld_value = rep_b.value
        sample.equal = (
            rep_b.value is MINUS_INFINITY and baseline.value is MINUS_INFINITY
        ) or rep_b.value == baseline.value
        if certificate is not None:
            sample.lemma5 = verify_lemma5(certificate, b)
        results.append(sample)
    return VerificationReport(
        digest=system.digest(),
        system=system,
        path=path,
        level=level,
        baseline=baseline,
        certificate=certificate,
        samples=results,
        notes=notes,
    )


@dataclass
class MinLevelResult:
    least_level: int
    proven_level: int
    counterexample: SampleResult | None  # at least_level - 1, when one exists
    failures_per_level: dict[int, int]
    notes: list[str]

    def to_json_dict(self) -> dict:
        return {
            "schema": "mldlab.min-level/1",
            "least_level": self.least_level,
            "proven_level": self.proven_level,
            "counterexample": self.counterexample.to_json_dict() if self.counterexample else None,
            "failures_per_level": {str(k): v for k, v in self.failures_per_level.items()},
            "notes": self.notes,
        }


def empirical_min_level(
    system: IdealSystem, budget: int = 40, seed: int = 0
) -> MinLevelResult:
    """Smallest level at which `budget` seeded samples find no mld change.

    Heuristic lower evidence only: absence of a counterexample under this
    sampling proves nothing, and the result says so.
    """
    baseline = classify(system)
    if baseline.classification == PLT_WITH_CENTRE:
        proven = compute_constants(system).level
    elif baseline.classification == LC_NOT_PLT:
        proven = remark_level(baseline)
    else:
        raise UnsupportedClassification(
            f"empirical_min_level handles plt or mld-zero inputs, got "
            f"{baseline.classification}"
        )
    failures: dict[int, int] = {}
    witnesses: dict[int, SampleResult] = {}
    least = proven
    for level in range(1, proven + 1):
        bad = 0
        for i in range(budget):
            strategy = STRATEGIES[i % len(STRATEGIES)]
            b, pert = perturb(system, level, seed, strategy, index=i)
            if b is None:
                continue
            rep_b = mld_at_origin(b)
            equal = (
                rep_b.value is MINUS_INFINITY and baseline.value is MINUS_INFINITY
            ) or rep_b.value == baseline.value
            if not equal:
                bad += 1
                if level not in witnesses:
                    s = SampleResult(index=i, strategy=strategy, perturbation=pert, system=b)
                    s.mld_value, s.equal = rep_b.value, False
                    witnesses[level] = s
        failures[level] = bad
        if bad == 0:
            least = level
            break
    return MinLevelResult(
        least_level=least,
        proven_level=proven,
        counterexample=witnesses.get(least - 1),
        failures_per_level=failures,
        notes=[
            "heuristic lower evidence only: sampled perturbations, not a proof",
        ],
    )
