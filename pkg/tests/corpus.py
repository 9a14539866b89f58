"""Shared corpora: plt triples and mld-zero triples used across suites."""

from fractions import Fraction as F

from mldlab import IdealSystem


def mk(spec) -> IdealSystem:
    return IdealSystem.make(*[(gens, e) for gens, e in spec])


# 22 plt triples: unique coefficient-one smooth curve, positive mld.
# Mix of empty and nonempty D, monomial and shifted curves, tangencies.
PLT_CORPUS = [
    [(["x"], 1)],
    [(["x"], 1), (["x", "y"], F(1, 2))],
    [(["x"], 1), (["y"], F(1, 4)), (["x", "y"], F(1, 4))],
    [(["y"], 1), (["x", "y"], F(1, 3))],
    [(["x+y"], 1), (["x", "y"], F(2, 3))],
    [(["x"], 1), (["y"], F(1, 2))],
    [(["x"], 1), (["y"], F(1, 2)), (["x", "y"], F(1, 4))],
    [(["x+y^2"], 1)],
    [(["x+y^2"], 1), (["x", "y"], F(1, 2))],
    [(["x-y^3"], 1), (["y"], F(1, 3))],
    [(["x"], 1), (["x+y"], F(1, 4)), (["x-y"], F(1, 4))],
    [(["x"], 1), (["x^2", "y^3"], F(1, 4))],
    [(["x-y^2"], 1), (["x"], F(1, 4))],
    [(["y-x^2"], 1), (["x", "y"], F(1, 3))],
    [(["x"], 1), (["x", "y^2"], F(1, 3))],
    [(["x+y^3"], 1), (["y"], F(2, 5))],
    [(["x"], 1), (["x^3", "y^2"], F(1, 4))],
    [(["x+2*y"], 1), (["x", "y"], F(3, 5))],
    [(["x"], 1), (["y^2-x*y"], F(1, 4))],
    [(["x-y^2+y^3"], 1), (["x", "y"], F(1, 2))],
    [(["x"], 1), (["x-y^2"], F(1, 6)), (["x+y^2"], F(1, 6))],
    [(["x"], 1), (["y"], F(1, 2)), (["x", "y"], F(1, 8))],
]

# 11 lc triples with mld exactly zero (the first is the classical cusp at
# its log canonical threshold, whose effective level is 4).
MLD0_CORPUS = [
    [(["x^2", "y^3"], F(5, 6))],
    [(["x", "y"], 2)],
    [(["x"], 1), (["x", "y"], 1)],
    [(["x"], 1), (["y"], 1)],
    [(["x^3", "y^2"], F(5, 6))],
    [(["x^2", "y^5"], F(7, 10))],
    [(["x*y"], 1)],
    [(["x", "y^2"], F(3, 2))],
    [(["x+y"], 1), (["x", "y"], 1)],
    [(["x^2-y^3"], F(5, 6))],
    [(["x", "y^3"], F(4, 3))],
]


def plt_systems():
    return [mk(spec) for spec in PLT_CORPUS]


def mld0_systems():
    return [mk(spec) for spec in MLD0_CORPUS]
