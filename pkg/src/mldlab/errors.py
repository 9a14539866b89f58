"""Exception taxonomy.

Every error raised by the library derives from MldlabError so callers can
distinguish engine failures from ordinary Python errors.  Input-shaped
problems (parsing, irrational base points) and internal consistency
failures get separate branches; the CLI maps the former to exit status 65
and the latter to status 1.
"""


class MldlabError(Exception):
    """Base class for all library errors."""


class PolySyntaxError(MldlabError):
    """Malformed polynomial text; carries the character position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnknownVariable(PolySyntaxError):
    """A variable other than x, y appeared in polynomial text."""


class EmptyGeneratorList(MldlabError):
    """An ideal was given with no generators."""


class AllZeroGenerators(MldlabError):
    """Every generator of an ideal is the zero polynomial."""


class PositiveDimensionalCosupport(MldlabError):
    """The generators share a nonconstant common factor, so the common
    zero locus is a curve rather than finitely many points."""


class IrrationalBasePoint(MldlabError):
    """A required common zero exists only over a proper field extension
    of the rationals."""


class PointNotOverOrigin(MldlabError):
    """Blow-up centre does not lie on the exceptional locus over the
    origin (or is not the origin itself on the base plane)."""


class TooManyDivisorsThroughPoint(MldlabError):
    """More than two exceptional divisors pass through a proposed centre;
    impossible on a simple-normal-crossing model, so this signals an
    internal bug rather than bad input."""


class NotResolved(MldlabError):
    """Operation requires a fully resolved (snc-complete) graph."""


class BudgetExceeded(MldlabError):
    """Defensive cap hit (blow-up count or intermediate degree)."""


class UnknownDivisor(MldlabError):
    """Divisor id not present in the resolution graph."""


class NonMonomialInput(MldlabError):
    """The monomial oracle received a non-monomial generator."""


class ChartExpressionError(MldlabError):
    """A point or polynomial could not be interpreted in the requested
    chart."""


class PointNotOnExceptionalLocus(MldlabError):
    """The given point lies on no exceptional divisor of the graph."""


class NotPlt(MldlabError):
    """Constant extraction requires a purely-log-terminal input with a
    curve centre."""


class FactorCountMismatch(MldlabError):
    """Two ideal systems being compared have different factor shapes."""


class UnsupportedClassification(MldlabError):
    """The verification harness has no protocol for this input class."""


class NotInScope(MldlabError):
    """Input reached a configuration the engine deliberately excludes."""


class EngineBug(MldlabError):
    """An internal invariant failed; indicates a defect in the engine,
    never a user error."""
