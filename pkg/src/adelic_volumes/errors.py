"""Exception types shared across the package.

Everything raised on purpose derives from :class:`AdelicVolumesError`, so callers
can catch one base class at CLI or test boundaries.
"""


class AdelicVolumesError(Exception):
    """Base class for all errors raised deliberately by this package."""


class OutOfDomain(AdelicVolumesError):
    """Evaluation point lies outside the domain of a piecewise-affine function."""


class EmptyDomain(AdelicVolumesError):
    """An operation produced or required an empty domain (disjoint intervals)."""


class UnboundedBelow(AdelicVolumesError):
    """A convex envelope or minimum does not exist because the function has no
    affine minorant (asymptotic slopes out of order)."""


class NotConcave(AdelicVolumesError):
    """Breakpoint data fed to a concave constructor is not concave."""


class NotConvex(AdelicVolumesError):
    """Breakpoint data fed to a convex constructor is not convex."""


class InvalidPoint(AdelicVolumesError):
    """A closed-point description is rejected (reducible, non-monic, too large)."""


class NonToricBaseCondition(AdelicVolumesError):
    """A base condition carries a positive order at a point outside {0, infinity},
    which the toric model cannot express as a polytope constraint."""


class EmptyPolytope(AdelicVolumesError):
    """A roof or body was requested for a pair whose constrained polytope is empty."""


class NotEffectiveInput(AdelicVolumesError):
    """An operation defined only for effective inputs received a non-effective one."""


class UnboundedPerturbation(AdelicVolumesError):
    """A perturbation function must be bounded (zero asymptotic slopes)."""


class NotBig(AdelicVolumesError):
    """An operation defined only for big pairs received a non-big one."""


class NotNef(AdelicVolumesError):
    """An operation defined only for nef divisors received a non-nef one."""


class NotRelativelyNef(AdelicVolumesError):
    """Weak ampleness is only decided for relatively nef input; anything else is
    rejected rather than guessed."""


class UnknownSuite(AdelicVolumesError):
    """run_suite received a suite name it does not know."""


class PrecisionExhausted(AdelicVolumesError):
    """Interval arithmetic could not separate a comparison at the precision cap."""
