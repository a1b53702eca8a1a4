"""Exception types shared across the package."""


class SeltError(Exception):
    """Base class for all package-specific errors."""


class ContainmentError(SeltError, ValueError):
    """Inner partition is not contained in the outer partition."""


class CapacityError(SeltError, ValueError):
    """Fewer labels than boxes: axiom (i) is unsatisfiable."""


class NotACorner(SeltError, ValueError):
    """Requested slide start is not an inner corner."""


class NotASubset(SeltError, ValueError):
    """Label set is not a subset of the source edge."""


class BadTableau(SeltError, ValueError):
    """Tableau has a label strictly west of its target column."""


class NotSlidable(SeltError, ValueError):
    """Slide decomposition fails the per-step minimality condition."""


class HomogeneityError(SeltError, ValueError):
    """Ring element is not homogeneous of the requested degree."""


class SolveError(SeltError, ArithmeticError):
    """Basis expansion system is inconsistent or non-unique."""


class FormError(SeltError, ArithmeticError):
    """Structure coefficient is not a single monomial of the expected degree."""


class DivisibilityError(SeltError, ArithmeticError):
    """Normalizing power of two does not divide the coefficient."""
