"""Exception hierarchy shared by all einflag modules."""


class EinflagError(Exception):
    """Base class for every error raised by einflag."""


class InvalidParameters(EinflagError, ValueError):
    """(n, p) outside 3 <= n, 1 <= p <= n - 1, or a malformed request."""


class NotDivisible(EinflagError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DenominatorStraddlesZero(EinflagError, ArithmeticError):
    """Interval image of a denominator contains zero; refine and retry."""


class CertificationError(EinflagError):
    """A certified claim failed. Maps to exit code 3."""


class FactorizationMismatch(CertificationError):
    """A resultant or closed form did not factor as expected."""


class MembershipFailure(CertificationError):
    """A cleared numerator was not divisible by the defining polynomial."""


class UnexpectedNonKahler(CertificationError):
    """A rational solution was not found among the Kahler-Einstein tuples."""


class PositivityUndecided(CertificationError):
    """Refinement hit the precision cap without separating a value from 0."""


class DegenerateDenominator(CertificationError):
    """A substitution denominator divides the equation it is substituted into."""


class NotEinstein(CertificationError):
    """Ricci components of a metric provably differ."""
