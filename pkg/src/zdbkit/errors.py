"""Exception types raised by zdbkit.

Every named check failure gets its own class so callers can catch the
specific condition instead of parsing messages.
"""


class ZdbkitError(Exception):
    """Base class for all zdbkit errors."""


class NotPrime(ZdbkitError):
    """Field characteristic is not a prime number."""


class NotIrreducible(ZdbkitError):
    """Defining polynomial factors over the prime field."""


class NotPrimitive(ZdbkitError):
    """Defining polynomial is irreducible but its root does not generate F*."""


class DivisionByZero(ZdbkitError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class ParseError(ZdbkitError, ValueError):
    """Malformed element, field block, function file, or graph file."""


class ExponentOutOfRange(ParseError):
    """Element written as w^k with k outside [0, q-1)."""


class ContextMismatch(ZdbkitError):
    """Objects built over different field contexts were mixed."""


class NotQuadratic(ZdbkitError):
    """Operation requires a function with affine derivatives."""


class NotInjectiveOnCoset(ZdbkitError):
    """Function is not injective on the required power coset."""


class ConditionOracleMismatch(ZdbkitError):
    """A closed-form criterion disagreed with its brute-force oracle."""


class FormulaMismatch(ZdbkitError):
    """A closed-form gcd value disagreed with the Euclid computation."""


class NotDOShape(ZdbkitError):
    """Polynomial exponents do not decompose as p^k + p^l as required."""


class NotZdb(ZdbkitError):
    """Function is not zero-difference balanced as required."""


class EmptySet(ZdbkitError):
    """Candidate difference set is empty."""


class CountMismatch(ZdbkitError):
    """Difference counting contradicts the claimed design parameters."""

    def __init__(self, message, element=None, count=None):
        super().__init__(message)
        self.element = element
        self.count = count


class PreconditionViolated(ZdbkitError):
    """Operation called with arguments outside its stated domain."""


class NotRegularSet(ZdbkitError):
    """Connection set is not symmetric (D != -D)."""


class Timeout(ZdbkitError):
    """Search exceeded its configured budget; result is undecided."""
