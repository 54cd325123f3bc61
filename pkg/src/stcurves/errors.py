"""Exception hierarchy.

Every error carries a stable ``exit_code`` so the command line interface can
map failure modes to distinct process exit statuses.
"""


class StcurvesError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ParseError(StcurvesError):
    """Malformed textual input (origami files, matrices, words)."""

    exit_code = 2


class LengthMismatch(StcurvesError):
    """The two permutations of a square-tiled surface have different degree."""

    exit_code = 3


class NotBijective(StcurvesError):
    """A one-line sequence is not a permutation of 0..d-1."""

    exit_code = 4


class NotTransitive(StcurvesError):
    """The pair of permutations does not generate a transitive group."""

    exit_code = 5


class NotCoprime(StcurvesError):
    """A direction (p, q) with gcd(p, q) != 1 was requested."""

    exit_code = 6


class WrongGenus(StcurvesError):
    """An operation restricted to a specific genus got another one."""

    exit_code = 7


class GenusTooSmall(StcurvesError):
    """Homological degeneracy questions need genus at least 2."""

    exit_code = 8


class NotInStabilizer(StcurvesError):
    """A matrix word does not stabilize the surface up to relabelling."""

    exit_code = 9


class SignatureGenusMismatch(StcurvesError):
    """A zero signature whose total excess is not 2*genus - 2."""

    exit_code = 10


class DegenerateDenominator(StcurvesError):
    """The optimal-degree formula has a zero denominator."""

    exit_code = 11


class RankNotTwo(StcurvesError):
    """The absolute-holonomy lattice is degenerate (should never happen)."""

    exit_code = 12


class InvalidFamily(StcurvesError):
    """Invalid parameters for a cyclic-cover family."""

    exit_code = 13


class DegreeGuard(StcurvesError):
    """An exhaustive enumeration beyond the configured degree bound."""

    exit_code = 14


class PreconditionFailed(StcurvesError):
    """A documented precondition of an operation does not hold."""

    exit_code = 15


class CapExceeded(StcurvesError):
    """A group-closure computation hit its element cap inconclusively."""

    exit_code = 16


class DTooSmall(StcurvesError):
    """Modular-curve data needs level d >= 2."""

    exit_code = 17


class NotDivisible(StcurvesError):
    """d_opt must divide the degree."""

    exit_code = 18


class IndexOutOfRange(StcurvesError):
    """An eigenspace index outside 1..N-1."""

    exit_code = 20


class InternalInconsistency(StcurvesError):
    """An internal cross-check failed; indicates a bug, not bad input."""

    exit_code = 21
