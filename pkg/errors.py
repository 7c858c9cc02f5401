"""
Exceptions
==========

Exception hierarchy shared by every ppart package. Identity failures are
never raised; they are reported through checks.CheckReport.
"""


class PPartitionError(Exception):
    """Base ppart exception."""
    pass


# =============================================================================
# Posets
# =============================================================================

class PosetError(PPartitionError):
    """Invalid poset, labeling, or shape."""
    pass


class CycleError(PosetError):
    """Cover relations induce a directed cycle."""
    pass


class LabelError(PosetError):
    """Incomparable elements share a label, or labels are malformed."""
    pass


class ImproperLabeling(PosetError):
    """Operation requires a bijective labeling onto 1..p."""
    pass


class LabelClash(PosetError):
    """Label images of two posets intersect."""
    pass


class ShapeError(PosetError):
    """Partition pair is not a valid skew shape."""
    pass


class NotNatural(PosetError):
    """Operation requires a natural labeling."""
    pass


class GraphError(PosetError):
    """Graph has a loop, a repeated edge, or a vertex out of range."""
    pass


# =============================================================================
# Words and algebra
# =============================================================================

class WordError(PPartitionError):
    """Invalid word or permutation."""
    pass


class DuplicateLetters(WordError):
    """Word was required to have distinct letters."""
    pass


class AlgebraError(PPartitionError):
    """Invalid polynomial or rational-function operation."""
    pass


class DuplicateArgument(AlgebraError):
    """Interpolation points share an argument."""
    pass


class ZeroPolynomial(AlgebraError):
    """Operation is undefined for the zero polynomial."""
    pass


class NotPolynomial(AlgebraError):
    """Rational expression does not reduce to a (Laurent) polynomial."""
    pass


# =============================================================================
# Oracles and limits
# =============================================================================

class OracleError(PPartitionError):
    """Brute-force oracle failure."""
    pass


class BudgetExceeded(OracleError):
    """Enumeration would exceed the configured candidate budget."""
    pass


class InvalidAssignment(OracleError):
    """Map is not a (P, omega)-partition."""
    pass


class InvalidArgument(PPartitionError, ValueError):
    """Argument outside the domain of an operation."""
    pass


class MalformedWord(PPartitionError):
    """Baxter operator word does not parse."""
    pass


class SizeLimit(PPartitionError):
    """Input exceeds the configured size limit."""
    pass
