"""Exception types shared across the package.

Most derive from ValueError so that careless call sites still fail loudly
under a generic except clause; the distinct classes exist so tests and the
CLI can tell precondition violations apart from size guards.
"""


class SpecMismatch(ValueError):
    """Operands belong to different field specs (or tensor factors disagree)."""


class IndexOutOfBounds(IndexError):
    """A row/column/ground-set index is outside the object it addresses."""


class NonSquare(ValueError):
    """Determinant requested for a non-square selection."""


class TooManyBlocks(ValueError):
    """Partition enumeration refused: Bell numbers explode past 8 sets."""


class GridTooLarge(ValueError):
    """Erasure-pattern enumeration refused beyond the exhaustive range."""


class EnumerationTooLarge(ValueError):
    """Family or codeword enumeration would exceed the configured cap."""


class DuplicatePoints(ValueError):
    """Evaluation points for a Vandermonde pool must be distinct."""


class DependentFunctions(ValueError):
    """Evaluation-table rows are linearly dependent."""


class ParameterOutOfRange(ValueError):
    """A numeric parameter violates the documented admissible range."""


class PoolTooSmall(ValueError):
    """Puncturing without repetition needs at least n pool columns."""


class RankDeficient(ValueError):
    """A generator matrix that must have full row rank does not."""


class DimensionMismatch(ValueError):
    """Grid dimensions of a pattern and a tensor code disagree."""


class PreconditionViolated(ValueError):
    """A documented operation precondition does not hold."""


class NoMinorFound(RuntimeError):
    """No generically non-vanishing minor of the target size exists.

    Signals either a framework-property violation or an exhausted index
    budget; callers treat it as a hard failure, never a recoverable state.
    """


class NoFaultyIndex(RuntimeError):
    """The minor vanished at the full assignment yet no prefix flip exists.

    Mathematically impossible; surfacing it exposes randomized-tester
    false negatives instead of silently mislabeling a run.
    """


class ToleranceUnreachable(RuntimeError):
    """The randomized tester cannot meet its error budget with any trial count."""
