"""Typed errors shared across the engine.

Two families matter to callers: InputError means the caller handed us bad
data (CLI exit code 2), VerificationError means a computed certificate or
identity failed (CLI exit code 1).
"""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EngineError):
    """Malformed or inconsistent caller input."""


class VerificationError(EngineError):
    """A mathematical certificate failed to hold."""


class NotLatinSquare(InputError):
    """A multiplication table row or column is not a permutation."""


class NoIdentity(InputError):
    """The multiplication table has no two-sided identity element."""


class NoInverse(InputError):
    """Some element lacks a two-sided inverse."""


class NotAssociative(InputError):
    """The multiplication table violates associativity."""


class NotAPermutation(InputError):
    """A generator is not a bijection on its points."""


class ClosureCapExceeded(InputError):
    """Group closure grew past the configured element cap."""


class IndexOutOfRange(InputError):
    """An element, class, or row index is outside its valid range."""


class SubgroupMismatch(InputError):
    """A subgroup was paired with a group that is not its parent."""


class GroupMismatch(InputError):
    """Operands belong to different groups."""


class OracleTooLarge(EngineError):
    """The dense matrix oracle would exceed its size cap."""


class DegenerateSpectrum(VerificationError):
    """Class-sum eigenvalues stayed degenerate after all re-randomizations."""


class OrthogonalityFailure(VerificationError):
    """A character table failed the orthogonality relations."""


class NonIntegralMultiplicity(VerificationError):
    """A decomposition multiplicity failed to round to a nonnegative integer."""
