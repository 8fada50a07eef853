class ProjLogicError(ValueError):
    """Base class for all errors raised by projlogic."""


class DimensionError(ProjLogicError):
    pass


class NonHermitianError(ProjLogicError):
    pass


class InvariantError(ProjLogicError):
    """A value violates the invariants of its declared type."""


class CertificationError(ProjLogicError):
    """An independent cross-check of a computed quantity failed.

    This signals a bug in the geometry or algebra, never bad user input.
    """


class IncompatibleError(ProjLogicError):
    pass


class NormalizationError(ProjLogicError):
    pass


class RankDeficientError(ProjLogicError):
    pass


class StepSizeError(ProjLogicError):
    pass
