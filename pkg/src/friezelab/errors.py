"""Exception hierarchy shared by all friezelab modules."""


class FriezeError(Exception):
    """Base class for all domain errors raised by friezelab."""


class NotAFrieze(FriezeError):
    """The generated group contains no nonzero translation."""


class InconsistentFlags(FriezeError):
    """A symmetry-flag combination that no frieze group can have."""


class MalformedMotif(FriezeError):
    """Motif text that does not parse or violates a range check."""


class OutOfCell(MalformedMotif):
    """A motif point outside the fundamental cell or the strip."""


class PeriodMismatch(FriezeError):
    """Motif cell width and group period disagree."""


class NonIntegralRaster(FriezeError):
    """Requested pixel density does not clear the rational denominators."""


class MalformedPgm(FriezeError):
    """Bytes that are not a single binary (P5) PGM image."""


class NoPeriod(FriezeError):
    """No proper divisor of the width qualifies as a period."""


class OddPeriodGlide(FriezeError):
    """Glide probe asked for with an odd pixel period (needs upsampling)."""
