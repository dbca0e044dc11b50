"""Exception hierarchy shared by all beckline modules."""


class BecklineError(Exception):
    """Base class for every error raised by this package."""


class IdenticalPointsError(BecklineError):
    """Two coincident points were given where a line needs distinct ones."""


class DuplicatePointsError(BecklineError):
    """A configuration contains the same geometric point twice."""


class TooFewPointsError(BecklineError):
    """An operation needs at least two points."""


class UnequalColorCountsError(BecklineError):
    """An analysis operation requires equally sized color classes."""


class InvalidConstantsError(BecklineError):
    """Analysis constants violate their preconditions (e.g. k2 > k1/6)."""


class InconclusiveCaseError(BecklineError):
    """The two-extremes case analysis reached Case III but no line of the
    high richness class exists (or a second distinct witness does not), so
    no witnesses can be produced.  Happens only for constant choices the
    underlying argument does not cover."""


class InvalidLineError(BecklineError):
    """A line argument is not induced by the configuration."""


class SubsetSizeError(BecklineError):
    """A requested subset size is out of range."""


class DomainError(BecklineError):
    """Numeric arguments violate an operation's domain preconditions."""


class InvalidSpecError(BecklineError):
    """A generator or search specification is malformed."""


class SamplingExhaustedError(BecklineError):
    """Rejection sampling hit its retry cap without producing a valid draw."""


class MoveInapplicableError(BecklineError):
    """A search move cannot be applied (e.g. point nudge with radius 0)."""


class PointFileError(BecklineError):
    """A point file failed to parse."""
