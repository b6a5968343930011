"""Exception hierarchy shared across the toolkit."""


class SpiralRbfError(Exception):
    """Base class for all toolkit errors."""


class InvalidParameterError(SpiralRbfError):
    """An argument violates a numeric precondition (e.g. non-positive arc length, odd interval count)."""


class DegenerateGoalError(SpiralRbfError):
    """Goal coincides with the start pose; no trajectory can be generated."""


class DivergenceError(SpiralRbfError):
    """Solver iterate became non-finite."""


class ConfigurationError(SpiralRbfError):
    """Invalid grid, partition, or command configuration. CLI maps this to exit code 2."""


class DomainError(SpiralRbfError):
    """A query point lies outside the supported domain box."""


class LookupMissError(SpiralRbfError):
    """The addressed lookup-table record is flagged invalid."""


class FormatError(SpiralRbfError):
    """A persisted file failed a structural check (magic, version, or size)."""


class TrainingError(SpiralRbfError):
    """Training cannot proceed (empty dataset or non-finite gradients)."""
