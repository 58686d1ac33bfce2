"""Exception types shared across the toolkit."""


class BoqError(Exception):
    """Base class for all toolkit errors."""


class SchemaError(BoqError):
    """Input file violates the expected schema (missing column, bad header)."""


class RowError(BoqError):
    """A single input row is invalid; carries the 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class ConfigurationError(BoqError):
    """A configuration or spec value is infeasible or inconsistent."""


class ContractError(BoqError):
    """A caller violated an operation precondition (shape, range, state)."""


class NumericError(BoqError):
    """Non-finite values reached a numeric operation."""


class TrainingError(BoqError):
    """Training diverged; carries the epoch where it happened."""

    def __init__(self, epoch: int, message: str) -> None:
        super().__init__(f"epoch {epoch}: {message}")
        self.epoch = epoch


class UndefinedResultError(BoqError):
    """The requested statistic is undefined for the given inputs."""


class ModelFormatError(BoqError):
    """A model or embedding file is malformed or has no parseable manifest."""
