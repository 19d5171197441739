"""Exception types shared across the toolkit.

Every error raised on a contract violation is a subclass of DoqualError,
so callers can catch one base type at pipeline boundaries while tests can
pin the precise failure class.
"""


class DoqualError(Exception):
    """Base class for all toolkit errors."""


class UndefinedInputError(DoqualError):
    """Input is structurally valid but the requested value is undefined for it
    (e.g. a readability index of a zero-word document)."""


class ParseError(DoqualError):
    """A file could not be parsed; message includes the offending line number."""


class SchemaError(DoqualError):
    """Parsed content violates a structural contract (duplicate id, unknown tag,
    out-of-range value, missing required field)."""


class ParameterError(DoqualError):
    """An argument is outside its documented domain."""


class ConvergenceError(DoqualError):
    """An iterative solver hit its iteration cap before reaching tolerance."""


class TrainingError(DoqualError):
    """Training data cannot produce a model (e.g. a single-class label vector)."""


class DataError(DoqualError):
    """Numeric data is unusable (non-finite entries, dimension mismatch)."""


class BalanceError(DoqualError):
    """Class rebalancing is impossible on this dataset."""


class FoldError(DoqualError):
    """Cross-validation folds cannot be built as requested."""


class ConfigurationError(DoqualError):
    """A feature configuration references a resource that was not supplied."""
