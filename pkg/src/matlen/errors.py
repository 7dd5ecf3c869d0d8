"""Exception types shared across the package."""


class MatlenError(Exception):
    """Base class for errors raised by this package."""


class ExtensionCapError(MatlenError):
    """A field extension would exceed the configured total-degree cap."""


class SingularMatrixError(MatlenError):
    """An operation required an invertible matrix and got a singular one."""


class ReducibleSetError(MatlenError):
    """The generator set does not generate the full matrix algebra."""


class ScalarInputError(MatlenError):
    """A non-scalar matrix was required."""


class HypothesisFailedError(MatlenError):
    """A stated hypothesis of an operation does not hold for the input."""


class RetryBudgetError(MatlenError):
    """A randomized search exhausted its retry budget."""


class SpanCapError(MatlenError):
    """A span iteration hit its step cap before the sought event occurred."""
