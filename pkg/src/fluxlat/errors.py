"""Exception hierarchy.

The CLI maps these onto exit codes: ConfigError -> 2, NumericalError -> 3,
StorageError -> 4.
"""


class FluxlatError(Exception):
    """Base class for all package errors."""


class ConfigError(FluxlatError):
    """Invalid parameters, malformed configuration, or refused resource use."""


class NumericalError(FluxlatError):
    """A numerical procedure failed (non-PD matrix, divergence, overlap loss)."""


class ConvergenceError(NumericalError):
    """A diagonalization or fit did not converge to the requested tolerance."""


class OverlapError(NumericalError):
    """Reweighting denominator too small for a reliable estimate."""


class StorageError(FluxlatError):
    """I/O failure or corrupt ensemble/manifest data."""
