"""Error types shared across the library."""


class VacmomError(Exception):
    """Base class for all library-specific errors."""


class DegenerateBoost(VacmomError):
    """Boost denominator 1 + n*beta is not positive, transform undefined."""


class DegenerateGrid(VacmomError):
    """Expansion beta grid unusable: too few points, unsorted, or out of range."""


class DegenerateProbe(VacmomError):
    """Finite difference probe step outside the allowed range."""


class DivisionDegenerate(VacmomError):
    """Requested ratio has a vanishing denominator."""


class EmptyModeSet(VacmomError):
    """No propagating modes survive the cutoff filter."""


class ConfigError(VacmomError):
    """Run configuration failed validation; message carries the field path."""
