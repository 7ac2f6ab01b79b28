"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class EstimationError(ValueError):
    """The shape estimator is undefined for the given sample (mean <= 1)."""


class ConfigError(ValueError):
    """A study configuration file is malformed or references unknown names."""
