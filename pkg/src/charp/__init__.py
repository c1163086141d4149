"""Computer algebra over F_p for F-singularity checks on commuting varieties."""

__version__ = "0.1.0"
