"""Exception taxonomy, mirrored by the CLI exit codes."""

__all__ = ["CertificationError", "DatumError", "GraphError", "HypothesisError"]


class GraphError(ValueError):
    """A graph violates the Serre-formalism invariants (exit code 1)."""


class DatumError(ValueError):
    """A tower datum or input file is malformed (exit code 1)."""


class HypothesisError(RuntimeError):
    """A mathematical hypothesis of the requested computation fails (exit code 2)."""


class CertificationError(RuntimeError):
    """An exact cross-check or certification did not hold (exit code 3)."""
