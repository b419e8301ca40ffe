"""Exception types shared across the package."""


class AtomicDistributionError(ValueError):
    """A pointwise density, wavefunction or entropy was requested for an
    atomic (delta-like) law that has none."""


class ConvergenceError(RuntimeError):
    """A numerical routine failed to reach its target tolerance."""

    def __init__(self, message, achieved=None, requested=None):
        if achieved is not None and requested is not None:
            message = f"{message} (achieved {achieved:.3e}, requested {requested:.3e})"
        super().__init__(message)
        self.achieved = achieved
        self.requested = requested


class CoverageError(ValueError):
    """A phase-space grid does not cover the state support."""


class UndefinedStateError(ValueError):
    """State trace too small for trace-normalized quantities."""


class ScenarioError(ValueError):
    """Invalid scenario file or CLI parameter combination."""
