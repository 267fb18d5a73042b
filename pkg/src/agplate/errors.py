"""Error types shared across the solver modules."""


class NonConvergent(RuntimeError):
    """An iterative evaluation hit its iteration cap before meeting tolerance."""


class NoRootFound(RuntimeError):
    """A root scan exhausted its ceiling without finding a sign change.

    Raised instead of returning a sentinel: a missing root signals a scan-grid
    or parameter problem the caller has to see.
    """
