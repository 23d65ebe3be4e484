class ResourceLimitError(RuntimeError):
    """An enumeration was asked to exceed its configured size bound."""


class NotSymmetricError(ValueError):
    """Schur extraction was given a non-symmetric function."""
