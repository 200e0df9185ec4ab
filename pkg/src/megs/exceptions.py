"""Exception types shared across the package."""


class CapacityError(ValueError):
    """A requested object exceeds the configured dense-matrix capacity.

    Raised instead of attempting an allocation that the dense backend was
    never meant to handle; see :func:`megs.core.dense_cap`.
    """
