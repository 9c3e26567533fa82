"""Exception types shared across the package."""


class CatparkError(Exception):
    """Base class for all package-specific errors."""


class EnumerationCapError(CatparkError):
    """Projected enumeration size exceeds the configured object cap."""

    def __init__(self, projected, cap):
        super().__init__(
            f"enumeration would yield {projected} objects, exceeding the cap of {cap}"
        )
        self.projected = projected
        self.cap = cap


class NonMembershipError(CatparkError):
    """Input is not a member of the domain an inverse map expects."""


class InvalidCompositionError(CatparkError):
    """Component tuple does not recompose into a valid distribution."""


class HBasisError(CatparkError):
    """Polynomial is not a combination of complete homogeneous polynomials."""
