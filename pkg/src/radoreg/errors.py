"""Exception types shared across the package."""


class RadoError(ValueError):
    """Base class for every error raised by radoreg."""


class InvalidEquationError(RadoError):
    pass


class ArityError(RadoError):
    pass


class NotIntegralError(RadoError):
    pass


class NonpositiveRatioError(RadoError):
    pass


class NotLinkedError(RadoError):
    pass


class NotARatioError(RadoError):
    pass


class IncompleteColoringError(RadoError):
    pass


class PaletteError(RadoError):
    pass


class InvalidColoringError(RadoError):
    pass


class MultipleRowError(RadoError):
    """An inequality row is a nonzero multiple of the equation itself."""

    def __init__(self, row, message=None):
        self.row = tuple(row)
        super().__init__(message or f"inequality row {list(self.row)} is a multiple of the equation")


class InfeasibleError(RadoError):
    pass


class NonpositiveEntryError(RadoError):
    pass


class CertificateSchemaError(RadoError):
    pass
