"""Exception types.

``TropError`` and its subclasses signal domain violations (the CLI maps them
to exit status 1).  ``InputError`` signals malformed input documents (exit
status 2) and is deliberately not a ``TropError``.
"""


class TropError(Exception):
    """Base class for domain errors."""


class ScalarError(TropError):
    """A scalar does not belong to the field it is used with."""


class FieldMismatchError(TropError):
    pass


class ConeError(TropError):
    """Invalid cone data, or a vector outside a cone where one is required."""


class FaceError(TropError):
    """A cone is not a face of the cone it is paired with."""


class ChartError(TropError):
    """An exponent or point does not belong to the requested affine chart."""


class NonAdditiveError(TropError):
    """A value table is not a monoid homomorphism."""


class FanMapError(TropError):
    """A lattice map does not carry the source fan into the target fan."""


class EmbeddingError(TropError):
    """Invalid embedding data or an operation that cannot be carried out on it."""


class InputError(Exception):
    """Malformed input document.

    ``path`` is the file (or ``"<argv>"``), ``field`` a JSON-pointer-like
    location inside it.
    """

    def __init__(self, path, field, message):
        self.path = path
        self.field = field
        self.message = message
        super().__init__(f"{path}: {field}: {message}")
