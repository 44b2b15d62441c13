class UnsupportedFieldError(Exception):
    """Raised when a field lies outside the arithmetic this package can do (e.g. h > 2)."""

    pass
