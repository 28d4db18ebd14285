"""Exception types shared across the package."""


class VerificationError(Exception):
    """An exact identity that should hold failed; message carries the first witness."""


class BFileError(ValueError):
    """A b-file could not be parsed; message names the offending line."""
