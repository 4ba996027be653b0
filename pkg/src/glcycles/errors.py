"""Error taxonomy shared by the library and the CLI.

The CLI maps these onto exit codes: ValidationError -> 2,
BoundExceeded -> 3, PropertyViolation -> 4.
"""


class GlcyclesError(Exception):
    """Base class for all library errors."""


class ValidationError(GlcyclesError):
    """Malformed input or a violated operation precondition."""


class BoundExceeded(GlcyclesError):
    """An enumeration or solver work bound was exceeded.

    The message names the bound so callers can raise it deliberately.
    """


class PropertyViolation(GlcyclesError):
    """A verified-construction audit failed.

    Raised when a postcondition that the underlying mathematics guarantees
    does not hold; carries the failing stage name and a witness where one
    exists.
    """

    def __init__(self, stage: str, detail: str = ""):
        self.stage = stage
        self.detail = detail
        super().__init__(f"{stage}: {detail}" if detail else stage)
