"""Exception types shared across the toolkit."""


class FormatError(ValueError):
    """Malformed textual input (sequence text, card code, crib JSON)."""


class ResourceGuardError(ValueError):
    """A size guard was exceeded (window length, graph rank, census length)."""


class InfeasibleError(ValueError):
    """No sequence exists for the requested parameters."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason
