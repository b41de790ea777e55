class RangeError(ValueError):
    """A parameter lies outside the supported range (e.g. n > 16)."""


class CapacityError(Exception):
    """Input exceeds the hard size cap of an exhaustive routine."""


class DisconnectedGraphError(ValueError):
    """Operation needs a connected graph."""


class UnknownClaimError(KeyError):
    """No registered claim has the requested id."""
