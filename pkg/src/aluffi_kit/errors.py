"""Exceptions raised by the library.

The command line maps every class to an exit code: syntax and ring problems
exit 1, violated preconditions exit 2 and resource limits exit 3.
"""


class AluffiKitError(Exception):
    exit_code = 1


class PolynomialSyntaxError(AluffiKitError, ValueError):
    def __init__(self, text, offset, reason="syntax error"):
        self.text = text
        self.offset = offset
        self.reason = reason
        super().__init__(f"{reason} at offset {offset} in {text!r}")

    def __reduce__(self):
        return self.__class__, (self.text, self.offset, self.reason)


class UnknownVariableError(AluffiKitError, ValueError):
    def __init__(self, name, offset=None):
        self.name = name
        self.offset = offset
        where = "" if offset is None else f" at offset {offset}"
        super().__init__(f"unknown variable {name!r}{where}")

    def __reduce__(self):
        return self.__class__, (self.name, self.offset)


class RingMismatchError(AluffiKitError, ValueError):
    pass


class PreconditionError(AluffiKitError, ValueError):
    exit_code = 2


class ZeroPolynomialError(PreconditionError):
    pass


class NotHomogeneousError(PreconditionError):
    pass


class NameCollisionError(PreconditionError):
    pass


class NotZeroDimensionalError(PreconditionError):
    pass


class PointNotOnVarietyError(PreconditionError):
    pass


class NotReducedError(PreconditionError):
    pass


class NonIsolatedSingularityError(PreconditionError):
    pass


class SmoothPointError(PreconditionError):
    pass


class ResourceLimitExceeded(AluffiKitError, RuntimeError):
    exit_code = 3

    def __init__(self, what, value, limit):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} reached {value} (limit {limit})")

    def __reduce__(self):
        return self.__class__, (self.what, self.value, self.limit)


class InconsistentVerdictError(AssertionError):
    """Two procedures that must agree returned different answers."""
