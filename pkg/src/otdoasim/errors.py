"""Exception hierarchy shared by all simulator modules."""


class OtdoaSimError(Exception):
    """Base class for all simulator errors."""


class DomainViolation(OtdoaSimError):
    """A configuration field is outside its allowed value set."""

    def __init__(self, field, value, allowed):
        self.field = field
        self.value = value
        self.allowed = allowed
        super().__init__(f"{field}={value!r} not in allowed set {allowed}")


class MissingPart(OtdoaSimError):
    """NPRS configured with neither Part A nor Part B."""


class GeometryViolation(OtdoaSimError):
    """A structural constraint is violated (band outside carrier, occasion longer than its interval, ...)."""


class PartANotInvalid(OtdoaSimError):
    """A Part-A NPRS subframe is marked valid in the valid-subframe bitmap."""


class RasterMismatch(OtdoaSimError):
    """Grids or sample rates do not share one carrier raster."""


class NoScheduledSubframes(OtdoaSimError):
    """No transmitted PRS subframe falls inside the measurement window."""


class ReferenceNotDetected(OtdoaSimError):
    """The reference cell produced no usable TOA."""


class InsufficientMeasurements(OtdoaSimError):
    """Fewer RSTD measurements than a 2-D fix requires."""


class EmptyCdf(OtdoaSimError):
    """CDF requested over an empty error sample."""


class ProtocolError(OtdoaSimError):
    """LPP message received out of phase order."""

    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected}, got {got}")


class DeadlineExceeded(OtdoaSimError):
    """Location information arrived after the response deadline."""


class MalformedMessage(OtdoaSimError):
    """LPP byte stream cannot be decoded."""

    def __init__(self, offset, reason):
        self.offset = offset
        self.reason = reason
        super().__init__(f"malformed message at byte {offset}: {reason}")


class ScenarioError(OtdoaSimError):
    """Scenario file cannot be parsed; carries the offending line number."""

    def __init__(self, line_no, reason):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")
