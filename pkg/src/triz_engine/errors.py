"""Exception hierarchy shared across the engine."""


class TrizEngineError(Exception):
    """Base class for all engine errors."""


# -- knowledge base ----------------------------------------------------------

class MissingFile(TrizEngineError):
    pass


class SchemaViolation(TrizEngineError):
    pass


class InvariantViolation(TrizEngineError):
    pass


class IndexOutOfRange(TrizEngineError):
    """Contradiction indexes outside 1..39."""


class EmptyCell(TrizEngineError):
    """Matrix cell holds no principles."""


class UnknownPrinciple(TrizEngineError):
    """Matrix cell references an index missing from the principle table."""


# -- llm gateway -------------------------------------------------------------

class GatewayError(TrizEngineError):
    pass


class AuthError(GatewayError):
    pass


class Timeout(GatewayError):
    pass


class RateLimited(GatewayError):
    pass


class TranscriptMiss(GatewayError):
    """Replay mode has no recorded exchange for the request digest."""

    def __init__(self, digest: str):
        super().__init__(f"no recorded exchange for request digest {digest}")
        self.digest = digest


class StructureError(GatewayError):
    """Structured output failed to parse or validate after the corrective retry."""


# -- pipeline ----------------------------------------------------------------

class PipelineError(TrizEngineError):
    """A stage failed; carries the partial run record."""

    def __init__(self, message: str, failed_run=None):
        super().__init__(message)
        self.failed_run = failed_run


class EmptyDistillation(TrizEngineError):
    pass


class DomainError(TrizEngineError):
    pass


class MissingPrincipleCoverage(TrizEngineError):
    pass


# -- evaluation --------------------------------------------------------------

class DuplicateId(TrizEngineError):
    pass


class EmptyDistribution(TrizEngineError):
    pass


# -- thermal simulation ------------------------------------------------------

class ZeroPumpEnergy(TrizEngineError):
    pass


class StabilityViolation(TrizEngineError):
    pass


class AssemblyError(TrizEngineError):
    pass


# -- service -----------------------------------------------------------------

class ValidationError(TrizEngineError):
    pass


class QueueFull(TrizEngineError):
    pass


class NotFound(TrizEngineError):
    pass
