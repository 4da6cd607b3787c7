"""Exception types shared across the package."""


class CycleRamseyError(Exception):
    """Base class for all errors raised by this package."""


class DisconnectedInput(CycleRamseyError):
    pass


class OracleTooLarge(CycleRamseyError):
    """An exponential oracle was asked to run above its size cap."""


class PreconditionViolated(CycleRamseyError):
    pass


class HypothesisViolated(CycleRamseyError):
    """The input violates a stated hypothesis.

    ``witness`` optionally carries an object demonstrating the failure,
    e.g. a low-degree vertex or an oversized independent set.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotFound(CycleRamseyError):
    """A search that is guaranteed to succeed under the hypotheses came back empty."""


class NoChord(CycleRamseyError):
    """Chopping hit a chordless prefix; ``independent_set`` proves alpha was too small."""

    def __init__(self, message, independent_set):
        super().__init__(message)
        self.independent_set = frozenset(independent_set)


class NotCovered(CycleRamseyError):
    pass


class OutOfRange(CycleRamseyError):
    pass


class BadFamily(CycleRamseyError):
    pass


class SawNotFound(CycleRamseyError):
    pass


class PairNotFound(CycleRamseyError):
    pass


class ParseError(CycleRamseyError):
    pass
