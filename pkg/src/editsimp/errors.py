"""Exception hierarchy shared across the engine."""


class SimplificationError(Exception):
    """Base class for every error raised by editsimp."""


class ValidationError(SimplificationError, ValueError):
    """Input data violates a documented precondition."""


class EmptyInputError(ValidationError):
    """A sentence (or corpus) is empty after trimming."""


class ConfigError(ValidationError):
    """A configuration file or value is invalid."""

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key


class BackendError(SimplificationError, RuntimeError):
    """A model backend failed on a particular sentence."""

    def __init__(self, message, sentence_id=None):
        super().__init__(message)
        self.sentence_id = sentence_id


class UnsatisfiableConstraintError(BackendError):
    """The paraphraser cannot produce output avoiding every negative constraint."""


class ContractViolation(SimplificationError):
    """A backend returned data that breaks its documented contract."""
