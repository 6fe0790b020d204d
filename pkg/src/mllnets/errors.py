"""Exception hierarchy shared by all modules."""


class MLLError(Exception):
    """Base class for all toolkit errors."""


class StructureError(MLLError):
    """A structure file or link set violates the well-formedness rules.

    ``line`` is the 1-based line number in the source file when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StructureSyntaxError(StructureError):
    pass


class DuplicateIndexError(StructureError):
    pass


class MultipleConclusionsError(DuplicateIndexError):
    # with indices introduced only by link conclusions, a repeated index
    # and a doubly-concluded occurrence are the same violation
    pass


class DanglingPremiseError(StructureError):
    pass


class PremiseReuseError(StructureError):
    pass


class UnknownIndexError(MLLError):
    pass


class UnknownLinkError(MLLError):
    pass


class LinkKindMismatchError(MLLError):
    pass


class SwitchingMismatchError(MLLError):
    pass


class NotAProofNetError(MLLError):
    pass


class HasParConclusionError(MLLError):
    pass


class NoTensorConclusionError(MLLError):
    pass


class NotSameFamilyError(MLLError):
    pass


class IsoLimitExceededError(MLLError):
    """Isomorphism search exceeded its configured state budget."""


class LengthMismatchError(MLLError):
    pass


class TooFewCodewordsError(MLLError):
    pass
