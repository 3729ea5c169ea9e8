"""Exception types shared across the package."""


class HyperSumError(Exception):
    """Base class for all package errors."""


class InvalidDimensionError(HyperSumError, ValueError):
    """Hypervector dimension must be a positive integer."""


class DimensionMismatchError(HyperSumError, ValueError):
    """Vectors of different dimensions were combined."""


class EmptyBundleError(HyperSumError, ValueError):
    """Majority vote over an empty sequence of vectors."""


class VocabularyExhaustedError(HyperSumError, ValueError):
    """A fixed-capacity codebook ran out of encoding space."""

    def __init__(self, symbol: str, capacity: int):
        self.symbol = symbol
        self.capacity = capacity
        super().__init__(
            f"codebook capacity {capacity} exhausted; cannot encode symbol {symbol!r}"
        )


class InvalidLevelsError(HyperSumError, ValueError):
    """Level-style codebooks need at least two levels."""


class EmptyUtteranceError(HyperSumError, ValueError):
    """An utterance with no tokens cannot be embedded."""


class EmptyDocumentError(HyperSumError, ValueError):
    """A document with no non-blank utterances cannot be processed."""


class InvalidKError(HyperSumError, ValueError):
    """Cluster count must be at least 1."""


class InfeasibleKError(HyperSumError, ValueError):
    """Cluster count exceeds the number of available points."""


class MissingReferenceError(HyperSumError, ValueError):
    """Scoring requested for a document without a reference summary."""


class CorpusParseError(HyperSumError, ValueError):
    """A corpus record could not be parsed; carries the line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class CorpusValidationError(HyperSumError, ValueError):
    """A parsed corpus record violates a structural constraint."""

    def __init__(self, doc_id: str, message: str):
        self.doc_id = doc_id
        super().__init__(f"document {doc_id!r}: {message}")


class OracleBudgetError(HyperSumError, ValueError):
    """A brute-force oracle was asked for more work than its budget allows."""
