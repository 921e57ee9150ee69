"""Exception hierarchy shared by all hoplab modules."""


class HoplabError(Exception):
    """Base class for every error raised by this package."""


class InvalidDfaError(HoplabError, ValueError):
    pass


class IncompleteTransition(InvalidDfaError):
    def __init__(self, state, letter):
        super().__init__(f"no transition for state {state} on letter {letter}")
        self.state = state
        self.letter = letter


class IndexOutOfRange(InvalidDfaError):
    def __init__(self, field, value=None):
        msg = f"{field} out of range" if value is None else f"{field} out of range: {value}"
        super().__init__(msg)
        self.field = field
        self.value = value


class DfaFormatError(HoplabError, ValueError):
    """Raised by the text parser; the message starts with the offending line number."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class OrderTooLarge(HoplabError, ValueError):
    pass


class OffsetOutOfRange(HoplabError, ValueError):
    pass


class NotUnary(HoplabError, ValueError):
    pass


class BadLetter(HoplabError, ValueError):
    pass


class UnstablePartition(HoplabError, ValueError):
    pass


class TraceMismatch(HoplabError):
    def __init__(self, index, expected, actual):
        super().__init__(f"decision {index}: trace has {expected}, run reached {actual}")
        self.index = index
        self.expected = expected
        self.actual = actual


class AlphabetMismatch(HoplabError, ValueError):
    pass


class SearchBudgetExceeded(HoplabError):
    """Carries the best result found before the branch cap was hit."""

    def __init__(self, best):
        super().__init__(
            f"search budget exhausted after {best.branch_count} runs "
            f"(best so far: {best.objective})"
        )
        self.best = best


class SizeTooLarge(HoplabError, ValueError):
    pass


class UnreachableState(HoplabError, ValueError):
    def __init__(self, state):
        super().__init__(f"state {state} is not reachable from the start state")
        self.state = state


class NotSimilarBlock(HoplabError, ValueError):
    def __init__(self, block, p, q):
        super().__init__(f"block {block}: states {p} and {q} are not similar")
        self.block = block
        self.p = p
        self.q = q


class LengthExceedsL(HoplabError, ValueError):
    pass
