"""Exception types raised by the toolkit.

Everything derives from :class:`LoopError` so callers (the CLI in
particular) can catch one class and map it to a usage/parse exit code.
"""


class LoopError(ValueError):
    pass


class BadEntry(LoopError):
    pass


class NotLatin(LoopError):
    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class NoIdentity(LoopError):
    pass


class ParseError(LoopError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IndexOutOfRange(LoopError, IndexError):
    pass


class NoTwoSidedInverse(LoopError):
    def __init__(self, element):
        super().__init__(f"element {element} has distinct left and right inverses")
        self.element = element


class DegreeMismatch(LoopError):
    pass


class NotABijection(LoopError):
    pass


class OrderTooLarge(LoopError):
    pass


class HypothesisNotMet(LoopError):
    pass


class UnknownTheorem(LoopError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class UnknownProperty(LoopError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)
