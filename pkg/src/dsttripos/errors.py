"""Exception hierarchy shared by every module of the package."""


class TriposError(Exception):
    """Base class for all errors raised by dsttripos."""


class NotAGraph(TriposError):
    pass


class Undefined(TriposError):
    pass


class NotASet(TriposError):
    pass


class Malformed(TriposError):
    pass


def _show(v):
    from .values import show_safe  # values imports this module
    return show_safe(v)


class NotUpwardClosed(TriposError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"relation not upward closed, witness {_show(witness)}")


class OutOfCarrier(TriposError):
    def __init__(self, entry, message=None):
        self.entry = entry
        super().__init__(message or f"relation entry outside the carriers: {_show(entry)}")


class IndexMismatch(TriposError):
    pass


class DomainMismatch(TriposError):
    pass


class CheckFailed(TriposError):
    def __init__(self, message, counterexample=None):
        self.counterexample = counterexample
        super().__init__(message)


class BudgetExceeded(TriposError):
    def __init__(self, size, budget, what="search space"):
        self.size = size
        self.budget = budget
        super().__init__(f"{what} has size {size}, budget is {budget}")


class NotAPullback(TriposError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class IllTyped(TriposError):
    def __init__(self, node, reason):
        self.node = node
        self.reason = reason
        super().__init__(f"{type(node).__name__}: {reason}")


class ParseError(TriposError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        self.message = message
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(where + message)
