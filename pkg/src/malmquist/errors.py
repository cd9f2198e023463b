"""Exception types shared across the package."""


class MalmquistError(Exception):
    pass


class ZeroDenominator(MalmquistError, ZeroDivisionError):
    pass


class CommonFactor(MalmquistError):
    """P and Q share a factor, so they do not represent R in lowest terms."""


class SingularSystem(MalmquistError):
    pass


class HypothesisViolated(MalmquistError):
    """deg_w(R) is below the threshold where the finiteness bounds apply."""


class BudgetExhausted(MalmquistError):
    """A Groebner computation ran out of steps or wall-clock time.

    ``basis`` and ``pairs_left`` hold the partial state at the moment of exhaustion.
    """

    def __init__(self, reason: str, basis=None, pairs_left: int = 0):
        super().__init__(reason)
        self.reason = reason
        self.basis = basis or []
        self.pairs_left = pairs_left


class UndefinedComposition(MalmquistError):
    """Q(f1, f0) vanishes identically, so R(z, f(z)) is not defined."""


class ParseError(MalmquistError, SyntaxError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position


class NonIntegerExponent(ParseError):
    pass


class DivisionByZeroExpression(ParseError):
    pass
