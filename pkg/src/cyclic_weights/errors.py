"""Exception types shared across the library."""


class LengthMismatchError(ValueError):
    """Tuple arguments disagree about the slot count f."""


class DomainError(ValueError):
    """A value lies outside the admissible domain of the operation."""


class ResidueDegreeError(DomainError):
    """Raised by constructions that need residue degree f > 1.

    With f = 1 there is no room for a generating tuple: the would-be chain
    collapses and the only candidate cyclic module is a full principal
    series over the prime field, so none of the chain machinery applies.
    """


class TwistIntegralityError(ArithmeticError):
    """The determinant-twist half sum came out odd.

    Signals a polynomial tuple outside the set reachable from the seed;
    for reachable tuples the sum is always even.
    """
