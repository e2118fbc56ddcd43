"""Exception hierarchy for bt1kit.

Every error raised by the library derives from :class:`BT1Error`, which is a
``ValueError`` so that callers validating user input can catch one thing.
"""


class BT1Error(ValueError):
    """Base class for all bt1kit errors."""


class EmptyWord(BT1Error):
    pass


class NotMixed(BT1Error):
    """A word of the form f^m or v^n was given where both letters are needed."""


class NotPrimitive(BT1Error):
    pass


class NotPrimitiveMultiset(BT1Error):
    pass


class UnknownElement(BT1Error):
    pass


class ParseError(BT1Error):
    pass


class InvalidPermutation(BT1Error):
    pass


class InvalidModule(BT1Error):
    pass


class ChainNotTotal(RuntimeError):
    """The subspace closure produced two incomparable subspaces.

    This can only happen through a bug, so it is deliberately not a
    ``BT1Error``: callers should not catch it as bad input.
    """


class InvalidCanonicalType(BT1Error):
    pass


class NotSelfDual(BT1Error):
    pass


class InvalidElementarySequence(BT1Error):
    pass


class InconsistentMultiplicities(BT1Error):
    pass


class NotCoprime(BT1Error):
    pass


class NotPrime(BT1Error):
    pass


class UseP2Module(BT1Error):
    """Closed form only valid for odd p; use the p = 2 routines instead."""


class RationalCurve(BT1Error):
    """d <= 2: the curve has genus 0."""
