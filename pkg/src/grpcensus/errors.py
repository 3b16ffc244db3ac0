class GroupError(Exception):
    """Base class for every error raised by grpcensus."""


class InvalidTable(GroupError):
    """A multiplication table violates one of the group axioms."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotClosed(InvalidTable):
    pass


class NoIdentityAtZero(InvalidTable):
    pass


class NotLatinSquare(InvalidTable):
    pass


class NoInverse(InvalidTable):
    pass


class NotAssociative(InvalidTable):
    pass


class CapExceeded(GroupError):
    pass


class NotSubgroup(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotCentral(GroupError):
    pass


class NotIsomorphism(GroupError):
    pass


class NotAHomomorphism(GroupError):
    pass


class NotBijective(GroupError):
    pass


class GeneratorsDontGenerate(GroupError):
    pass


class ActionNotHomomorphism(GroupError):
    pass


class SpecError(GroupError):
    """Problem with a group-spec expression or corpus manifest."""


class SpecSyntaxError(SpecError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownAtom(SpecError):
    pass


class BadArity(SpecError):
    pass
