"""Exception types raised across the package.

Every domain error carries enough data to explain itself; the CLI prints the
class name and exits with status 1.
"""


class OrbitlinError(Exception):
    """Base class for all domain errors."""


class UnknownAtom(OrbitlinError, KeyError):
    def __init__(self, atom):
        super().__init__(atom)
        self.atom = atom

    def __str__(self):
        return f"atom {self.atom!r} is not registered"


class ForbiddenSubstructure(OrbitlinError):
    def __init__(self, structure_index, embedding):
        super().__init__(structure_index, embedding)
        self.structure_index = structure_index
        self.embedding = embedding

    def __str__(self):
        return f"forbidden structure #{self.structure_index} embeds via {self.embedding}"


class InconsistentOrder(OrbitlinError):
    pass


class NotTypePreserving(OrbitlinError):
    def __init__(self, witness):
        super().__init__(witness)
        self.witness = witness

    def __str__(self):
        return f"renaming changes the relation profile of {self.witness}"


class InvalidStructure(OrbitlinError, ValueError):
    pass


class BadIndexSet(OrbitlinError, ValueError):
    pass


class NotBalanced(OrbitlinError):
    def __init__(self, position):
        super().__init__(position)
        self.position = position

    def __str__(self):
        return f"vector does not vanish after forgetting position {self.position}"


class CoefficientOutsideSpace(OrbitlinError):
    pass


class ZeroVector(OrbitlinError):
    pass


class ClassMismatch(OrbitlinError):
    pass


class UnsupportedWorld(OrbitlinError):
    pass


class TooLarge(OrbitlinError):
    pass


class NotSubbasis(OrbitlinError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotIsometric(OrbitlinError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInjective(OrbitlinError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLinear(OrbitlinError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LetterNotInAlphabet(OrbitlinError):
    pass


class WindowTooSmall(OrbitlinError):
    pass
