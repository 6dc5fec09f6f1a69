"""Exceptions raised by the kernel."""


class SemigroupError(Exception):
    pass


class NotInCarrier(SemigroupError):
    def __init__(self, semigroup, element):
        super().__init__(f"{element!s} is not an element of {semigroup}")
        self.semigroup = semigroup
        self.element = element


class NonFiniteDecomposition(SemigroupError):
    """The semigroup has no decomposer; its coproduct cannot be formed."""

    def __init__(self, semigroup):
        super().__init__(
            f"NonFiniteDecomposition: {semigroup} is not a finite decomposition "
            "semigroup (no decomposer available)")
        self.semigroup = semigroup


class NoNeutral(SemigroupError):
    pass


class CapabilityMissing(SemigroupError):
    pass


class TableError(SemigroupError):
    """Malformed or non-associative Cayley table."""


class MixedDomains(SemigroupError):
    pass


class LetterDomainError(ValueError):
    pass


class DivergentError(ValueError):
    pass


class LemmaViolation(AssertionError):
    """A claim of the structure theory failed on a concrete witness."""


class NonEmptyTerminal(SemigroupError):
    pass


class DDLError(SemigroupError):
    pass
