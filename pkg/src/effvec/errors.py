"""Exception hierarchy for effvec."""


class EffvecError(Exception):
    """Base class for all effvec errors."""


class BadShape(EffvecError):
    pass


class NonPositiveEntry(EffvecError):
    pass


class ReciprocityViolation(EffvecError):
    pass


class DimensionMismatch(EffvecError):
    pass


class EmptySubset(EffvecError):
    pass


class SubvectorNotEfficient(EffvecError):
    pass


class InvalidWitness(EffvecError):
    pass


class HeadNotEfficient(EffvecError):
    pass


class NoConvergence(EffvecError):
    pass


class NotNormalized(EffvecError):
    pass


class StructureViolation(EffvecError):
    pass


class TheoremViolation(EffvecError):
    """A mathematically guaranteed property failed; signals an implementation bug."""


class CharacterizationMismatch(EffvecError):
    """Two routes that must agree produced different verdicts."""


class GridTooLarge(EffvecError):
    pass


class InvalidSpec(EffvecError):
    pass


class ParseError(EffvecError):
    pass
