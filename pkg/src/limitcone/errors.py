"""Exception hierarchy shared by all modules."""


class LimitConeError(Exception):
    """Base class; ``code`` is the machine-readable name used by the CLI."""

    @property
    def code(self):
        return type(self).__name__


# numfield
class NotSquarefree(LimitConeError, ValueError):
    pass


class NotTotallyReal(LimitConeError, ValueError):
    pass


class NotIrreducible(LimitConeError, ValueError):
    pass


class DivisionByZero(LimitConeError, ZeroDivisionError):
    pass


class FieldMismatch(LimitConeError, ValueError):
    pass


class BadIndex(LimitConeError, IndexError):
    pass


# moebius
class NotHyperbolic(LimitConeError, ValueError):
    pass


class NoTranslationDirection(LimitConeError, ValueError):
    pass


class GeometryDegenerate(LimitConeError):
    pass


class CommonFixedPoint(LimitConeError):
    pass


class NotFound(LimitConeError):
    def __init__(self, budget, message=None):
        self.budget = budget
        super().__init__(message or f"search exhausted (budget {budget})")


# groups
class BadQ(LimitConeError, ValueError):
    pass


class ConstructionInvalid(LimitConeError):
    pass


class BadSpec(LimitConeError, ValueError):
    pass


# limits
class EmptyCloud(LimitConeError, ValueError):
    pass


class DegreeOne(LimitConeError, ValueError):
    pass


class EmbeddingStillElliptic(LimitConeError):
    def __init__(self, n, index):
        self.n = n
        self.index = index
        super().__init__(f"embedding {index} of T_{n} is not yet hyperbolic")


# cli / svg
class EmptyData(LimitConeError, ValueError):
    pass


class BadFlag(LimitConeError, ValueError):
    pass
