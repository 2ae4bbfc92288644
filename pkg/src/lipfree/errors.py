"""Exception hierarchy. Class names double as the CLI's error identifiers."""


class LipfreeError(ValueError):
    """Base class for domain errors raised by the library."""

    def details(self):
        return {}


class DimensionMismatch(LipfreeError):
    pass


class AsymmetricDistance(LipfreeError):
    def __init__(self, i, j):
        super().__init__(f"d({i},{j}) != d({j},{i})")
        self.i, self.j = i, j

    def details(self):
        return {"i": self.i, "j": self.j}


class NonPositiveDistance(LipfreeError):
    def __init__(self, i, j):
        super().__init__(f"distance between distinct points {i} and {j} is not positive")
        self.i, self.j = i, j

    def details(self):
        return {"i": self.i, "j": self.j}


class NonZeroDiagonal(LipfreeError):
    def __init__(self, i):
        super().__init__(f"d({i},{i}) != 0")
        self.i = i

    def details(self):
        return {"i": self.i}


class TriangleViolation(LipfreeError):
    def __init__(self, i, j, k):
        super().__init__(f"d({i},{k}) > d({i},{j}) + d({j},{k})")
        self.i, self.j, self.k = i, j, k

    def details(self):
        return {"i": self.i, "j": self.j, "k": self.k}


class UnknownPoint(LipfreeError):
    pass


class DegeneratePair(LipfreeError):
    pass


class SpaceMismatch(LipfreeError):
    pass


class NonZeroAtBase(LipfreeError):
    pass


class NotARepresentation(LipfreeError):
    pass


class WeightOutOfRange(LipfreeError):
    pass


class NotUnitNorm(LipfreeError):
    pass
