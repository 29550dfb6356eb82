"""Exception hierarchy shared by all modules."""


class NearFreeError(Exception):
    """Base class for every error raised by the package."""


class UndefinedInputError(NearFreeError, ValueError):
    pass


class UnsupportedDegreeError(NearFreeError, ValueError):
    pass


class RefinementError(NearFreeError, ArithmeticError):
    """Root isolation or box refinement did not converge within its depth cap."""


class InvalidArrangement(NearFreeError, ValueError):
    pass


class DegenerateConic(InvalidArrangement):
    pass


class RepeatedComponent(InvalidArrangement):
    pass


class EmptyArrangement(InvalidArrangement):
    pass


class NumericalDegeneracy(NearFreeError, ArithmeticError):
    """No admissible projection was found for a conic-conic pair."""


class UnsupportedSingularity(NearFreeError):
    """A singular point outside {node, tacnode, ordinary triple point}."""

    def __init__(self, message, components=(), diagnosis=""):
        super().__init__(message)
        self.components = tuple(components)
        self.diagnosis = diagnosis


class StabilizationFailure(NearFreeError, ArithmeticError):
    pass
