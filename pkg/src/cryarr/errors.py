"""Exception types shared across the package."""


class CryarrError(Exception):
    """Base class for all package-specific errors."""


class SingularMatrixError(CryarrError, ValueError):
    """A matrix inversion or dual-basis computation met a singular input."""


class NonSimplicialError(CryarrError):
    """A chamber of the arrangement is not an open simplicial cone."""

    def __init__(self, signs, ray_count):
        self.signs = signs
        self.ray_count = ray_count
        super().__init__(f"chamber {signs} has {ray_count} extreme rays")


class NotESequenceError(CryarrError):
    """A vector sequence violates the defining recursion of the rank-2 family."""


class ExtremeRootsNotUnimodularError(CryarrError):
    """The two extreme rank-2 roots do not form a basis of the integer lattice."""


class NotClosedError(CryarrError):
    """A reflection image left the set of sign-definite integer vectors."""

    def __init__(self, root, image):
        self.root = root
        self.image = image
        super().__init__(f"reflection of {root} gives mixed-sign vector {image}")


class ClosureOverflowError(CryarrError):
    """The reflection closure exceeded the object cap (input not finite/crystallographic)."""


class CycleBrokenError(CryarrError):
    """A chamber walk around a rank-2 localization failed to close up."""


class MissingRootError(CryarrError):
    """A vector required to be a root by a verified statement is absent."""

    def __init__(self, vector):
        self.vector = vector
        super().__init__(f"expected root {vector} is missing")


class HypothesisFailedError(CryarrError):
    """A statement check was invoked on data violating one of its hypotheses."""

    def __init__(self, hypothesis):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis not satisfied: {hypothesis}")


class PreconditionFailedError(CryarrError):
    """A computation was requested on data outside its stated precondition."""
