"""Exception hierarchy shared by all modules.

Every domain error carries a short machine-readable ``code`` so the CLI can
emit ``{"error": code, "detail": text}`` uniformly.
"""


class SuturedKitError(Exception):
    code = "error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


# -- abelian ----------------------------------------------------------------

class DeterminantTooLarge(SuturedKitError):
    code = "determinant_too_large"


# -- fox --------------------------------------------------------------------

class InvalidGenerator(SuturedKitError):
    code = "invalid_generator"


class NotGeometricallyBalanced(SuturedKitError):
    code = "not_geometrically_balanced"


# -- diagram ----------------------------------------------------------------

class InvalidDiagram(SuturedKitError):
    code = "invalid_diagram"


class NotBalanced(SuturedKitError):
    code = "not_balanced"


class NotAGenerator(SuturedKitError):
    code = "not_a_generator"


# -- polytope ---------------------------------------------------------------

class DimensionTooLarge(SuturedKitError):
    code = "dimension_too_large"


class BadDimension(SuturedKitError):
    code = "bad_dimension"


class EmptySupport(SuturedKitError):
    code = "empty_support"


class NonPositiveRank(SuturedKitError):
    code = "non_positive_rank"


# -- maslov -----------------------------------------------------------------

class NotUnitary(SuturedKitError):
    code = "not_unitary"


class LoopNotClosed(SuturedKitError):
    code = "loop_not_closed"


class LoopNotClosedInGroup(SuturedKitError):
    code = "loop_not_closed_in_group"


class SamplingTooCoarse(SuturedKitError):
    code = "sampling_too_coarse"


class NotSymmetric(SuturedKitError):
    code = "not_symmetric"


class EndpointSingular(SuturedKitError):
    code = "endpoint_singular"


class CrossingCountMismatch(SuturedKitError):
    code = "crossing_count_mismatch"


# -- oracle -----------------------------------------------------------------

class OddSutureCount(SuturedKitError):
    code = "odd_suture_count"


class NonCoprime(SuturedKitError):
    code = "non_coprime"
