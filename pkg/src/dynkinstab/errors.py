"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: invalid input -> 1, non-generic
path -> 2, invariant violation -> 3.
"""


class DynkinStabError(Exception):
    exit_code = 1


class InvalidInputError(DynkinStabError, ValueError):
    exit_code = 1


class NonGenericPathError(DynkinStabError):
    """A path hits a non-regular point, a coincident event or a wall vertex."""

    exit_code = 2


class NonGenericEndpointError(NonGenericPathError):
    exit_code = 2


class OutOfModelError(NonGenericPathError):
    """The path leaves the region reachable by finitely many tilts.

    For affine diagrams this happens as soon as Im Z(delta) stops being
    positive: walls accumulate and no finite tilting chain follows the path.
    """

    exit_code = 2


class InvariantViolation(DynkinStabError, AssertionError):
    """Internal consistency check failed. Always a bug."""

    exit_code = 3
