"""Exception hierarchy shared across the package.

``ValueError``-derived classes indicate bad inputs (CLI exit code 2);
``RuntimeError``-derived ones indicate failures during otherwise valid
runs (CLI exit code 3).
"""


class GraspSynthError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(GraspSynthError, ValueError):
    """An argument violates a documented precondition."""


class InvalidStateError(GraspSynthError, RuntimeError):
    """A model or intermediate result is unusable (e.g. singular block)."""


class EmptyDemonstrationError(GraspSynthError, RuntimeError):
    """No contact samples were found for a link during demonstration."""


class NoAffinityError(GraspSynthError, RuntimeError):
    """All query-sample weights vanished for a link on the query object."""


class UnsupportedGripperError(GraspSynthError, ValueError):
    """An operation requires gripper features the model does not declare."""


class DegenerateVarianceError(GraspSynthError, RuntimeError):
    """Paired differences have zero variance but nonzero mean."""


class InvalidStartError(GraspSynthError, ValueError):
    """Refinement was started from a candidate with -inf objective."""
