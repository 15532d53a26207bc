"""Exception types raised by the library."""


class WlabError(Exception):
    """Base class for library errors."""


class PresentationError(WlabError, ValueError):
    """Malformed presentation text or word."""


class CosetLimitExceeded(WlabError):
    """Coset enumeration hit the live-coset bound before closing."""


class NonFaithfulAction(WlabError):
    """A coset action was required to be faithful but has a nontrivial kernel."""


class CapExceeded(WlabError):
    """Group too large for exhaustive subgroup enumeration."""


class SplittingFailure(WlabError):
    """Class matrices failed to split the centre into one-dimensional eigenspaces."""


class NonIntegerMultiplicity(WlabError):
    """A class function decomposed with a non-integer or negative coefficient."""


class NotTransitive(WlabError):
    """A predicate that needs a transitive action was given an intransitive one."""


class ConsistencyError(WlabError):
    """Two independent computations of the same quantity disagree."""
