"""
Exceptions
==========
Exceptions used by reebindex.

Contradictions found by an audit are *not* exceptions: they are verdicts stored
in the :class:`reebindex.chomology.AuditReport`. The exceptions below signal that
a computation could not be carried out as requested.
"""
#===============================================================================
class ReebIndexError(Exception):
    """
    Base class for reebindex exceptions.

    The common functionality is that they all may store a partial result of the
    computation in self.result, and that they write their message to
    *error_log* (a logger) if one is provided.
    """
    exit_code = 1

    def __init__(self, *args, result=None, error_log=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.result = result
        if error_log:
            error_log.error(str(self))
#===============================================================================
class StructuralError(ReebIndexError, ValueError):
    """
    Raised for malformed input: a non-square or odd dimensional matrix, a path
    whose samples are out of order, a certificate whose lists have the wrong
    length, unparsable JSON, ...
    """
    pass
#===============================================================================
class ResolutionError(ReebIndexError):
    """
    Raised if a sampled path is too coarse to locate its crossings, or if a
    crossing is not regular after perturbation.
    """
    pass
#===============================================================================
class DegenerateEndpoint(ReebIndexError):
    """
    Raised by :func:`reebindex.sympath.cz_index` if the end matrix has
    eigenvalue 1. Use cz_lower or cz_upper for such paths.
    """
    pass
#===============================================================================
class InferenceError(ReebIndexError):
    """
    Raised if the linear system of iterated indices that determines the Bott
    function is inconsistent, or if the solution fails validation.
    """
    pass
#===============================================================================
class AmbiguityError(InferenceError):
    """
    Raised if the linear system determining the Bott function is
    underdetermined. The angles whose values remain free are stored in
    self.unresolved.
    """
    def __init__(self, *args, unresolved=(), **kwargs):
        super().__init__(*args, **kwargs)
        self.unresolved = list(unresolved)
#===============================================================================
class NotRepresentable(ReebIndexError):
    """
    Raised if Bott data cannot be written as a linear term plus a sum of
    rotation floors.
    """
    pass
#===============================================================================
class PreconditionError(ReebIndexError):
    """
    Raised if a hypothesis of an operation is violated, e.g. a nonpositive mean
    index in the common index jump search.
    """
    pass
#===============================================================================
class BoundedSearchFailure(ReebIndexError):
    """
    Raised if a bounded search exhausted its bound. This is not a refutation,
    only a report that no witness was found within the bound.
    """
    exit_code = 2
#===============================================================================
class DataRequired(ReebIndexError):
    """
    Raised if the local homology of a degenerate iterate is needed but was not
    supplied.
    """
    exit_code = 4

    def __init__(self, *args, orbit=None, iterate=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.orbit = orbit
        self.iterate = iterate
#===============================================================================
class SupportViolation(ReebIndexError):
    """
    Raised if supplied local homology has rank in a degree where it must vanish.
    """
    pass
#===============================================================================
class PrecisionError(ReebIndexError):
    """
    Raised if an interval computation cannot decide a comparison, even at the
    maximum precision.
    """
    exit_code = 5
#===============================================================================
class ConstructionError(ReebIndexError):
    """
    Raised if a model fixture fails its self verification.
    """
    pass
#===============================================================================
class UnknownProfile(ReebIndexError):
    """
    Raised for an unknown profile name.
    """
    pass
#===============================================================================
class RepeatedRefinementFailed(ReebIndexError):
    """
    Raised if :meth:`reebindex.core.ComputationBase.execute_repeat` did not
    succeed after the maximum number of attempts.
    """
    pass
#===============================================================================
