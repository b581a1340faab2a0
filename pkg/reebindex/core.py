"""
Class ComputationBase
=====================
Base class for the index engines (:class:`reebindex.exact.ExactEngine` and
:class:`reebindex.numeric.NumericEngine`).
"""
#===============================================================================
import logging
from dataclasses import dataclass
#===============================================================================
from click import echo
#===============================================================================
from reebindex.config import DEFAULT_TOLERANCES
import reebindex.exceptions
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
@dataclass(frozen=True)
class IndexTriple:
    """
    Lower and upper Conley-Zehnder index and nullity of a path. The upper
    index is always the lower one plus the nullity.
    """
    mu_minus: int
    mu_plus: int
    nullity: int

    def __post_init__(self):
        if self.nullity < 0 or self.mu_plus != self.mu_minus + self.nullity:
            raise reebindex.exceptions.StructuralError(f"Inconsistent index triple {self}.")
#===============================================================================
class ComputationBase:
    """
    Base class for ExactEngine and NumericEngine.
    Derived classes reimplement :meth:`execute`, which computes the index
    triple of a path with a given set of tolerances.

    :param path: the :class:`reebindex.sympath.SymplecticPath` to work on.
    :param tolerances: :class:`reebindex.config.Tolerances`, default
        DEFAULT_TOLERANCES.
    """
    #---------------------------------------------------------------------------
    def __init__(self, path, tolerances=None):
        self.path = path
        self.tolerances = DEFAULT_TOLERANCES if tolerances is None else tolerances
        self.result = None
        self.repeat_messages = ''
        self.attempts = 0
    #---------------------------------------------------------------------------
    def execute(self, tolerances=None, error_log=None):
        raise NotImplementedError()
    #---------------------------------------------------------------------------
    def maximum_grid(self, attempts=4):
        """
        The sampling grid of the last attempt of :meth:`execute_repeat`.
        """
        return 2**(attempts - 1)*self.tolerances.grid
    #---------------------------------------------------------------------------
    def __repeat_message(self, msg='', verbose=False):
        if msg:
            msg += '\n'
            if verbose:
                echo(msg, err=True)
            self.repeat_messages += msg
        else:
            self.repeat_messages = ''
    #---------------------------------------------------------------------------
    def execute_repeat(self, attempts=4, error_log=None, verbose=False):
        """
        Repeated execution after a failure to resolve the path.

        :param int attempts: number of attempts before giving up.
        :param error_log: a logger receiving the final error, if any.
        :param bool verbose: print the messages of failed attempts to stderr.
        :return: the result of the first successful :meth:`execute`.

        Every failed attempt halves the perturbation size and doubles the
        sampling grid (:meth:`reebindex.config.Tolerances.refined`):

        =============== === === ==== ====
        attempt          1   2   3    4
        grid factor      1   2   4    8
        epsilon factor   1  1/2 1/4  1/8
        =============== === === ==== ====

        Only :class:`reebindex.exceptions.ResolutionError` and
        :class:`reebindex.exceptions.PrecisionError` trigger a new attempt,
        other exceptions propagate immediately. The accumulated messages are
        found in :attr:`repeat_messages`.
        """
        self.__repeat_message()
        tolerances = self.tolerances
        for attempt in range(1, attempts + 1):
            try:
                self.result = self.execute(tolerances=tolerances)
                self.__repeat_message(f"Attempt {attempt}/{attempts} succeeded with grid={tolerances.grid}.", verbose=verbose)
                self.attempts = attempt
                return self.result
            except (reebindex.exceptions.ResolutionError, reebindex.exceptions.PrecisionError) as e:
                self.__repeat_message(f"Attempt {attempt}/{attempts} failed."
                                      f"\n  {type(e).__name__}: {e}"
                                     , verbose=verbose
                                     )
                reebindex_log.debug(f"{type(self).__name__}: attempt {attempt} failed: {e}")
                tolerances = tolerances.refined()

        self.attempts = attempts
        self.__repeat_message(f"Exhausted after {attempts} attempts.", verbose=verbose)
        raise reebindex.exceptions.RepeatedRefinementFailed('\n' + self.repeat_messages, error_log=error_log)
    #---------------------------------------------------------------------------
    def __repr__(self):
        return f"< {self.__class__.__name__}: {self.path!r} >"
    #---------------------------------------------------------------------------
    def __str__(self):
        return f"{self.__class__.__name__}({self.path})"
#===============================================================================
