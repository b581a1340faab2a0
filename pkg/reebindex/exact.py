"""
Class ExactEngine
=================
Exact index triples of paths given by a generator descriptor. Every block of
a generator knows its own lower index and nullity in closed form (see
:mod:`reebindex.sympath`); this engine only collects them.
"""
#===============================================================================
import logging
#===============================================================================
from reebindex.core import ComputationBase, IndexTriple
from reebindex.exceptions import PreconditionError
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
class ExactEngine(ComputationBase):
    """
    Closed form engine. Tolerances are accepted for interface compatibility
    with :class:`reebindex.numeric.NumericEngine` and ignored.
    """
    #---------------------------------------------------------------------------
    @staticmethod
    def supports(path):
        """
        True if the path has a generator whose index is known exactly.
        """
        generator = getattr(path, 'generator', None)
        return generator is not None and generator.exact_lower() is not None \
               and generator.exact_nullity() is not None
    #---------------------------------------------------------------------------
    def execute(self, tolerances=None, error_log=None):
        """
        :raise: PreconditionError if the path has no exact formula.
        """
        if not self.supports(self.path):
            raise PreconditionError(f"No exact index formula for {self.path!r}.", error_log=error_log)
        generator = self.path.generator
        mu = generator.exact_lower()
        nu = generator.exact_nullity()
        reebindex_log.debug(f"ExactEngine: {generator!r} -> mu_minus={mu}, nu={nu}")
        return IndexTriple(mu, mu + nu, nu)
    #---------------------------------------------------------------------------
#===============================================================================
