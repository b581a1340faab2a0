# -*- coding: utf-8 -*-

"""
Package reebindex
=================

Package reebindex computes Conley-Zehnder indices of symplectic paths, the
Bott index functions of closed Reeb orbits and the indices of their iterates,
finds common index jumps of finitely many orbits, and audits orbit catalogs
against the contact homology of prequantizations.

* reebindex.sympath: symplectic matrices and paths, their indices.
* reebindex.bott: Bott functions and iteration formulas.
* reebindex.cijt: common index jump search and certificates.
* reebindex.chomology: contact homology bookkeeping and catalog audits.
* reebindex.models: ellipsoid catalogs, prequantization profiles, path blocks.
* reebindex.serialize: canonical JSON output.
* reebindex.cli: the command line interface.
* reebindex.exceptions: exceptions used by reebindex.
"""
#===============================================================================
__version__ = "0.1.0"
#===============================================================================
from reebindex.config import Tolerances, DEFAULT_TOLERANCES
from reebindex.core import IndexTriple
from reebindex.exact import ExactEngine
from reebindex.numeric import NumericEngine
from reebindex.exceptions import StructuralError, PreconditionError
#===============================================================================
def run( path, mode='auto'
             , tolerances=None
             , error_log=None
             , attempts=1
             , verbose=False
             ):
    """
    Wrapper function around ExactEngine and NumericEngine. Provides a common
    interface to compute the index triple of a path.

    :param path: a :class:`reebindex.sympath.SymplecticPath`.
    :param str mode: 'exact' uses the closed form of the generator and raises
        PreconditionError if there is none, 'numeric' always uses crossing
        forms, 'auto' prefers the closed form.
    :param tolerances: :class:`reebindex.config.Tolerances`.
    :param error_log: logger to which errors are written.
    :param int attempts: number of attempts of the numeric engine, each with
        half the perturbation and twice the grid of the previous one.

    :return: :class:`reebindex.core.IndexTriple`.
    """
    if mode not in ('auto', 'exact', 'numeric'):
        raise StructuralError(f"Unknown mode '{mode}'.", error_log=error_log)

    if mode != 'numeric' and ExactEngine.supports(path):
        engine = ExactEngine(path, tolerances)
    elif mode == 'exact':
        raise PreconditionError(f"No exact index formula for {path!r}.", error_log=error_log)
    else:
        engine = NumericEngine(path, tolerances)

    if attempts == 1:
        return engine.execute(error_log=error_log)
    return engine.execute_repeat(attempts=attempts, error_log=error_log, verbose=verbose)
#===============================================================================
