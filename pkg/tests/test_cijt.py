"""
test the common index jump search and its certificates
"""
#===============================================================================
import os, sys
from dataclasses import replace
from fractions import Fraction
from click import echo
#===============================================================================
# Make sure that the current directory is the project directory.
cwd = os.getcwd()
if cwd.endswith('tests'):
    echo(f"Changing current working directory"
         f"\n  from '{os.getcwd()}'"
         f"\n  to   '{os.path.abspath(os.path.join(os.getcwd(),'..'))}'.\n")
    os.chdir('..')
    cwd = os.getcwd()
assert os.path.exists('./tests')
test_dir = os.path.join(cwd,'tests')
test_data_dir = os.path.join(test_dir,'data')
if not ('.' in sys.path or os.getcwd() in sys.path):
    echo(f"Adding '.' to sys.path.\n")
    sys.path.insert(0, '.')
#===============================================================================
from reebindex            import __version__
from reebindex.arith      import ApproxReal
from reebindex.bott       import BottData, BottJump, iterated_index
from reebindex.cijt       import find_jump, verify_certificate, choose_q, default_epsilon,\
                                 certificate_to_json, certificate_from_json, CHECK_IDS, MIRRORED_CHECK_IDS
from reebindex.models     import EllipsoidSpec, ellipsoid_catalog
from reebindex.sympath    import RotationBlock, LoopProduct, DirectSum
from reebindex.exceptions import PreconditionError, BoundedSearchFailure, StructuralError
#===============================================================================
# setup a logger which writes to stderr and to file reebindex.log.txt
import logging
reebindex_log = logging.getLogger('reebindex_log')
logfile_handler = logging.FileHandler("reebindex.log.txt",mode='w')
logfile_formatter = logging.Formatter(f"%(levelname)s: %(name)s (reebindex v{__version__}) : %(asctime)s %(message)s\n")
logfile_handler.setFormatter(logfile_formatter)
stderr_handler = logging.StreamHandler(sys.stderr)
stderr_handler.setLevel(logging.INFO)
stderr_formatter = logging.Formatter(f"%(levelname)s: %(name)s (reebindex v{__version__}) %(message)s\n")
stderr_handler.setFormatter(stderr_formatter)
reebindex_log.addHandler(logfile_handler)
reebindex_log.addHandler(stderr_handler)
#===============================================================================
import pytest
from hypothesis import given, settings, strategies as st
#===============================================================================
# fixtures
#===============================================================================
@pytest.fixture(scope='module')
def e12_orbits():
    return ellipsoid_catalog(EllipsoidSpec((1, 2))).orbits
#===============================================================================
def check(cert, id, orbit):
    return next(c for c in cert.checks if c.id == id and c.orbit == orbit)
#===============================================================================
# tests
#===============================================================================
def test_choose_q():
    assert choose_q([BottData.rotation(Fraction(2,5))]) == 5
    assert choose_q([BottData.rotation(1), BottData.rotation(Fraction(2,3))]) == 3
    assert choose_q([BottData.constant(2)]) == 1
    approx = BottData(2, 1, (BottJump(ApproxReal.from_float(0.3), 0, 1, 1),), None, 2)
    assert choose_q([approx]) == 1
#===============================================================================
def test_default_epsilon():
    assert default_epsilon(2, 2) == Fraction(1,16)
    assert default_epsilon(1, 1) == Fraction(1,4)
#===============================================================================
def test_constant_orbit():
    d = BottData.constant(2)
    cert = find_jump([d], 1, Fraction(1,4))
    assert cert.N == 2
    assert cert.k_factor == 2
    assert cert.m == (1,)
    assert cert.delta == (0,)
    assert cert.passed
    assert set(c.id for c in cert.checks) == set(CHECK_IDS) - {'frac-closeness'}
    assert check(cert, 'index-above', 0).lhs == 6
#===============================================================================
def test_tampered_certificate():
    d = BottData.constant(2)
    cert = find_jump([d], 1, Fraction(1,4))
    checks = verify_certificate([d], replace(cert, m=(2,)))
    above = next(c for c in checks if c.id == 'index-above')
    assert not above.passed
    assert (above.lhs, above.rhs) == (10, 6)
    assert not next(c for c in checks if c.id == 'm-form' and c.orbit == 0).passed
    checks = verify_certificate([d], replace(cert, N=3))
    assert not next(c for c in checks if c.id == 'm-form' and c.orbit is None).passed
#===============================================================================
def test_malformed_certificate():
    d = BottData.constant(2)
    cert = find_jump([d], 1, Fraction(1,4))
    with pytest.raises(StructuralError):
        verify_certificate([d, d], cert)
    with pytest.raises(StructuralError):
        verify_certificate([d], replace(cert, delta=(2,)))
    with pytest.raises(StructuralError):
        verify_certificate([d], replace(cert, q_param=0))
#===============================================================================
def test_ellipsoid_jump(e12_orbits):
    cert = find_jump(e12_orbits, 4)
    assert cert.N == 12
    assert cert.m == (4, 2)
    assert cert.passed
    # 2N - mu(gamma) - 2S+(1) and 2N + mu(gamma)
    assert (check(cert, 'index-below', 1).lhs, check(cert, 'index-above', 1).lhs) == (17, 29)
    assert (check(cert, 'index-below', 0).lhs, check(cert, 'index-above', 0).lhs) == (21, 27)
#===============================================================================
def test_ellipsoid_jump_with_q(e12_orbits):
    cert = find_jump(e12_orbits, 4, Fraction(1,16), extra_q_multiple=2)
    assert cert.q_param == 2
    assert (cert.N, cert.m) == (12, (4, 2))
    assert all(m % cert.q_param == 0 for m in cert.m)
#===============================================================================
def test_frac_delta(e12_orbits):
    cert = find_jump(e12_orbits, 4, frac_delta=Fraction(1,2))
    assert cert.summary()['frac-closeness']
#===============================================================================
def test_nonpositive_mean_index():
    with pytest.raises(PreconditionError):
        find_jump([BottData.constant(-2)], 1)
    with pytest.raises(PreconditionError):
        find_jump([BottData.constant(0)], 1)
    with pytest.raises(PreconditionError):
        find_jump([], 1)
    with pytest.raises(PreconditionError):
        find_jump([BottData.constant(2)], 0)
#===============================================================================
def test_mirrored():
    d = BottData.constant(-2)
    cert = find_jump([d], 1, Fraction(1,4), mirrored=True)
    assert (cert.N, cert.m) == (2, (1,))
    assert cert.mirrored
    assert set(c.id for c in cert.checks) == set(MIRRORED_CHECK_IDS) - {'frac-closeness'}
    assert cert.passed
    with pytest.raises(PreconditionError):
        find_jump([BottData.constant(2)], 1, mirrored=True)
#===============================================================================
def test_mirrored_ellipsoid(e12_orbits):
    inverted = [d.inverted() for d in e12_orbits]
    cert = find_jump(inverted, 4, mirrored=True)
    assert (cert.N, cert.m) == (12, (4, 2))
    assert check(cert, 'index-below-mirrored', 0).lhs == -21
    assert check(cert, 'index-below-mirrored', 1).lhs == -17
    assert cert.passed
#===============================================================================
def test_bounded_search(e12_orbits):
    with pytest.raises(BoundedSearchFailure) as excinfo:
        find_jump(e12_orbits, 4, search_bound=2)
    assert excinfo.value.exit_code == 2
#===============================================================================
def test_parallel_search(e12_orbits):
    serial = find_jump(e12_orbits, 4, search_bound=2000)
    parallel = find_jump(e12_orbits, 4, search_bound=2000, n_jobs=2)
    assert parallel == serial
    assert parallel.passed
#===============================================================================
def test_certificate_json(e12_orbits):
    cert = find_jump(e12_orbits, 4)
    obj = certificate_to_json(cert)
    assert obj['epsilon'] == '1/8'
    assert obj['summary']['nullity']
    again = certificate_from_json(obj)
    assert again == cert
    assert [c.passed for c in verify_certificate(e12_orbits, again)] == [c.passed for c in cert.checks]
    with pytest.raises(StructuralError):
        certificate_from_json({'N': 12})
#===============================================================================
@settings(max_examples=20, deadline=None)
@given(st.lists(st.lists(st.fractions(min_value=Fraction(1,3), max_value=3, max_denominator=3),
                         min_size=1, max_size=2),
                min_size=1, max_size=2))
def test_jump_exists(collection):
    # loops of Maslov index 1 times rotations: positive mean index
    orbits = []
    for rs in collection:
        blocks = tuple(RotationBlock(r) for r in rs)
        base = blocks[0] if len(blocks) == 1 else DirectSum(blocks)
        orbits.append(BottData.from_generator(LoopProduct((1,) + (0,)*(len(blocks) - 1), base)))
    cert = find_jump(orbits, 2, search_bound=20000)
    assert cert.passed
    for j, d in enumerate(orbits):
        assert iterated_index(d, 2*cert.m[j] + 1) == 2*cert.N + d.b_at_one
#===============================================================================


#===============================================================================
# The code below is for debugging a particular test in an IDE.
# (normally all tests are run with pytest)
#===============================================================================
if __name__=="__main__":
    the_test_you_want_to_debug = test_ellipsoid_jump

    print(f"__main__ running {the_test_you_want_to_debug}")
    the_test_you_want_to_debug()
    print('-*# finished #*-')
#===============================================================================
