"""
test ellipsoid catalogs, prequantization profiles and path blocks
"""
#===============================================================================
import os, sys
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
if not ('.' in sys.path or os.getcwd() in sys.path):
    echo(f"Adding '.' to sys.path.\n")
    sys.path.insert(0, '.')
#===============================================================================
from reebindex            import __version__
from reebindex.bott       import BottData, iterated_index, mean_index
from reebindex.models     import EllipsoidSpec, ellipsoid_catalog, ellipsoid_generator, catalog_profile,\
                                 katok_ziller_count, block
from reebindex.sympath    import cz_index, cz_lower
from reebindex.exceptions import StructuralError, UnknownProfile
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
#===============================================================================
# tests
#===============================================================================
def test_ellipsoid_spec():
    spec = EllipsoidSpec((1, '3/2', 2))
    assert spec.n == 2
    assert spec.aspects == (Fraction(1), Fraction(3,2), Fraction(2))
    with pytest.raises(StructuralError):
        EllipsoidSpec((1,))
    with pytest.raises(StructuralError):
        EllipsoidSpec((1, -2))
    with pytest.raises(StructuralError):
        EllipsoidSpec((1, 0.5))
#===============================================================================
def test_ellipsoid_e12():
    c = ellipsoid_catalog(EllipsoidSpec((1, 2)))
    assert [d.name for d in c.orbits] == ['gamma1', 'gamma2']
    assert [d.b_at_one for d in c.orbits] == [3, 5]
    assert [iterated_index(c.orbit('gamma1'), k) for k in range(1, 6)] == [3, 5, 9, 11, 15]
    assert [mean_index(d) for d in c.orbits] == [3, 6]
    assert c.profile.name == 'sphere(1)'
    assert c.orbit('gamma2').iterate_homology.offsets(7) == {2: 1}
    assert c.orbit('gamma1').iterate_homology.offsets(3) is None
    assert set(c.paths) == {'gamma1', 'gamma2'}
#===============================================================================
def test_ellipsoid_unresolved():
    c = ellipsoid_catalog(EllipsoidSpec((1, 1)), resolve=False)
    assert all(d.iterate_homology is None for d in c.orbits)
    assert [d.b_at_one for d in c.orbits] == [3, 3]
#===============================================================================
def test_ellipsoid_generator():
    # orbit 1 of E(1,2,3): loop times R(pi t) + R(2 pi t/3)
    g = ellipsoid_generator(EllipsoidSpec((1, 2, 3)), 0)
    d = BottData.from_generator(g)
    assert mean_index(d) == Fraction(11,3)
    assert d.b_at_one == 2 + 1 + 1
#===============================================================================
def test_first_degenerate_iterate():
    # the ratio 10/13 makes the 13th iterate the first degenerate one
    c = ellipsoid_catalog(EllipsoidSpec((1, Fraction(13,10))), verify_up_to=9)
    g1 = c.orbit('gamma1')
    assert g1.iterate_homology.offsets(1) is None
    assert g1.iterate_homology.period == 13
#===============================================================================
def test_sphere_profile():
    p = catalog_profile('sphere', 2)
    assert (p.r_B, p.c_B, p.I, p.k_minus) == (3, 3, 6, 4)
    p = catalog_profile('sphere', 1)
    assert (p.I, p.k_minus, p.betti) == (4, 3, (1, 0, 1))
    assert catalog_profile('sphere', 1, I=8).I == 8
#===============================================================================
@pytest.mark.parametrize('n,r_B,c_B', [(1, 2, 2), (2, 4, 2), (3, 4, 3), (4, 6, 4), (5, 6, 5)])
def test_cotangent_profile(n, r_B, c_B):
    p = catalog_profile('unit-cotangent-sphere', n)
    assert p.r_B == r_B
    assert p.c_B == c_B
    assert p.I == 2*c_B
    assert r_B == katok_ziller_count('finsler-sphere', n)
#===============================================================================
def test_custom_profile():
    p = catalog_profile('custom', 1, (1, 0, 1), 4, 2)
    assert p.name == 'custom'
    with pytest.raises(StructuralError):
        catalog_profile('custom', 1)
    with pytest.raises(UnknownProfile):
        catalog_profile('torus', 1)
    with pytest.raises(StructuralError):
        catalog_profile('sphere', 0)
#===============================================================================
def test_katok_ziller_count():
    assert katok_ziller_count('irrational-ellipsoid', 3) == 4
    assert katok_ziller_count('finsler-sphere', 1) == 2
    with pytest.raises(UnknownProfile):
        katok_ziller_count('round-sphere', 1)
#===============================================================================
def test_blocks():
    assert cz_index(block('rotation', {'angle': Fraction(2,5)})) == 1
    h = block('hyperbolic', {'lambda': 2})
    assert cz_index(h) == 0
    d = BottData.from_generator(h.generator)
    assert (d.b_at_one, d.jumps) == (0, ())
    assert cz_index(block('hyperbolic', {'lambda': '-1/2', 'half_turns': 2})) == 3
    assert cz_lower(block('identity', {'twist': 2})) == 3
    d = BottData.from_generator(block('identity').generator)
    assert d.jump_at_one.s == 1
#===============================================================================
def test_block_errors():
    with pytest.raises(StructuralError):
        block('hyperbolic', {'lambda': 1})
    with pytest.raises(StructuralError):
        block('rotation')
    with pytest.raises(StructuralError):
        block('shear')
#===============================================================================


#===============================================================================
# The code below is for debugging a particular test in an IDE.
# (normally all tests are run with pytest)
#===============================================================================
if __name__=="__main__":
    the_test_you_want_to_debug = test_ellipsoid_e12

    print(f"__main__ running {the_test_you_want_to_debug}")
    the_test_you_want_to_debug()
    print('-*# finished #*-')
#===============================================================================
