"""
test symplectic matrices, paths and their Conley-Zehnder indices
"""
#===============================================================================
import os, sys
from fractions import Fraction
from click import echo
#===============================================================================
# Make sure that the current directory is the project directory.
# 'make test" and 'pytest' are generally run from the project directory.
# However, if we run/debug this file in an IDE, we end up in reebindex/tests
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
# Make sure that we can import the module being tested.
if not ('.' in sys.path or os.getcwd() in sys.path):
    echo(f"Adding '.' to sys.path.\n")
    sys.path.insert(0, '.')
#===============================================================================
import reebindex
from reebindex            import __version__
from reebindex.sympath    import SymplecticMatrix, SymplecticPath, RotationBlock, HyperbolicBlock,\
                                 ExpSymmetricBlock, LoopProduct, DirectSum,\
                                 validate_symplectic, nullity, cz_index, cz_lower, cz_upper, rs_index,\
                                 index_triple, invert_path, iterate_path, direct_sum,\
                                 path_from_json, path_to_json
from reebindex.models     import block
from reebindex.serialize  import read_json
from reebindex.exceptions import DegenerateEndpoint, PreconditionError, StructuralError
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
from hypothesis import given, settings, assume, strategies as st
#===============================================================================
# helpers
#===============================================================================
def path_of(generator):
    return SymplecticPath(generator.dim2n, generator=generator)
#===============================================================================
# tests
#===============================================================================
def test_nullity():
    assert nullity([[1,0],[0,1]]) == 2
    assert nullity([[0,-1],[1,0]]) == 0
    assert nullity([[-1,0,0,0],[0,-1,0,0],[0,0,1,0],[0,0,0,1]]) == 2
#===============================================================================
def test_validate_symplectic():
    assert validate_symplectic(SymplecticMatrix([[0,-1],[1,0]])).ok
    assert validate_symplectic(SymplecticMatrix([[2,0],[0,'1/2']])).ok
    assert not validate_symplectic(SymplecticMatrix([[2,0],[0,1]])).ok
    # float entries are checked against tau_sympl
    assert validate_symplectic(SymplecticMatrix([[0.6,-0.8],[0.8,0.6]])).ok
#===============================================================================
def test_matrix_shape():
    with pytest.raises(StructuralError):
        SymplecticMatrix([[1,0,0],[0,1,0],[0,0,1]])
    with pytest.raises(StructuralError):
        SymplecticMatrix([[1,0],[0]])
#===============================================================================
def test_cz_signature():
    # short paths exp(J0 A t): the index is half the signature of A
    assert cz_index(path_of(ExpSymmetricBlock([[1,0],[0,1]]))) == 1
    assert cz_index(path_of(ExpSymmetricBlock([[1,0],[0,-1]]))) == 0
    assert cz_index(path_of(ExpSymmetricBlock([[-1,0],[0,-1]]))) == -1
#===============================================================================
def test_cz_loop():
    # multiplying by a loop of Maslov index 1 adds 2
    g = LoopProduct((1,), ExpSymmetricBlock([[1,0],[0,-1]]))
    assert cz_index(path_of(g)) == 2
#===============================================================================
def test_integer_matrix_block():
    # integer entries go through the exact closed form
    g = ExpSymmetricBlock([[2,1],[1,2]])
    assert g.spectrum_inside(Fraction(4))
    assert not g.spectrum_inside(Fraction(3))
    assert not g.spectrum_inside(Fraction(5,2))
    assert cz_lower(path_of(g), mode='exact') == 1
    triple = index_triple(path_of(ExpSymmetricBlock([[1,0],[0,-1]])), mode='exact')
    assert (triple.mu_minus, triple.mu_plus, triple.nullity) == (0, 0, 0)
    assert cz_index(path_of(LoopProduct((1,), ExpSymmetricBlock([[2,0],[0,-3]]))), mode='exact') == 2
#===============================================================================
def test_cz_rotation():
    assert cz_index(path_of(RotationBlock(Fraction(1,2)))) == 1
    assert cz_index(path_of(RotationBlock(Fraction(9,2)))) == 5
    assert cz_index(path_of(RotationBlock(Fraction(-9,2)))) == -5
    assert cz_index(read_json_path('rotation_2pi5.json')) == 1
#===============================================================================
def read_json_path(name):
    return path_from_json(read_json(os.path.join(test_data_dir, name)))
#===============================================================================
def test_cz_degenerate_raises():
    with pytest.raises(DegenerateEndpoint):
        cz_index(path_of(RotationBlock(2)))
#===============================================================================
def test_constant_identity():
    p = block('identity')
    triple = index_triple(p)
    assert (triple.mu_minus, triple.mu_plus, triple.nullity) == (-1, 1, 2)
    assert rs_index(p) == 0
#===============================================================================
def test_full_turn():
    p = block('identity', {'twist': 1})
    assert cz_lower(p) == 1
    assert cz_upper(p) == 3
    assert rs_index(p) == 2
#===============================================================================
def test_product_loop():
    # n full turns: the Robbin-Salamon index is 2 per plane
    p = direct_sum(*[block('identity', {'twist': 1}) for _ in range(3)])
    assert p.dim2n == 6
    assert rs_index(p) == 6
    assert cz_lower(p) == 3
    assert cz_upper(p) == 9
#===============================================================================
def test_hyperbolic():
    assert cz_index(path_of(HyperbolicBlock(2))) == 0
    assert cz_index(path_of(HyperbolicBlock(2, 1))) == 1
    assert cz_index(block('hyperbolic', {'lambda': -3})) == 1
#===============================================================================
def test_direct_sum_additive():
    g = DirectSum((RotationBlock(Fraction(9,2)), HyperbolicBlock(2, 1), RotationBlock(Fraction(2,5))))
    assert cz_index(path_of(g)) == 5 + 1 + 1
#===============================================================================
@pytest.mark.parametrize('r', [Fraction(9,4), Fraction(2), Fraction(-1,3), Fraction(0)])
def test_invert_path(r):
    p = path_of(RotationBlock(r))
    q = invert_path(p)
    assert cz_lower(q) == -cz_upper(p)
    assert cz_upper(q) == -cz_lower(p)
    assert rs_index(q) == -rs_index(p)
#===============================================================================
def test_invert_exp_symmetric():
    p = path_of(ExpSymmetricBlock([[1,0],[0,1]]))
    assert cz_index(invert_path(p)) == -1
#===============================================================================
def test_iterate_path():
    p = path_of(RotationBlock(Fraction(2,5)))
    assert iterate_path(p, 3).generator == RotationBlock(Fraction(6,5))
    assert iterate_path(p, 1) is p
    # Rot(2/5)^5 closes up at the identity: lower index 1, upper index 3
    assert [cz_lower(iterate_path(p, k)) for k in range(1, 5)] == [1, 1, 1, 1]
    triple = index_triple(iterate_path(p, 5))
    assert (triple.mu_minus, triple.mu_plus, triple.nullity) == (1, 3, 2)
    with pytest.raises(StructuralError):
        iterate_path(p, 0)
#===============================================================================
@pytest.mark.parametrize('generator,expected', [(RotationBlock(Fraction(1,2)), 1),
                                                (RotationBlock(Fraction(9,2)), 5),
                                                (HyperbolicBlock(2), 0)])
def test_numeric_matches_exact(generator, expected):
    p = path_of(generator)
    assert cz_lower(p, mode='exact') == expected
    assert cz_lower(p, mode='numeric') == expected
#===============================================================================
def test_sampled_path():
    # R(pi t/2) given by samples only, no generator
    from reebindex.numeric import rotation
    import math
    samples = [(Fraction(i, 16), rotation(math.pi*i/32).tolist()) for i in range(17)]
    p = SymplecticPath(2, samples=samples)
    assert p.generator is None
    assert cz_lower(p) == 1
#===============================================================================
def test_sample_validation():
    with pytest.raises(StructuralError):
        SymplecticPath(2, samples=[(0, [[1,0],[0,1]]), (1, [[2,0],[0,1]])])
    with pytest.raises(StructuralError):
        SymplecticPath(2, samples=[(0, [[0,-1],[1,0]]), (1, [[1,0],[0,1]])])
    with pytest.raises(StructuralError):
        SymplecticPath(2)
#===============================================================================
def test_exact_mode_without_formula():
    # the spectrum of J0 A leaves the range of the closed form
    p = path_of(ExpSymmetricBlock([[7,0],[0,7]]))
    with pytest.raises(PreconditionError):
        cz_lower(p, mode='exact')
#===============================================================================
def test_run_facade():
    p = path_of(RotationBlock(Fraction(9,2)))
    triple = reebindex.run(p)
    assert triple.mu_minus == 5 and triple.nullity == 0
    with pytest.raises(StructuralError):
        reebindex.run(p, mode='fast')
#===============================================================================
def test_path_json():
    g = LoopProduct((1,0), DirectSum((RotationBlock(Fraction(1,2)), HyperbolicBlock(3, 1))))
    p = path_of(g)
    q = path_from_json(path_to_json(p))
    assert q.generator == g
    assert cz_index(q) == cz_index(p) == 2 + 1 + 1
    with pytest.raises(StructuralError):
        path_from_json({'dim2n': 2, 'generator': {'kind': 'spiral', 'params': []}})
#===============================================================================
@settings(max_examples=25, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_short_path_signature(a, b, c):
    # for a small nondegenerate symmetric A the index of exp(J0 A t) is sign(A)/2
    assume(a*c - b*b != 0)
    assume(abs(a) + abs(b) + abs(c) <= 4)
    g = ExpSymmetricBlock([[a,b],[b,c]])
    signature = g.signature()
    assert cz_index(path_of(g), mode='numeric') == signature//2
#===============================================================================


#===============================================================================
# The code below is for debugging a particular test in an IDE.
# (normally all tests are run with pytest)
#===============================================================================
if __name__=="__main__":
    the_test_you_want_to_debug = test_cz_rotation

    print(f"__main__ running {the_test_you_want_to_debug}")
    the_test_you_want_to_debug()
    print('-*# finished #*-')
#===============================================================================
