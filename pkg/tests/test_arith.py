"""
test exact and certified arithmetic
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
from reebindex            import arith
from reebindex.arith      import ApproxReal
from reebindex.exceptions import PrecisionError, StructuralError
#===============================================================================
import pytest
import sympy
#===============================================================================
# tests
#===============================================================================
def test_lcm():
    assert arith.lcm() == 1
    assert arith.lcm(4, 6) == 12
    assert arith.lcm(5, 3, 2) == 30
#===============================================================================
def test_to_fraction():
    assert arith.to_fraction('3/4') == Fraction(3,4)
    assert arith.to_fraction(' -2 ') == -2
    assert arith.to_fraction(sympy.Rational(2,6)) == Fraction(1,3)
    for bad in (0.5, True, 'pi', None):
        with pytest.raises(StructuralError):
            arith.to_fraction(bad)
#===============================================================================
def test_rationalize():
    assert arith.rationalize(0.4) == Fraction(2,5)
    assert arith.rationalize(0.1234567891234, max_denominator=10) is None
#===============================================================================
def test_decisions():
    x = ApproxReal.from_float(2.5)
    assert arith.floor(x) == 2
    assert arith.ceil(x) == 3
    assert arith.sign(-x) == -1
    assert arith.compare(x, Fraction(5,2) + 1) == -1
    assert arith.is_integer(x) is False
    assert arith.to_str(Fraction(6,4)) == '3/2'
    assert arith.to_str(7) == '7'
    assert float(arith.frac(x + Fraction(1,4))) == pytest.approx(0.75)
    assert arith.distance_to_integers(Fraction(9,4)) == Fraction(1,4)
#===============================================================================
def test_undecidable():
    # a declared radius does not shrink with the precision
    x = ApproxReal.from_float(2.0, radius=0.1)
    with pytest.raises(PrecisionError) as excinfo:
        arith.floor(x, cap=60)
    assert excinfo.value.exit_code == 5
    with pytest.raises(PrecisionError):
        arith.is_integer(ApproxReal.from_float(3.0), cap=60)
#===============================================================================
def test_division():
    x = ApproxReal.from_float(3.0)
    assert arith.floor(x/2) == 1
    assert arith.floor(1/x*5) == 1
    with pytest.raises(PrecisionError):
        arith.sign(x/ApproxReal.from_float(0.0, radius=1e-3), cap=60)
#===============================================================================
def test_precision_cap():
    with pytest.raises(StructuralError):
        arith.set_precision_cap(10)
    arith.set_precision_cap(arith.DEFAULT_CAP_DPS)
#===============================================================================


#===============================================================================
# The code below is for debugging a particular test in an IDE.
# (normally all tests are run with pytest)
#===============================================================================
if __name__=="__main__":
    the_test_you_want_to_debug = test_undecidable

    print(f"__main__ running {the_test_you_want_to_debug}")
    the_test_you_want_to_debug()
    print('-*# finished #*-')
#===============================================================================
