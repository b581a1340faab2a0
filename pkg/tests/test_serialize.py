"""
test canonical JSON output
"""
#===============================================================================
import os, sys, json
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
from reebindex            import serialize
from reebindex.arith      import ApproxReal
from reebindex.config     import RunConfig, Tolerances
from reebindex.exceptions import StructuralError
#===============================================================================
import numpy as np
import pytest
#===============================================================================
# tests
#===============================================================================
def test_encode():
    assert serialize.encode(Fraction(3,4)) == '3/4'
    assert serialize.encode(Fraction(4,2)) == '2'
    assert serialize.encode(np.int64(5)) == 5
    assert serialize.encode(0.25) == {'approx': True, 'value': 0.25}
    assert serialize.encode(ApproxReal.from_float(0.5)) == {'approx': True, 'value': 0.5}
    assert serialize.encode({1: (Fraction(1,2), None)}) == {'1': ['1/2', None]}
    with pytest.raises(StructuralError):
        serialize.encode(object())
#===============================================================================
def test_decode():
    assert serialize.decode('-3/4') == Fraction(-3,4)
    assert serialize.decode('gamma1') == 'gamma1'
    assert serialize.decode({'approx': True, 'value': 0.5}) == 0.5
    assert serialize.decode(['1', ['2/3']]) == (Fraction(1), (Fraction(2,3),))
    obj = {'a': [Fraction(1,3), 2], 'b': 'x'}
    assert serialize.decode(json.loads(serialize.dumps(obj))) == {'a': (Fraction(1,3), 2), 'b': 'x'}
#===============================================================================
def test_dumps():
    text = serialize.dumps({'b': 1, 'a': Fraction(1,2)})
    assert text.endswith('}\n')
    assert text.index('"a"') < text.index('"b"')
    assert text == serialize.dumps({'a': Fraction(1,2), 'b': 1})
#===============================================================================
def test_loads():
    assert serialize.loads('{"x": 1}') == {'x': 1}
    with pytest.raises(StructuralError):
        serialize.loads('{"x": ')
    with pytest.raises(StructuralError):
        serialize.read_json(os.path.join(test_data_dir, 'no_such_file.json'))
    assert serialize.read_json(os.path.join(test_data_dir, 's5_profile.json'))['I'] == 6
#===============================================================================
def test_report():
    config = RunConfig(subcommand='homology', tolerances=Tolerances(grid=64))
    doc = serialize.report('homology', {'chi0': Fraction(1,2)}, config)
    assert doc['schema_version'] == serialize.SCHEMA_VERSION
    assert doc['kind'] == 'homology'
    assert doc['config']['tolerances']['grid'] == 64
    assert doc['config']['subcommand'] == 'homology'
    assert 'config' not in serialize.report('homology', {})
#===============================================================================
def test_to_text():
    text = serialize.to_text({'b': [1, {'c': Fraction(2,3)}], 'a': 0.5, 'e': []})
    lines = text.split('\n')
    assert lines[0] == 'a: ~0.5'
    assert lines[1] == 'b:'
    assert '  - 1' in lines
    assert '    c: 2/3' in lines
    assert lines[-1] == 'e: []'
    # approximate values inside lists and nested records render once
    assert serialize.to_text({'delta': 0.4}) == 'delta: ~0.4'
    assert serialize.to_text({'x': [0.25], 'y': {'z': 1.5}}) == 'x:\n  - ~0.25\ny:\n  z: ~1.5'
#===============================================================================


#===============================================================================
# The code below is for debugging a particular test in an IDE.
# (normally all tests are run with pytest)
#===============================================================================
if __name__=="__main__":
    the_test_you_want_to_debug = test_to_text

    print(f"__main__ running {the_test_you_want_to_debug}")
    the_test_you_want_to_debug()
    print('-*# finished #*-')
#===============================================================================
