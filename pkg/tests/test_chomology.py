"""
test contact homology bookkeeping and the catalog audit
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
from reebindex.bott       import BottData, IterateHomology
from reebindex.chomology  import PrequantProfile, OrbitCatalog, AuditOptions,\
                                 prequant_rank, hc_window, chi0, totally_degenerate, local_ranks, local_chi,\
                                 mean_chi, resonance_check, convexity_check, morse_check, degree_contributions,\
                                 sdm_candidate, sdmin_candidate, perfection, audit, report_to_json,\
                                 catalog_to_json, catalog_from_json, window_check
from reebindex.models     import EllipsoidSpec, ellipsoid_catalog, catalog_profile
from reebindex.sympath    import DirectSum, RotationBlock
from reebindex.serialize  import dumps, read_json
from reebindex.exceptions import StructuralError, PreconditionError, DataRequired, SupportViolation
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
S3 = PrequantProfile(1, (1, 0, 1), 4, 2, 'sphere(1)')
S5 = PrequantProfile(2, (1, 0, 1, 0, 1), 6, 3, 'sphere(2)')
#===============================================================================
@pytest.fixture(scope='module')
def e12():
    return ellipsoid_catalog(EllipsoidSpec((1, 2)))
#===============================================================================
@pytest.fixture(scope='module')
def e11():
    return ellipsoid_catalog(EllipsoidSpec((1, 1)))
#===============================================================================
def full_turn(local_homology):
    """R(2 pi t): totally degenerate with mean index 2."""
    return replace(BottData.rotation(2), name='g', local_homology=local_homology)
#===============================================================================
# tests
#===============================================================================
def test_prequant_rank():
    assert [prequant_rank(S3, d) for d in range(1, 11)] == [0, 0, 1, 0, 1, 0, 1, 0, 1, 0]
    assert list(hc_window(S5, 6).values()) == [1, 0, 1, 0, 1]
    assert list(hc_window(S5, 6)) == [10, 11, 12, 13, 14]
#===============================================================================
def test_chi0():
    assert chi0(S3) == Fraction(-1,2)
    assert chi0(S5) == Fraction(1,2)
    assert S3.k_minus == 3
    assert S5.r_B == 3
    assert S5.euler == 3
#===============================================================================
def test_profile_validation(caplog):
    with pytest.raises(StructuralError):
        PrequantProfile(1, (1, 0), 4, 2)
    with pytest.raises(StructuralError):
        PrequantProfile(1, (1, 0, 1), 5, 2)
    with pytest.raises(StructuralError):
        PrequantProfile(1, (1, 0, 1), 2, 2)
    with caplog.at_level(logging.WARNING, logger='reebindex_log'):
        PrequantProfile(1, (1, 0, 2), 4, 2)
    assert 'Poincare' in caplog.text
#===============================================================================
def test_catalog_validation(e12):
    with pytest.raises(StructuralError):
        OrbitCatalog(S5, e12.orbits)
    with pytest.raises(StructuralError):
        OrbitCatalog(S3, (e12.orbits[0], e12.orbits[0]))
    c = OrbitCatalog(S3, (BottData.constant(3), BottData.constant(5)))
    assert [d.name for d in c.orbits] == ['gamma1', 'gamma2']
    assert c.orbit('gamma2').b_at_one == 5
    assert [d.name for d in c.without('gamma1').orbits] == ['gamma2']
#===============================================================================
def test_local_ranks_nondegenerate(e12):
    g1 = e12.orbit('gamma1')
    assert local_ranks(g1, 1) == {3: 1}
    assert local_ranks(g1, 3) == {9: 1}
    assert local_chi(g1, 1) == -1
#===============================================================================
def test_local_ranks_iterate_homology(e12):
    g1, g2 = e12.orbit('gamma1'), e12.orbit('gamma2')
    assert local_ranks(g1, 2) == {5: 1}
    assert local_ranks(g2, 1) == {7: 1}
    assert local_ranks(g2, 4) == {25: 1}
#===============================================================================
def test_data_required():
    d = full_turn(None)
    assert totally_degenerate(d)
    with pytest.raises(DataRequired) as excinfo:
        local_ranks(d, 1)
    assert (excinfo.value.orbit, excinfo.value.iterate) == ('g', 1)
    assert excinfo.value.exit_code == 4
#===============================================================================
def test_support_violation():
    with pytest.raises(SupportViolation):
        local_ranks(full_turn({5: 1}), 1)
    with pytest.raises(SupportViolation):
        sdm_candidate(full_turn({1: 1, 3: 1}))
#===============================================================================
def test_strongly_degenerate():
    top = full_turn({3: 1})
    assert sdm_candidate(top)
    assert not sdmin_candidate(top)
    assert local_ranks(top, 3) == {7: 1}
    bottom = full_turn({1: 1})
    assert sdmin_candidate(bottom)
    assert not sdm_candidate(bottom)
    assert local_ranks(bottom, 2) == {3: 1}
    assert not sdm_candidate(BottData.constant(2))
#===============================================================================
def test_mean_chi(e12):
    assert mean_chi(e12.orbit('gamma1')) == (-1, 2)
    assert mean_chi(e12.orbit('gamma2')) == (-1, 2)
#===============================================================================
def test_resonance(e12):
    r = resonance_check(e12)
    assert r.passed
    assert r.lhs == Fraction(-1,2)
    assert r.terms['gamma1'][1] == 3
    assert r.terms['gamma2'][1] == 6
    assert not resonance_check(e12.without('gamma2')).passed
#===============================================================================
def test_convexity(e12):
    assert convexity_check(e12).passed
    c = OrbitCatalog(S3, (BottData.rotation(Fraction(2,5)),))
    r = convexity_check(c)
    assert not r.passed
    assert r.offending == ('gamma1', 1, 1)
    assert convexity_check(c, threshold_override=1).passed
    with pytest.raises(PreconditionError):
        convexity_check(c, mode='negative')
#===============================================================================
def test_morse(e12):
    r = morse_check(e12, 24)
    assert r.passed
    assert r.pointwise
    assert [row.c for row in r.table[:6]] == [0, 0, 1, 0, 1, 0]
    with pytest.raises(PreconditionError):
        morse_check(replace(e12, claimed_complete=False), 24)
#===============================================================================
def test_degree_contributions(e12):
    contributions = degree_contributions(e12, 23, 25)
    # gamma2^4 starts at 23 but its local homology sits in degree 25
    assert contributions[23] == [('gamma1', 8, 1)]
    assert contributions[25] == [('gamma2', 4, 1)]
    assert contributions[24] == []
#===============================================================================
def test_perfection(e12):
    p = perfection(e12)
    assert p.resolved and p.perfect
    assert p.parity == 1
    assert p.even_count == 2
    assert p.count_matches
#===============================================================================
def test_audit_e12(e12):
    r = audit(e12)
    assert r.verdict == 'consistent', r.reason
    assert r.certificate.N == 12
    assert r.certificate.m == (4, 2)
    assert r.counting_identity['jump-euler-sum'] == {'lhs': -6, 'rhs': -6}
    assert r.counting_identity['c_alternating'] == -11
    assert r.counting_identity['expected_b'] == -11
    assert r.witnesses['top_degree'] == ['gamma2']
    assert r.witnesses['elliptic'] == ['gamma1', 'gamma2']
    assert r.window[24] == []
    assert [s.id for s in r.steps][:4] == ['convexity', 'resonance', 'cijt', 'jump-euler-sum']
    assert not r.failed
    assert '"verdict": "consistent"' in dumps(report_to_json(r))
#===============================================================================
def test_window_check(e12):
    w = window_check(e12, 12, {'gamma1': 4, 'gamma2': 2})
    assert w.passed
    assert (w.extra, w.short, w.degenerate, w.needed) == ([], [], [], 0)
    assert w.contributions[25] == [('gamma2', 4, 1)]
#===============================================================================
def test_window_check_degenerate():
    # R(2 pi t) + R(2 pi t): every iterate degenerate, local rank 2 at the bottom
    p = PrequantProfile(2, (1, 0, 2, 0, 1), 6, 3, 'quadric(2)')
    g = replace(BottData.from_generator(DirectSum((RotationBlock(2), RotationBlock(2)))),
                name='g', iterate_homology=IterateHomology(1, {0: {0: 2}}))
    c = OrbitCatalog(p, (g,))
    w = window_check(c, 3, {'g': 1})
    assert w.contributions[6] == [('g', 2, 2)]
    assert (w.distinct, w.needed) == (1, 2)
    assert w.degenerate == [('g', 2)]
    assert w.passed
    assert not window_check(c, 3, {'g': 2}).passed
#===============================================================================
def test_audit_top_degree_detail(e12):
    # move the local homology of gamma2's iterates to their lowest degree
    g2 = replace(e12.orbit('gamma2'), iterate_homology=IterateHomology(1, {0: {0: 1}}))
    c = OrbitCatalog(e12.profile, (e12.orbit('gamma1'), g2))
    r = audit(c)
    assert r.verdict == 'contradiction'
    step = next(s for s in r.steps if s.id == 'top-degree')
    assert step.status == 'fail'
    assert step.detail == "no orbit reaches degree 25; the alternating counts would read -12 >= -11"
    assert (r.counting_identity['expected_c'], r.counting_identity['expected_b']) == (-12, -11)
#===============================================================================
def test_audit_e11(e11):
    r = audit(e11)
    assert r.verdict == 'consistent', r.reason
    assert r.certificate.N == 8
    assert r.certificate.m == (2, 2)
    assert r.witnesses['top_degree'] == ['gamma2']
#===============================================================================
def test_audit_catalog_file():
    c = catalog_from_json(read_json(os.path.join(test_data_dir, 'e12_catalog.json')))
    assert audit(c).verdict == 'consistent'
#===============================================================================
def test_audit_missing_orbit(e12):
    r = audit(e12.without('gamma2'))
    assert r.verdict == 'contradiction'
    assert r.reason == 'resonance'
#===============================================================================
def test_audit_single_orbit():
    e123 = ellipsoid_catalog(EllipsoidSpec((1, 2, 3)))
    c = OrbitCatalog(e123.profile, (e123.orbit('gamma1'),))
    r = audit(c)
    assert r.verdict == 'contradiction'
    assert r.resonance.terms['gamma1'][:2] == (1, Fraction(11,3))
    assert 'resonance' in r.failed
#===============================================================================
def test_audit_data_required(e12):
    bare = ellipsoid_catalog(EllipsoidSpec((1, 2)), resolve=False)
    r = audit(bare)
    assert r.verdict == 'inconclusive'
    assert r.witnesses['blocking'] == {'orbit': 'gamma1', 'iterate': 2}
#===============================================================================
def test_audit_relaxed(e12):
    r = audit(e12, AuditOptions(relaxed_threshold=1))
    assert r.convexity.threshold == 1
    assert r.verdict == 'consistent'
#===============================================================================
def test_audit_negative(e12):
    c = OrbitCatalog(S3, tuple(d.inverted() for d in e12.orbits))
    r = audit(c, AuditOptions(mode='negative'))
    assert r.convexity.passed
    assert r.convexity.mode == 'negative'
    assert r.certificate.mirrored
    assert (r.certificate.N, r.certificate.m) == (12, (4, 2))
    assert next(s for s in r.steps if s.id == 'resonance').status == 'skip'
    assert r.verdict == 'consistent'
#===============================================================================
def test_audit_not_complete(e12):
    with pytest.raises(PreconditionError):
        audit(replace(e12, claimed_complete=False))
#===============================================================================
def test_catalog_json(e12):
    c = catalog_from_json(catalog_to_json(e12))
    assert c.orbits == e12.orbits
    assert c.profile == e12.profile
    assert set(c.paths) == {'gamma1', 'gamma2'}
    with pytest.raises(StructuralError):
        catalog_from_json({'orbits': []})
#===============================================================================
@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=2, max_size=3))
def test_ellipsoid_resonance(aspects):
    c = ellipsoid_catalog(EllipsoidSpec(tuple(aspects)), verify_up_to=6)
    n = len(aspects) - 1
    r = resonance_check(c)
    assert r.passed
    assert r.lhs == Fraction((-1)**n, 2)
    assert convexity_check(c).passed
    assert morse_check(c, 4*c.profile.I).passed
#===============================================================================


#===============================================================================
# The code below is for debugging a particular test in an IDE.
# (normally all tests are run with pytest)
#===============================================================================
if __name__=="__main__":
    the_test_you_want_to_debug = test_audit_e12

    print(f"__main__ running {the_test_you_want_to_debug}")
    the_test_you_want_to_debug()
    print('-*# finished #*-')
#===============================================================================
