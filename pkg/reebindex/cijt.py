"""
Module cijt
===========
Certified search for common index jumps of a finite collection of orbits with
positive mean index.

For N = k·N₀ and mⱼ = (⌊N/(𝔮Δⱼ)⌋ + δⱼ)·𝔮, δⱼ ∈ {0, 1}, a
:class:`CijtCertificate` records the following relations, each recomputed
from the Bott data of the orbits:

* nullity: ν(γⱼ) = ν(γⱼ^{2mⱼ−1}) = ν(γⱼ^{2mⱼ+1});
* index-below: μ⁻(γⱼ^{2mⱼ−1}) = 2N − μ⁻(γⱼ) − 2Sⱼ⁺(1);
* index-above: μ⁻(γⱼ^{2mⱼ+1}) = 2N + μ⁻(γⱼ);
* middle-lower: μ⁻(γⱼ^{2mⱼ}) ≥ 2N − e(γⱼ)/2;
* middle-upper: μ⁺(γⱼ^{2mⱼ}) ≤ 2N + e(γⱼ)/2;

together with the form of mⱼ, the ε bound |N/(𝔮Δⱼ) − ⌊N/(𝔮Δⱼ)⌋ − δⱼ| < ε,
the closeness |2mⱼΔⱼ − 2N| ≤ 2𝔮Δⱼ(ε + 1) and, on request, the closeness of
mⱼα to the integers for every unit eigenphase e^{iπα}.

Orbits with negative mean index are handled by ``mirrored=True``: the search
runs on the inverted data and the conclusions are verified in their μ⁺ form
(ids with the suffix -mirrored).
"""
#===============================================================================
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
#===============================================================================
from joblib import Parallel, delayed
#===============================================================================
from reebindex import arith
from reebindex import serialize
from reebindex.bott import mean_index, iterated_index, iterated_nullity, iterated_upper, elliptic_flags
from reebindex.exceptions import StructuralError, PreconditionError, BoundedSearchFailure
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
CHECK_IDS = ('nullity', 'index-below', 'index-above', 'middle-lower', 'middle-upper',
             'm-form', 'eps-bound', 'closeness', 'frac-closeness')
MIRRORED_CHECK_IDS = CHECK_IDS[:1] + tuple(f'{c}-mirrored' for c in CHECK_IDS[1:5]) + CHECK_IDS[5:]
_CHUNK = 512
#===============================================================================
@dataclass(frozen=True)
class Check:
    """
    One verified relation.

    :param str id: one of :data:`CHECK_IDS` or :data:`MIRRORED_CHECK_IDS`.
    :param orbit: index of the orbit, None for checks on N itself.
    :param bool passed:
    :param lhs: computed left hand side.
    :param rhs: computed right hand side.
    :param str relation: '=', '<=', '>=' or '<'.
    """
    id: str
    orbit: object
    passed: bool
    lhs: object
    rhs: object
    relation: str = '='
#===============================================================================
@dataclass(frozen=True)
class CijtCertificate:
    N: int
    k_factor: int
    n0: int
    m: tuple
    delta: tuple
    q_param: int
    epsilon: Fraction
    frac_delta: Fraction = None
    mirrored: bool = False
    checks: tuple = field(default=(), compare=False)

    @property
    def passed(self):
        return bool(self.checks) and all(c.passed for c in self.checks)

    def summary(self):
        """
        Map check id → True if the check passed for every orbit.
        """
        result = {}
        for c in self.checks:
            result[c.id] = result.get(c.id, True) and c.passed
        return result

    def failed(self):
        return [c for c in self.checks if not c.passed]
#===============================================================================
def choose_q(orbits):
    """
    Least 𝔮 such that 𝔮α is an integer for every exact jump angle α (in
    multiples of π) of every orbit. Approximate angles impose no condition.
    """
    return arith.lcm(*[j.angle.denominator for d in orbits for j in d.jumps if arith.is_exact(j.angle)])
#===============================================================================
def default_epsilon(q, q_param):
    """ε = 1/(4·q·𝔮) for q orbits."""
    return Fraction(1, 4*max(q, 1)*q_param)
#===============================================================================
def _search_data(orbits, mirrored):
    """
    The data the search runs on, after checking the sign of the mean indices.
    """
    search = [d.inverted() for d in orbits] if mirrored else list(orbits)
    for j, d in enumerate(orbits):
        delta = mean_index(search[j])
        if arith.sign(delta) <= 0:
            expected = 'negative' if mirrored else 'positive'
            raise PreconditionError(f"Orbit {j} ({d.name or 'unnamed'}) has mean index "
                                    f"{arith.to_str(mean_index(d))}, expecting a {expected} mean index.")
    return search
#===============================================================================
def _quotient(N, q_param, delta):
    """N/(𝔮Δ) and its floor."""
    x = N/(q_param*delta) if not arith.is_exact(delta) else Fraction(N)/(q_param*delta)
    return x, arith.floor(x)
#===============================================================================
def _below(x, bound, strict=True):
    c = arith.compare(x, bound)
    return c < 0 if strict else c <= 0
#===============================================================================
def _abs_below(x, bound, strict=True):
    return _below(x, bound, strict) and _below(-x, bound, strict)
#===============================================================================
def _candidates(search, deltas, N, q_param, epsilon):
    """
    δ vectors for N passing the ε bound, in increasing binary order, with the
    corresponding m vectors.
    """
    options = []
    floors = []
    for d_mean in deltas:
        x, f = _quotient(N, q_param, d_mean)
        floors.append(f)
        ok = [dl for dl in (0, 1) if f + dl >= 1 and _abs_below(x - f - dl, epsilon)]
        if not ok:
            return
        options.append(ok)
    for dv in itertools.product(*options):
        yield dv, tuple((f + dl)*q_param for f, dl in zip(floors, dv))
#===============================================================================
def _jump_checks(j, d, d_search, N, m, mirrored):
    """The index relations for orbit j."""
    checks = []
    nu = iterated_nullity(d, 1)
    lhs = (iterated_nullity(d, 2*m - 1), iterated_nullity(d, 2*m + 1))
    checks.append(Check('nullity', j, lhs == (nu, nu), lhs, nu))
    e = elliptic_flags(d).e
    if not mirrored:
        s1 = d.jump_at_one.s if d.jump_at_one else 0
        lhs, rhs = iterated_index(d, 2*m - 1), 2*N - d.b_at_one - 2*s1
        checks.append(Check('index-below', j, lhs == rhs, lhs, rhs))
        lhs, rhs = iterated_index(d, 2*m + 1), 2*N + d.b_at_one
        checks.append(Check('index-above', j, lhs == rhs, lhs, rhs))
        lhs, rhs = iterated_index(d, 2*m), 2*N - Fraction(e, 2)
        checks.append(Check('middle-lower', j, lhs >= rhs, lhs, rhs, '>='))
        lhs, rhs = iterated_upper(d, 2*m), 2*N + Fraction(e, 2)
        checks.append(Check('middle-upper', j, lhs <= rhs, lhs, rhs, '<='))
    else:
        # splitting number at 1 of the inverse map
        s1 = d_search.jump_at_one.s if d_search.jump_at_one else 0
        upper1 = iterated_upper(d, 1)
        lhs, rhs = iterated_upper(d, 2*m - 1), -2*N - upper1 + 2*s1
        checks.append(Check('index-below-mirrored', j, lhs == rhs, lhs, rhs))
        lhs, rhs = iterated_upper(d, 2*m + 1), -2*N + upper1
        checks.append(Check('index-above-mirrored', j, lhs == rhs, lhs, rhs))
        lhs, rhs = iterated_upper(d, 2*m), -2*N + Fraction(e, 2)
        checks.append(Check('middle-lower-mirrored', j, lhs <= rhs, lhs, rhs, '<='))
        lhs, rhs = iterated_index(d, 2*m), -2*N - Fraction(e, 2)
        checks.append(Check('middle-upper-mirrored', j, lhs >= rhs, lhs, rhs, '>='))
    return checks
#===============================================================================
def _form_checks(j, d_search, N, m, dl, q_param, epsilon, frac_delta):
    """m-form, ε bound, closeness and fractional closeness for orbit j."""
    checks = []
    delta = mean_index(d_search)
    x, f = _quotient(N, q_param, delta)
    expected = (f + dl)*q_param
    checks.append(Check('m-form', j, m == expected and dl in (0, 1) and m >= 1, m, expected))
    g = x - f - dl
    checks.append(Check('eps-bound', j, _abs_below(g, epsilon), g, epsilon, '<'))
    gap = 2*m*delta - 2*N
    bound = 2*q_param*delta*(epsilon + 1)
    checks.append(Check('closeness', j, _abs_below(gap, bound, strict=False), gap, bound, '<='))
    if frac_delta is not None:
        worst = Fraction(0)
        for jump in d_search.jumps:
            dist = arith.distance_to_integers(m*jump.angle)
            if arith.compare(dist, worst) > 0:
                worst = dist
        checks.append(Check('frac-closeness', j, _below(worst, frac_delta), worst, frac_delta, '<'))
    return checks
#===============================================================================
def _all_checks(orbits, search, cert):
    checks = [Check('m-form', None, cert.N == cert.k_factor*cert.n0, cert.N, cert.k_factor*cert.n0)]
    for j, (d, ds) in enumerate(zip(orbits, search)):
        m, dl = cert.m[j], cert.delta[j]
        checks += _form_checks(j, ds, cert.N, m, dl, cert.q_param, cert.epsilon, cert.frac_delta)
        if m >= 1:
            checks += _jump_checks(j, d, ds, cert.N, m, cert.mirrored)
    return tuple(checks)
#===============================================================================
def _scan(orbits, search, ks, n0, q_param, epsilon, frac_delta, mirrored):
    """
    First certificate for k in *ks* (in order), or None.
    """
    deltas = [mean_index(d) for d in search]
    for k in ks:
        N = k*n0
        for dv, m in _candidates(search, deltas, N, q_param, epsilon):
            cert = CijtCertificate(N, k, n0, m, dv, q_param, epsilon, frac_delta, mirrored)
            checks = _all_checks(orbits, search, cert)
            if all(c.passed for c in checks):
                return CijtCertificate(N, k, n0, m, dv, q_param, epsilon, frac_delta, mirrored, checks)
    return None
#===============================================================================
def find_jump(orbits, n0, epsilon=None, search_bound=10**6, extra_q_multiple=None,
              frac_delta=None, mirrored=False, n_jobs=1):
    """
    Search N = k·N₀, k = 1..search_bound, and δ vectors in increasing binary
    order for the first fully verified :class:`CijtCertificate`.

    :param list orbits: :class:`reebindex.bott.BottData`, positive mean index
        (negative with *mirrored*).
    :param int n0: N₀.
    :param epsilon: ε, default :func:`default_epsilon`.
    :param int extra_q_multiple: 𝔮 is taken as lcm(choose_q, extra_q_multiple).
    :param frac_delta: bound on the distance of mⱼα to the integers.
    :param int n_jobs: number of joblib workers scanning chunks of k.
    :raise: PreconditionError, BoundedSearchFailure
    """
    orbits = list(orbits)
    if not orbits:
        raise PreconditionError("find_jump needs at least one orbit.")
    if not isinstance(n0, int) or n0 < 1:
        raise PreconditionError(f"N0 must be a positive integer, got {n0!r}.")
    search = _search_data(orbits, mirrored)
    q_param = choose_q(search)
    if extra_q_multiple:
        q_param = arith.lcm(q_param, extra_q_multiple)
    epsilon = default_epsilon(len(orbits), q_param) if epsilon is None else arith.to_fraction(epsilon)
    if epsilon <= 0:
        raise PreconditionError(f"epsilon must be positive, got {epsilon}.")
    if frac_delta is not None:
        frac_delta = arith.to_fraction(frac_delta)
    reebindex_log.debug(f"find_jump: {len(orbits)} orbits, N0={n0}, q={q_param}, eps={epsilon}, "
                        f"bound={search_bound}, mirrored={mirrored}")
    args = (n0, q_param, epsilon, frac_delta, mirrored)
    if n_jobs == 1:
        cert = _scan(orbits, search, range(1, search_bound + 1), *args)
    else:
        cert = None
        exact = all(arith.is_exact(j.angle) for d in search for j in d.jumps)
        backend = 'loky' if exact else 'threading'
        chunks = [range(lo, min(lo + _CHUNK, search_bound + 1)) for lo in range(1, search_bound + 1, _CHUNK)]
        workers = n_jobs if n_jobs > 0 else 8
        with Parallel(n_jobs=n_jobs, backend=backend) as parallel:
            for b in range(0, len(chunks), workers):
                results = parallel(delayed(_scan)(orbits, search, ks, *args) for ks in chunks[b:b + workers])
                # chunks are in increasing k, the first hit is the smallest
                cert = next((r for r in results if r is not None), None)
                if cert is not None:
                    break
                reebindex_log.debug(f"find_jump: no certificate for k < {chunks[min(b + workers, len(chunks)) - 1].stop}")
    if cert is None:
        raise BoundedSearchFailure(f"No common index jump with N = k*{n0}, k <= {search_bound}, q={q_param}, "
                                   f"eps={epsilon}. The search is bounded, this does not refute existence.")
    reebindex_log.debug(f"find_jump: N={cert.N}, m={cert.m}, delta={cert.delta}")
    return cert
#===============================================================================
def verify_certificate(orbits, cert):
    """
    Recompute every check of *cert* from scratch.

    :return: tuple of :class:`Check`.
    :raise: StructuralError for a malformed certificate.
    """
    orbits = list(orbits)
    if len(cert.m) != len(orbits) or len(cert.delta) != len(orbits):
        raise StructuralError(f"Certificate for {len(cert.m)} orbits, got {len(orbits)} orbits.")
    for name in ('N', 'k_factor', 'n0', 'q_param'):
        v = getattr(cert, name)
        if not isinstance(v, int) or v < 1:
            raise StructuralError(f"Certificate field {name} must be a positive integer, got {v!r}.")
    if any(dl not in (0, 1) for dl in cert.delta) or any(not isinstance(m, int) for m in cert.m):
        raise StructuralError("Certificate delta values must be 0 or 1 and m values integers.")
    if not cert.epsilon > 0:
        raise StructuralError(f"Certificate epsilon must be positive, got {cert.epsilon}.")
    search = [d.inverted() for d in orbits] if cert.mirrored else orbits
    return _all_checks(orbits, search, cert)
#===============================================================================
def certificate_to_json(cert):
    return {'N': cert.N,
            'k_factor': cert.k_factor,
            'n0': cert.n0,
            'm': list(cert.m),
            'delta': list(cert.delta),
            'q_param': cert.q_param,
            'epsilon': arith.to_str(cert.epsilon),
            'frac_delta': None if cert.frac_delta is None else arith.to_str(cert.frac_delta),
            'mirrored': cert.mirrored,
            'checks': [{'id': c.id, 'orbit': c.orbit, 'passed': c.passed, 'relation': c.relation,
                        'lhs': _value_to_json(c.lhs), 'rhs': _value_to_json(c.rhs)} for c in cert.checks],
            'summary': cert.summary(),
           }
#===============================================================================
def _value_to_json(x):
    if isinstance(x, tuple):
        return [_value_to_json(v) for v in x]
    if isinstance(x, int):
        return x
    return arith.to_str(x)
#===============================================================================
def certificate_from_json(obj):
    """
    :raise: StructuralError
    """
    try:
        checks = tuple(Check(c['id'], c['orbit'], bool(c['passed']), serialize.decode(c['lhs']),
                             serialize.decode(c['rhs']), c.get('relation', '='))
                       for c in obj.get('checks', []))
        frac_delta = obj.get('frac_delta')
        return CijtCertificate(int(obj['N']), int(obj['k_factor']), int(obj['n0']),
                               tuple(int(m) for m in obj['m']), tuple(int(d) for d in obj['delta']),
                               int(obj['q_param']), arith.to_fraction(obj['epsilon']),
                               None if frac_delta is None else arith.to_fraction(frac_delta),
                               bool(obj.get('mirrored', False)), checks)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, StructuralError):
            raise
        raise StructuralError(f"Malformed certificate: {e}") from e
#===============================================================================
