"""
Module chomology
================
Contact homology bookkeeping for prequantizations M → B: rank tables of the
homology of the contact structure, local and mean Euler characteristics of
orbits, and the checks that a finite catalog of closed orbits must pass if it
is the complete set of orbits of a dynamically convex contact form.

The homology of a prequantization with Robbin-Salamon index I of the fiber
is

    HC_*(ξ) = ⊕_{k≥1} H_{*−kI+n}(B; ℚ)

so that its first nonzero degree is I − n.

:func:`audit` replays the counting argument: common index jump, the identity
Σ mⱼχ̂(γⱼ) = Nχ⁰(ξ), occupancy of the degrees near 2N, the Morse
inequalities, witnesses and perfection. A failed check yields the verdict
'contradiction': the catalog cannot be the complete orbit set of such a
contact form. Missing data or an exhausted search yield 'inconclusive'.
"""
#===============================================================================
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
#===============================================================================
from reebindex import arith
from reebindex.bott import mean_index, iterated_index, iterated_nullity, iterated_upper, \
                           good_iterate, nullity_period, elliptic_flags, index_gap_check, \
                           orbit_to_json, orbit_from_json
from reebindex import cijt
from reebindex.exceptions import StructuralError, DataRequired, SupportViolation, PreconditionError, \
                                 BoundedSearchFailure, PrecisionError
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
@dataclass(frozen=True)
class PrequantProfile:
    """
    Homological data of a prequantization M^{2n+1} → B.

    :param int n:
    :param tuple betti: Betti numbers b₀..b_{2n} of B.
    :param int I: Robbin-Salamon index of the smallest contractible fiber
        multiple, even and at least 2c_B.
    :param int c_B: minimal Chern number of B.
    """
    n: int
    betti: tuple
    I: int
    c_B: int
    name: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'betti', tuple(int(b) for b in self.betti))
        if self.n < 1:
            raise StructuralError(f"Profile needs n >= 1, got {self.n}.")
        if len(self.betti) != 2*self.n + 1 or any(b < 0 for b in self.betti):
            raise StructuralError(f"Expecting {2*self.n + 1} non-negative Betti numbers, got {self.betti}.")
        if self.c_B < 1:
            raise StructuralError(f"c_B must be positive, got {self.c_B}.")
        if self.I < 2 or self.I % 2 or self.I < 2*self.c_B:
            raise StructuralError(f"I must be even and at least 2c_B = {2*self.c_B}, got {self.I}.")
        if self.betti[0] != self.betti[-1]:
            reebindex_log.warning(f"Profile {self.name or ''}: b_0 = {self.betti[0]} != b_2n = {self.betti[-1]}, "
                                  f"violates Poincare duality.")

    @property
    def k_minus(self):
        """Lowest nonzero degree I − n."""
        return self.I - self.n

    @property
    def r_B(self):
        return sum(self.betti)

    @property
    def euler(self):
        return sum((-1)**i*b for i, b in enumerate(self.betti))
#===============================================================================
@dataclass(frozen=True)
class OrbitCatalog:
    """
    The simple closed orbits of a contact form, each given by the Bott data of
    its smallest contractible multiple.

    :param profile: :class:`PrequantProfile`.
    :param tuple orbits: :class:`reebindex.bott.BottData`; unnamed orbits are
        named 'gamma1', 'gamma2', ...
    :param bool claimed_complete: the catalog claims to list all orbits.
    :param dict paths: optional orbit name → generator path.
    """
    profile: PrequantProfile
    orbits: tuple
    claimed_complete: bool = True
    paths: dict = None

    def __post_init__(self):
        orbits = []
        for i, d in enumerate(self.orbits):
            if d.dim2n != 2*self.profile.n:
                raise StructuralError(f"Orbit {d.name or i} has dimension {d.dim2n}, "
                                      f"expecting {2*self.profile.n}.")
            orbits.append(d if d.name else replace(d, name=f"gamma{i + 1}"))
        names = [d.name for d in orbits]
        if len(set(names)) != len(names):
            raise StructuralError(f"Duplicate orbit names in {names}.")
        object.__setattr__(self, 'orbits', tuple(orbits))

    def orbit(self, name):
        for d in self.orbits:
            if d.name == name:
                return d
        raise KeyError(name)

    def without(self, name):
        """The catalog with one orbit removed."""
        return replace(self, orbits=tuple(d for d in self.orbits if d.name != name))
#===============================================================================
# Homology of the prequantization
#===============================================================================
def prequant_rank(p, degree):
    """
    Rank of HC_degree(ξ) = Σ_{k≥1} b_{degree − kI + n}.
    """
    total = 0
    k = 1
    while True:
        i = degree - k*p.I + p.n
        if i < 0:
            return total
        if i <= 2*p.n:
            total += p.betti[i]
        k += 1
#===============================================================================
def hc_window(p, N):
    """
    Ranks of HC_*(ξ) in the degrees 2N − n .. 2N + n.
    """
    return {d: prequant_rank(p, d) for d in range(2*N - p.n, 2*N + p.n + 1)}
#===============================================================================
def chi0(p):
    """
    Mean Euler characteristic (−1)ⁿχ(B)/I.
    """
    return Fraction((-1)**p.n*p.euler, p.I)
#===============================================================================
# Local homology of orbits
#===============================================================================
def totally_degenerate(d):
    """All eigenvalues of the linearized return map are 1."""
    return d.jump_at_one is not None and not d.jumps and d.elliptic_height == d.dim2n
#===============================================================================
def _check_support(d, k, ranks):
    lo, hi = iterated_index(d, k), iterated_upper(d, k)
    outside = {deg: r for deg, r in ranks.items() if r and not lo <= deg <= hi}
    if outside:
        raise SupportViolation(f"Local homology of {d.name or 'orbit'}^{k} has rank in degrees "
                               f"{sorted(outside)} outside [{lo}, {hi}].")
#===============================================================================
def local_ranks(d, k):
    """
    Ranks of the local contact homology of the k-th iterate, as
    {degree: rank}.

    Degenerate iterates are resolved from, in this order: the supplied local
    homology (k = 1), the supplied iterate homology, and the propagation of a
    strongly degenerate maximum or minimum of a totally degenerate orbit.

    :raise: DataRequired, SupportViolation
    """
    if k < 1:
        raise StructuralError(f"Iterate must be positive, got {k}.")
    if iterated_nullity(d, k) == 0:
        return {iterated_index(d, k): 1} if good_iterate(d, k) else {}
    if k == 1 and d.local_homology is not None:
        ranks = {deg: r for deg, r in d.local_homology.items() if r}
        _check_support(d, k, ranks)
        return ranks
    if d.iterate_homology is not None:
        offsets = d.iterate_homology.offsets(k)
        if offsets is not None:
            mu = iterated_index(d, k)
            ranks = {mu + o: r for o, r in offsets.items() if r}
            _check_support(d, k, ranks)
            return ranks
    if totally_degenerate(d) and d.local_homology is not None:
        delta = mean_index(d)
        ranks = {deg: r for deg, r in d.local_homology.items() if r}
        if len(ranks) == 1 and delta.denominator == 1 and delta % 2 == 0:
            (deg, r), = ranks.items()
            if deg == delta + d.n:
                return {k*delta + d.n: r}
            if deg == delta - d.n:
                return {k*delta - d.n: r}
    raise DataRequired(f"Local homology of the degenerate iterate {d.name or 'orbit'}^{k} is required.",
                       orbit=d.name, iterate=k)
#===============================================================================
def local_chi(d, k):
    """
    Local Euler characteristic of the k-th iterate: (−1)^μ for a good
    nondegenerate iterate, 0 for a bad one, the alternating sum of the local
    ranks otherwise.

    :raise: DataRequired
    """
    return sum((-1)**(deg % 2)*r for deg, r in local_ranks(d, k).items())
#===============================================================================
def mean_chi(d):
    """
    Mean Euler characteristic χ̂(γ) = (1/𝔭)Σ_{k=1}^{𝔭} χ(γᵏ).

    The period candidate is the lcm of 2, the nullity period and the period
    of the iterate homology; it is verified over two periods and doubled
    while the verification fails.

    :return: (χ̂, 𝔭)
    :raise: DataRequired, PreconditionError
    """
    period = arith.lcm(2, nullity_period(d), d.iterate_homology.period if d.iterate_homology else 1)
    for _ in range(4):
        values = [local_chi(d, k) for k in range(1, 2*period + 1)]
        if values[:period] == values[period:]:
            return Fraction(sum(values[:period]), period), period
        period *= 2
    raise PreconditionError(f"The local Euler characteristics of {d.name or 'orbit'} are not periodic "
                            f"with period up to {period//2}.")
#===============================================================================
# Catalog checks
#===============================================================================
@dataclass(frozen=True)
class ResonanceResult:
    lhs: object
    rhs: Fraction
    passed: bool
    terms: dict = field(default_factory=dict)
#===============================================================================
def resonance_check(c):
    """
    Compare Σ χ̂(γⱼ)/Δ(γⱼ) with χ⁰(ξ). Exact for exact data; approximate
    data pass when the difference cannot be told from zero.

    :raise: PreconditionError for an orbit with nonpositive mean index,
        DataRequired.
    """
    total = Fraction(0)
    terms = {}
    for d in c.orbits:
        delta = mean_index(d)
        if arith.sign(delta) <= 0:
            raise PreconditionError(f"Resonance needs positive mean indices, {d.name} has "
                                    f"{arith.to_str(delta)}.")
        chi_hat, period = mean_chi(d)
        terms[d.name] = (chi_hat, delta, period)
        total = total + chi_hat/delta if arith.is_exact(delta) else total + delta.__rtruediv__(chi_hat)
    rhs = chi0(c.profile)
    if arith.is_exact(total):
        passed = total == rhs
    else:
        try:
            passed = arith.sign(total - rhs) == 0
        except PrecisionError:
            passed = True
    reebindex_log.debug(f"resonance_check: {arith.to_str(total)} vs {rhs}")
    return ResonanceResult(total, rhs, passed, terms)
#===============================================================================
@dataclass(frozen=True)
class ConvexityResult:
    """
    :param offending: (orbit name, iterate, index) of the first failure.
    :param dict checked_up_to: orbit name → last iterate checked.
    """
    passed: bool
    mode: str
    threshold: int
    offending: tuple = None
    checked_up_to: dict = field(default_factory=dict)
#===============================================================================
def convexity_check(c, mode='positive', threshold_override=None):
    """
    Dynamical convexity: μ⁻(γᵏ) ≥ k_minus for every orbit and iterate
    (positive mode), μ⁺(γᵏ) ≤ −k_minus (negative mode). *threshold_override*
    replaces k_minus, e.g. by n for the relaxed hypothesis.

    Iterates are checked up to the first k with kΔ − n ≥ threshold, beyond
    which the index bound kΔ − n ≤ μ⁻(γᵏ) settles the question. Bad
    nondegenerate iterates are skipped.

    :raise: PreconditionError if the mean index has the wrong sign.
    """
    if mode not in ('positive', 'negative'):
        raise StructuralError(f"Unknown convexity mode '{mode}'.")
    n = c.profile.n
    threshold = c.profile.k_minus if threshold_override is None else threshold_override
    checked = {}
    for d in c.orbits:
        delta = mean_index(d)
        rate = delta if mode == 'positive' else -delta
        if arith.sign(rate) <= 0:
            raise PreconditionError(f"Convexity of {d.name} cannot be decided by a bound: mean index "
                                    f"{arith.to_str(delta)} in {mode} mode.")
        k_star = max(1, arith.ceil((threshold + n)/rate) if arith.is_exact(rate)
                        else arith.ceil(rate.__rtruediv__(threshold + n)))
        checked[d.name] = k_star
        for k in range(1, k_star + 1):
            if iterated_nullity(d, k) == 0 and not good_iterate(d, k):
                continue
            if mode == 'positive':
                value = iterated_index(d, k)
                ok = value >= threshold
            else:
                value = iterated_upper(d, k)
                ok = value <= -threshold
            if not ok:
                reebindex_log.debug(f"convexity_check: {d.name}^{k} has index {value}, threshold {threshold}")
                return ConvexityResult(False, mode, threshold, (d.name, k, value), checked)
    return ConvexityResult(True, mode, threshold, None, checked)
#===============================================================================
def _visible(d):
    """False only for an orbit whose supplied local homology vanishes."""
    try:
        return bool(local_ranks(d, 1)) or d.iterate_homology is not None
    except DataRequired:
        return True
#===============================================================================
def degree_contributions(c, lo, hi):
    """
    Contributions of all iterates of all orbits to the degrees lo..hi.

    :return: {degree: [(orbit name, iterate, rank), ...]}
    :raise: DataRequired, PreconditionError
    """
    n = c.profile.n
    result = {deg: [] for deg in range(lo, hi + 1)}
    for d in c.orbits:
        delta = mean_index(d)
        if arith.sign(delta) <= 0:
            if _visible(d):
                raise PreconditionError(f"Homologically visible orbit {d.name} has nonpositive mean index "
                                        f"{arith.to_str(delta)}.")
            continue
        k_max = arith.floor((hi + n)/delta) + 1 if arith.is_exact(delta) \
                else arith.floor(delta.__rtruediv__(hi + n)) + 1
        for k in range(1, k_max + 1):
            if iterated_upper(d, k) < lo or iterated_index(d, k) > hi:
                continue
            for deg, r in local_ranks(d, k).items():
                if lo <= deg <= hi and r:
                    result[deg].append((d.name, k, r))
    return result
#===============================================================================
@dataclass(frozen=True)
class MorseRow:
    degree: int
    c: int
    b: int
    alternating_c: int
    alternating_b: int
    ok: bool
#===============================================================================
@dataclass(frozen=True)
class MorseResult:
    """
    :param tuple table: :class:`MorseRow` for the degrees n..cutoff.
    :param bool pointwise: c_i ≥ b_i in every degree of the table.
    :param first_violation: first degree where an inequality fails.
    """
    passed: bool
    table: tuple
    pointwise: bool
    first_violation: int = None
#===============================================================================
def morse_check(c, cutoff):
    """
    Morse inequalities c_k − c_{k−1} + ⋯ ± c_n ≥ b_k − b_{k−1} + ⋯ ± b_n for
    n ≤ k ≤ cutoff, with c_i the total local rank of all iterates in degree i
    and b_i = prequant_rank, and the pointwise inequalities c_i ≥ b_i.

    :raise: PreconditionError if the catalog is not claimed complete,
        DataRequired.
    """
    if not c.claimed_complete:
        raise PreconditionError("Morse inequalities need a catalog claimed complete.")
    n = c.profile.n
    if cutoff < n:
        return MorseResult(True, (), True, None)
    contributions = degree_contributions(c, n, cutoff)
    rows = []
    alt_c = alt_b = 0
    first = None
    pointwise = True
    for deg in range(n, cutoff + 1):
        ci = sum(r for _, _, r in contributions[deg])
        bi = prequant_rank(c.profile, deg)
        alt_c = ci - alt_c
        alt_b = bi - alt_b
        ok = alt_c >= alt_b and ci >= bi
        pointwise = pointwise and ci >= bi
        if not ok and first is None:
            first = deg
        rows.append(MorseRow(deg, ci, bi, alt_c, alt_b, ok))
    return MorseResult(first is None, tuple(rows), pointwise, first)
#===============================================================================
@dataclass(frozen=True)
class WindowResult:
    """
    :param dict contributions: {degree: [(orbit name, iterate, rank), ...]}
        for the degrees 2N − n + 1 .. 2N + n.
    :param list extra: (orbit name, iterate, degree) of window contributors
        other than the iterates 2mⱼ.
    :param list short: window degrees with less local rank than HC_*.
    :param int distinct: number of distinct orbits in the window.
    :param int needed: total rank of HC_* in the window.
    :param list degenerate: (orbit name, iterate) of degenerate contributors;
        when nonempty the distinct orbit count is not applied.
    """
    passed: bool
    contributions: dict
    extra: list
    short: list
    distinct: int
    needed: int
    degenerate: list
#===============================================================================
def window_check(c, N, m):
    """
    Occupancy of the degrees 2N − n + 1 .. 2N + n − 1 at a common jump: only
    the iterates γⱼ^{2mⱼ} contribute, every degree carries at least the rank
    of HC_*, and, when all contributing iterates are nondegenerate, at least
    as many distinct orbits as the total rank.

    :param int N: the common jump.
    :param dict m: orbit name → mⱼ.
    :raise: DataRequired, PreconditionError
    """
    p, n = c.profile, c.profile.n
    lo, hi = 2*N - n + 1, 2*N + n - 1
    contributions = degree_contributions(c, lo, 2*N + n)
    window = [(deg, name, k) for deg in range(lo, hi + 1) for name, k, _ in contributions[deg]]
    extra = [(name, k, deg) for deg, name, k in window if k != 2*m[name]]
    short = [deg for deg in range(lo, hi + 1)
             if sum(r for _, _, r in contributions[deg]) < prequant_rank(p, deg)]
    degenerate = sorted({(name, k) for _, name, k in window if iterated_nullity(c.orbit(name), k)})
    distinct = len({name for _, name, _ in window})
    needed = sum(prequant_rank(p, deg) for deg in range(lo, hi + 1))
    passed = not extra and not short and (bool(degenerate) or distinct >= needed)
    return WindowResult(passed, contributions, extra, short, distinct, needed, degenerate)
#===============================================================================
def sdm_candidate(d):
    """
    True iff γ is a strongly degenerate maximum: Δ(γ) is an even integer and
    the local homology has rank in degree Δ + n, where it must be
    concentrated.

    :raise: DataRequired, SupportViolation
    """
    return _strongly_degenerate(d, +1)
#===============================================================================
def sdmin_candidate(d):
    """
    Mirror of :func:`sdm_candidate` at the degree Δ − n.
    """
    return _strongly_degenerate(d, -1)
#===============================================================================
def _strongly_degenerate(d, side):
    if d.jump_at_one is None:
        return False
    if d.local_homology is None:
        raise DataRequired(f"Local homology of {d.name or 'orbit'} is required.", orbit=d.name, iterate=1)
    delta = mean_index(d)
    ranks = {deg: r for deg, r in d.local_homology.items() if r}
    if arith.is_exact(delta):
        lo, hi = delta - d.n, delta + d.n
        outside = [deg for deg in ranks if not lo <= deg <= hi]
        if outside:
            raise SupportViolation(f"Local homology of {d.name or 'orbit'} in degrees {outside} "
                                   f"outside [{lo}, {hi}].")
    if not arith.is_exact(delta) or delta.denominator != 1 or delta % 2:
        return False
    target = delta + side*d.n
    if not ranks.get(target):
        return False
    if len(ranks) > 1:
        raise SupportViolation(f"Local homology of {d.name or 'orbit'} must be concentrated in degree {target}, "
                               f"has ranks {ranks}.")
    return True
#===============================================================================
@dataclass(frozen=True)
class PerfectionResult:
    """
    :param bool resolved: the local homology of every iterate examined is known.
    :param bool perfect: all local homology sits in degrees of one parity.
    :param parity: that parity, or None.
    :param tuple even_orbits: orbits whose second iterate is good.
    """
    resolved: bool
    perfect: bool
    parity: object
    even_orbits: tuple
    even_count: int
    r_B: int
    count_matches: bool
#===============================================================================
def perfection(c, up_to=None):
    """
    Geometric perfection: the local homology of all iterates k ≤ *up_to*
    (default twice the largest period) lives in degrees of one parity. An
    orbit is even when χ(γ²) = χ(γ) ≠ 0. A perfect complete catalog has
    exactly r_B even orbits.
    """
    parities = set()
    even = []
    resolved = True
    for d in c.orbits:
        try:
            period = mean_chi(d)[1]
            limit = up_to or 2*period
            for k in range(1, limit + 1):
                parities |= {deg % 2 for deg, r in local_ranks(d, k).items() if r}
            if local_chi(d, 1) != 0 and local_chi(d, 2) == local_chi(d, 1):
                even.append(d.name)
        except (DataRequired, PreconditionError):
            resolved = False
    perfect = resolved and len(parities) <= 1
    parity = next(iter(parities)) if perfect and parities else None
    r_B = c.profile.r_B
    return PerfectionResult(resolved, perfect, parity, tuple(even), len(even), r_B, len(even) == r_B)
#===============================================================================
# Audit
#===============================================================================
@dataclass(frozen=True)
class AuditOptions:
    """
    :param str mode: 'positive' or 'negative' dynamical convexity.
    :param int relaxed_threshold: convexity threshold replacing k_minus.
    :param int n0: N₀ of the jump search, default I.
    :param epsilon: ε of the jump search, default from the mean Euler
        characteristics.
    """
    mode: str = 'positive'
    relaxed_threshold: int = None
    search_bound: int = 10**6
    n0: int = None
    epsilon: Fraction = None
    n_jobs: int = 1
#===============================================================================
@dataclass(frozen=True)
class AuditStep:
    id: str
    status: str
    detail: str = ''
#===============================================================================
@dataclass
class AuditReport:
    """
    Outcome of :func:`audit`. *verdict* is 'consistent', 'contradiction' or
    'inconclusive'; *reason* names the first failed step in pipeline order.
    """
    verdict: str = 'consistent'
    reason: str = ''
    steps: list = field(default_factory=list)
    convexity: ConvexityResult = None
    resonance: ResonanceResult = None
    certificate: object = None
    morse: MorseResult = None
    window: dict = field(default_factory=dict)
    counting_identity: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    perfection: PerfectionResult = None
    excluded: list = field(default_factory=list)

    @property
    def failed(self):
        return [s.id for s in self.steps if s.status == 'fail']

    def record(self, id, passed, detail=''):
        status = 'pass' if passed is True else 'fail' if passed is False else passed
        self.steps.append(AuditStep(id, status, detail))
        reebindex_log.debug(f"audit: {id}: {status} {detail}")
        return passed is True
#===============================================================================
def audit(c, options=None):
    """
    Replay the multiplicity argument on a catalog claimed complete.

    :param OrbitCatalog c:
    :param AuditOptions options:
    :rtype: AuditReport
    :raise: PreconditionError if the catalog is not claimed complete, or a
        homologically visible orbit has nonpositive mean index.
    """
    options = AuditOptions() if options is None else options
    if not c.claimed_complete:
        raise PreconditionError("The audit needs a catalog claimed complete.")
    report = AuditReport()
    p = c.profile
    n = p.n

    # orbits with vanishing local homology do not take part in the counting
    kept = []
    for d in c.orbits:
        delta = mean_index(d)
        sign = arith.sign(delta) if options.mode == 'positive' else -arith.sign(delta)
        if sign <= 0:
            if _visible(d):
                raise PreconditionError(f"Homologically visible orbit {d.name} has mean index "
                                        f"{arith.to_str(delta)} in {options.mode} mode.")
            report.excluded.append(d.name)
        else:
            kept.append(d)
    cat = replace(c, orbits=tuple(kept))

    try:
        _run_pipeline(cat, options, report)
    except DataRequired as e:
        report.record('data', 'inconclusive', str(e))
        report.witnesses.setdefault('blocking', {'orbit': e.orbit, 'iterate': e.iterate})

    # verdict
    failed = report.failed
    inconclusive = [s for s in report.steps if s.status == 'inconclusive']
    if failed:
        report.verdict, report.reason = 'contradiction', failed[0]
        if n == 2 and len(cat.orbits) == 1 and totally_degenerate(cat.orbits[0]) \
                and cat.orbits[0].jump_at_one.s == 0:
            report.verdict = 'inconclusive'
            report.reason = (f"{failed[0]}: a single totally degenerate orbit with S+(1) = 0 for n = 2 "
                             f"may be a strongly degenerate maximum, which this audit does not decide")
    elif inconclusive:
        report.verdict, report.reason = 'inconclusive', f"{inconclusive[0].id}: {inconclusive[0].detail}"
    reebindex_log.debug(f"audit: verdict {report.verdict} ({report.reason})")
    return report
#===============================================================================
def _run_pipeline(c, options, report):
    p = c.profile
    n = p.n

    # 1. convexity
    report.convexity = convexity_check(c, options.mode, options.relaxed_threshold)
    report.record('convexity', report.convexity.passed,
                  '' if report.convexity.passed else f"offending (orbit, iterate, index) = {report.convexity.offending}")
    report.witnesses['elliptic'] = [d.name for d in c.orbits if elliptic_flags(d).elliptic]

    if options.mode == 'negative':
        cert = _jump(c, options, report, mirrored=True)
        for step in ('resonance', 'jump-euler-sum', 'morse', 'window-occupancy', 'top-degree'):
            report.record(step, 'skip', 'positive mode only')
        return

    # 2. resonance
    report.resonance = resonance_check(c)
    report.record('resonance', report.resonance.passed,
                  f"sum chi/Delta = {arith.to_str(report.resonance.lhs)}, chi0 = {arith.to_str(report.resonance.rhs)}")

    # 3. common index jump
    cert = _jump(c, options, report)
    if cert is None:
        return
    N, m = cert.N, dict(zip([d.name for d in c.orbits], cert.m))

    # 4. euler characteristics at the jump
    chis = {d.name: report.resonance.terms[d.name][0] for d in c.orbits}
    lhs = sum(m[name]*chis[name] for name in m)
    rhs = N*chi0(p)
    report.counting_identity['jump-euler-sum'] = {'lhs': lhs, 'rhs': rhs}
    report.record('jump-euler-sum', lhs == rhs, f"sum m_j chi_j = {lhs}, N chi0 = {rhs}")

    # 5. Morse inequalities below the top of the window
    cutoff = 2*N + n - 1
    report.morse = morse_check(c, cutoff)
    report.record('morse', report.morse.passed,
                  '' if report.morse.passed else f"first violation in degree {report.morse.first_violation}")

    # 6. window occupancy
    lo, hi = 2*N - n + 1, 2*N + n - 1
    window = window_check(c, N, m)
    contributions = window.contributions
    report.window = contributions
    count = (f"distinct orbit count not applied, degenerate iterates {window.degenerate}" if window.degenerate
             else f"{window.distinct} distinct orbits for total rank {window.needed}")
    report.record('window-occupancy', window.passed,
                  f"extra iterates {window.extra}, degrees short of rank {window.short}, {count}")
    strong = all(iterated_index(d, 1) > n for d in c.orbits)
    bound = p.r_B if strong else p.r_B - 2
    report.counting_identity['orbit_lower_bound'] = {'orbits': len(c.orbits), 'bound': bound}
    report.record('orbit-lower-bound', len(c.orbits) >= bound, f"{len(c.orbits)} orbits, at least {bound} needed")

    # 7. top degree
    top = 2*N + n
    top_contributors = [name for name, k, _ in contributions[top] if k == 2*m[name]]
    report.witnesses['top_degree'] = top_contributors
    s = N//p.I
    alt_c = sum((-1)**(row.degree % 2)*row.c for row in report.morse.table)
    alt_b = sum((-1)**(row.degree % 2)*row.b for row in report.morse.table)
    last = report.morse.table[-1] if report.morse.table else None
    report.counting_identity.update({
        'c_alternating': alt_c,
        'b_alternating': alt_b,
        'chi_sum': sum(2*m[name]*chis[name] for name in m),
        'expected_c': (-1)**n*2*s*p.euler,
        'expected_b': (-1)**n*2*s*p.euler + (-1)**(n + 1),
        'morse_lhs': None if last is None else last.alternating_c,
        'morse_rhs': None if last is None else last.alternating_b,
    })
    if top_contributors:
        report.record('top-degree', True, f"degree {top} reached by {top_contributors}")
        not_elliptic = [name for name in top_contributors if not elliptic_flags(c.orbit(name)).elliptic]
        report.record('elliptic-witness', not not_elliptic, f"non elliptic top contributors {not_elliptic}")
    elif p.euler == 0:
        report.record('top-degree', 'inconclusive', f"no orbit reaches degree {top} and chi(B) = 0")
    else:
        report.record('top-degree', False,
                      f"no orbit reaches degree {top}; the alternating counts would read "
                      f"{report.counting_identity['expected_c']} >= {report.counting_identity['expected_b']}")
    if len(c.orbits) == 1:
        if p.euler == 0:
            report.record('single-orbit', 'inconclusive', "chi(B) = 0")
        else:
            report.record('single-orbit', False, "a complete catalog has at least two simple orbits")

    # 8. witnesses
    sdm = []
    for d in c.orbits:
        if totally_degenerate(d):
            try:
                if sdm_candidate(d) or sdmin_candidate(d):
                    sdm.append(d.name)
            except (DataRequired, SupportViolation):
                pass
    report.witnesses['sdm'] = sdm
    if n % 2 == 1 and all(b == 0 for b in p.betti[1::2]):
        visible = [name for deg in range(lo, hi + 1) if prequant_rank(p, deg)
                   for name, k, _ in contributions[deg] if k == 2*m[name]]
        hyperbolic = sorted({name for name in visible if elliptic_flags(c.orbit(name)).hyperbolic})
        report.witnesses['non_hyperbolic'] = sorted(set(visible) - set(hyperbolic))
        report.record('non-hyperbolic', not hyperbolic, f"hyperbolic orbits in odd degrees {hyperbolic}")
    at_n = [d.name for d in c.orbits if iterated_index(d, 1) == n]
    report.witnesses['index_at_n'] = {
        'orbits_at_n': at_n,
        'I_equals_2n': p.I == 2*n,
        'index_gap': {name: index_gap_check(c.orbit(name), m[name]) for name in at_n if m[name] >= 2},
    }

    # 9. perfection
    report.perfection = perfection(c)
    if report.perfection.perfect:
        report.record('perfection-count', report.perfection.count_matches,
                      f"{report.perfection.even_count} even orbits, r_B = {p.r_B}")
#===============================================================================
def _jump(c, options, report, mirrored=False):
    """Run the common index jump search with an epsilon small enough for the euler sum."""
    p = c.profile
    if not c.orbits:
        report.record('cijt', 'skip', 'empty catalog')
        return None
    periods = []
    weight = Fraction(0)
    if not mirrored:
        for d in c.orbits:
            chi_hat, period = report.resonance.terms[d.name][0], report.resonance.terms[d.name][2]
            periods.append(period)
            weight += abs(chi_hat)
    q_param = arith.lcm(cijt.choose_q(c.orbits), *periods)
    epsilon = options.epsilon
    if epsilon is None:
        epsilon = cijt.default_epsilon(len(c.orbits), q_param)
        if weight:
            # |Σ ρⱼχ̂ⱼ| < 1
            epsilon = min(epsilon, 1/(2*q_param*weight))
    n0 = p.I if options.n0 is None else options.n0
    try:
        cert = cijt.find_jump(c.orbits, n0, epsilon, options.search_bound, extra_q_multiple=q_param,
                              mirrored=mirrored, n_jobs=options.n_jobs)
    except BoundedSearchFailure as e:
        report.record('cijt', 'inconclusive', str(e))
        return None
    report.certificate = cert
    report.record('cijt', cert.passed, f"N = {cert.N}, m = {cert.m}")
    return cert
#===============================================================================
# JSON
#===============================================================================
def profile_to_json(p):
    return {'name': p.name, 'n': p.n, 'betti': list(p.betti), 'I': p.I, 'c_B': p.c_B}
#===============================================================================
def profile_from_json(obj):
    try:
        return PrequantProfile(int(obj['n']), tuple(int(b) for b in obj['betti']), int(obj['I']),
                               int(obj['c_B']), obj.get('name', ''))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, StructuralError):
            raise
        raise StructuralError(f"Malformed profile: {e}") from e
#===============================================================================
def catalog_to_json(c):
    from reebindex.sympath import path_to_json
    obj = {'profile': profile_to_json(c.profile),
           'orbits': [orbit_to_json(d) for d in c.orbits],
           'claimed_complete': c.claimed_complete,
          }
    if c.paths:
        obj['paths'] = {name: path_to_json(path) for name, path in c.paths.items()}
    return obj
#===============================================================================
def catalog_from_json(obj, tolerances=None):
    """
    :raise: StructuralError
    """
    from reebindex.sympath import path_from_json
    try:
        profile = profile_from_json(obj['profile'])
        orbits = tuple(orbit_from_json(o) for o in obj['orbits'])
        paths = obj.get('paths')
        if paths:
            paths = {name: path_from_json(path, tolerances) for name, path in paths.items()}
        return OrbitCatalog(profile, orbits, bool(obj.get('claimed_complete', True)), paths or None)
    except (KeyError, TypeError) as e:
        raise StructuralError(f"Malformed catalog: {e}") from e
#===============================================================================
def report_to_json(r):
    """
    JSON record of an :class:`AuditReport`.
    """
    obj = {'verdict': r.verdict,
           'reason': r.reason,
           'failed': r.failed,
           'steps': [{'id': s.id, 'status': s.status, 'detail': s.detail} for s in r.steps],
           'excluded': list(r.excluded),
           'window': {str(deg): [list(x) for x in v] for deg, v in r.window.items()},
           'counting_identity': r.counting_identity,
           'witnesses': r.witnesses,
          }
    if r.convexity is not None:
        obj['convexity'] = {'passed': r.convexity.passed, 'mode': r.convexity.mode,
                            'threshold': r.convexity.threshold,
                            'offending': None if r.convexity.offending is None else list(r.convexity.offending),
                            'checked_up_to': r.convexity.checked_up_to}
    if r.resonance is not None:
        obj['resonance'] = {'lhs': arith.to_str(r.resonance.lhs), 'rhs': arith.to_str(r.resonance.rhs),
                            'passed': r.resonance.passed,
                            'terms': {name: {'chi_hat': arith.to_str(chi), 'mean_index': arith.to_str(delta),
                                             'period': period}
                                      for name, (chi, delta, period) in r.resonance.terms.items()}}
    if r.certificate is not None:
        obj['certificate'] = cijt.certificate_to_json(r.certificate)
    if r.morse is not None:
        obj['morse'] = {'passed': r.morse.passed, 'pointwise': r.morse.pointwise,
                        'first_violation': r.morse.first_violation,
                        'table': [[row.degree, row.c, row.b, row.alternating_c, row.alternating_b, row.ok]
                                  for row in r.morse.table]}
    if r.perfection is not None:
        pf = r.perfection
        obj['perfection'] = {'resolved': pf.resolved, 'perfect': pf.perfect, 'parity': pf.parity,
                             'even_orbits': list(pf.even_orbits), 'even_count': pf.even_count,
                             'r_B': pf.r_B, 'count_matches': pf.count_matches}
    return obj
#===============================================================================
