"""
Module bott
===========
Bott's index function of a closed orbit and the iteration formulas built on it.

The Bott function 𝔅: S¹ → ℤ of a path Γ is described by :class:`BottData`:
its value 𝔅(1) = μ⁻(Γ), the splitting numbers at the eigenvalue 1, and a
list of :class:`BottJump` at the unit eigenvalues e^{iπα}, 0 < α ≤ 1, of the
upper semicircle. Angles are multiples of π throughout this module, exact
(:class:`fractions.Fraction`) or approximate
(:class:`reebindex.arith.ApproxReal`).

Between jumps 𝔅 is constant. At a jump with splitting numbers (S⁺, S⁻)

    𝔅(e^{iπα}) = (arc value below α) − S⁻ = (arc value above α) − S⁺

and the lower semicircle is the mirror image, 𝔅(z̄) = 𝔅(z). The k-th iterate
has μ⁻(Γᵏ) = Σ_{zᵏ=1} 𝔅(z).
"""
#===============================================================================
import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, reduce
#===============================================================================
import numpy as np
import sympy as sp
#===============================================================================
from reebindex import arith
from reebindex.exceptions import StructuralError, InferenceError, AmbiguityError, \
                                 NotRepresentable, PreconditionError
from reebindex import sympath
from reebindex.sympath import Eigenphase, merge_spectrum, elliptic_height_of, representative
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
@dataclass(frozen=True)
class BottJump:
    """
    Jump of 𝔅 at e^{iπ·angle}, 0 < angle ≤ 1.

    :param angle: Fraction in (0, 1] or ApproxReal.
    :param int s_plus: S⁺, the jump from the point value to the arc above.
    :param int s_minus: S⁻, the jump from the point value to the arc below.
    :param int nu: geometric multiplicity of the eigenvalue.
    """
    angle: object
    s_plus: int
    s_minus: int
    nu: int

    def __post_init__(self):
        if arith.is_exact(self.angle):
            angle = arith.to_fraction(self.angle)
            if not 0 < angle <= 1:
                raise StructuralError(f"Jump angle must lie in (0, 1] (multiples of pi), got {angle}.")
            object.__setattr__(self, 'angle', angle)
        if self.nu < 1:
            raise StructuralError(f"Jump multiplicity must be positive, got {self.nu}.")
        if not (0 <= self.s_plus <= self.nu and 0 <= self.s_minus <= self.nu):
            raise StructuralError(f"Splitting numbers ({self.s_plus}, {self.s_minus}) outside [0, {self.nu}].")
        if self.at_pi and self.s_plus != self.s_minus:
            raise StructuralError("At the eigenvalue -1 the splitting numbers must agree.")

    @property
    def at_pi(self):
        return arith.is_exact(self.angle) and self.angle == 1

    @property
    def weight(self):
        """Number of eigenvalues the jump stands for: 1 at −1, 2 for a conjugate pair."""
        return 1 if self.at_pi else 2
#===============================================================================
@dataclass(frozen=True)
class OneJump:
    """
    Splitting numbers S⁺(1) = S⁻(1) = s and nullity nu at the eigenvalue 1.
    """
    s: int
    nu: int

    def __post_init__(self):
        if self.nu < 1 or not 0 <= self.s <= self.nu:
            raise StructuralError(f"Invalid jump at one: s={self.s}, nu={self.nu}.")
#===============================================================================
@dataclass(frozen=True)
class IterateHomology:
    """
    Local homology of the degenerate iterates, periodic in the iterate number.

    :param int period: the period P.
    :param dict entries: residue k mod P → {offset: rank}, the degree being
        μ⁻(γᵏ) + offset. Residues without an entry are nondegenerate.
    """
    period: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.period < 1:
            raise StructuralError(f"Iterate homology period must be positive, got {self.period}.")
        entries = {int(r) % self.period: {int(o): int(n) for o, n in v.items()}
                   for r, v in self.entries.items()}
        object.__setattr__(self, 'entries', entries)

    def offsets(self, k):
        return self.entries.get(k % self.period)
#===============================================================================
@dataclass(frozen=True)
class EllipticFlags:
    elliptic: bool
    hyperbolic: bool
    e: int
#===============================================================================
@dataclass(frozen=True)
class BottData:
    """
    Spectral description of an orbit.

    :param int dim2n: dimension 2n.
    :param int b_at_one: 𝔅(1) = μ⁻(γ).
    :param tuple jumps: :class:`BottJump` on the upper semicircle.
    :param jump_at_one: :class:`OneJump` or None (1 not an eigenvalue).
    :param int elliptic_height: e(γ), total algebraic multiplicity of the
        unit eigenvalues.
    :param dict local_homology: degree → rank of the local homology of the
        orbit itself, for degenerate orbits.
    :param iterate_homology: :class:`IterateHomology` for degenerate iterates.
    :param str name: orbit name in a catalog.
    """
    dim2n: int
    b_at_one: int
    jumps: tuple = ()
    jump_at_one: OneJump = None
    elliptic_height: int = 0
    local_homology: dict = None
    iterate_homology: IterateHomology = None
    name: str = ''

    def __post_init__(self):
        if not isinstance(self.dim2n, int) or self.dim2n <= 0 or self.dim2n % 2:
            raise StructuralError(f"dim2n must be positive and even, got {self.dim2n!r}.")
        jumps = sympath.sort_by_angle(list(self.jumps), key=lambda j: j.angle)
        for a, b in zip(jumps, jumps[1:]):
            if arith.compare(a.angle, b.angle) == 0:
                raise StructuralError(f"Duplicate jump angle {arith.to_str(a.angle)}.")
        object.__setattr__(self, 'jumps', tuple(jumps))
        mass = sum(j.nu*j.weight for j in jumps) + (self.jump_at_one.nu if self.jump_at_one else 0)
        if not mass <= self.elliptic_height <= self.dim2n or self.elliptic_height % 2:
            raise StructuralError(f"Elliptic height {self.elliptic_height} must be even and in [{mass}, {self.dim2n}].")
        if self.local_homology is not None:
            lh = {int(d): int(r) for d, r in self.local_homology.items()}
            if any(r < 0 for r in lh.values()):
                raise StructuralError("Local homology ranks must be non-negative.")
            object.__setattr__(self, 'local_homology', lh)
    #---------------------------------------------------------------------------
    @property
    def n(self):
        return self.dim2n//2
    #---------------------------------------------------------------------------
    @cached_property
    def arcs(self):
        """
        Arc values a₀..a_r on the upper semicircle: a₀ on (0, α₁), aᵢ on
        (αᵢ, αᵢ₊₁); the last arc is absent if the last jump is at π.
        """
        a = self.b_at_one + (self.jump_at_one.s if self.jump_at_one else 0)
        arcs = [a]
        for j in self.jumps:
            a = a - j.s_minus + j.s_plus
            if not j.at_pi:
                arcs.append(a)
        return tuple(arcs)
    #---------------------------------------------------------------------------
    @cached_property
    def points(self):
        """Point values 𝔅(e^{iπαᵢ}) at the jumps."""
        return tuple(self.arcs[i] - j.s_minus for i, j in enumerate(self.jumps))
    #---------------------------------------------------------------------------
    #  constructors
    #---------------------------------------------------------------------------
    @classmethod
    def constant(cls, c, dim2n=2, elliptic_height=0, name=''):
        """𝔅 ≡ c without unit eigenvalues."""
        return cls(dim2n, int(c), elliptic_height=elliptic_height, name=name)
    #---------------------------------------------------------------------------
    @classmethod
    def hyperbolic(cls, half_turns=0, name=''):
        """Bott data of a 2×2 hyperbolic block R(hπt)·diag(λᵗ, λ⁻ᵗ)."""
        return cls.constant(half_turns, 2, 0, name)
    #---------------------------------------------------------------------------
    @classmethod
    def rotation(cls, r, name=''):
        """
        Bott data of the rotation path t ↦ R(rπt), r rational of any sign.
        """
        r = arith.to_fraction(r)
        block = sympath.RotationBlock(r)
        return cls.from_step_function(2, lambda phi: rotation_value(r, phi), block.unit_spectrum(), name=name)
    #---------------------------------------------------------------------------
    @classmethod
    def from_step_function(cls, dim2n, value, phases, name=''):
        """
        Build Bott data from an exact evaluator *value(angle)* (angle a
        Fraction, multiples of π) and the unit spectrum *phases* (list of
        :class:`reebindex.sympath.Eigenphase` with exact angles).
        """
        one = [p for p in phases if p.angle == 0]
        others = sympath.sort_by_angle([p for p in phases if p.angle != 0], key=lambda p: p.angle)
        b = value(Fraction(0))
        bounds = [Fraction(0)] + [p.angle for p in others] + [Fraction(1)]
        arcs = [value((lo + hi)/2) for lo, hi in zip(bounds, bounds[1:]) if lo != hi]
        jump_at_one = OneJump(arcs[0] - b, one[0].geom) if one else None
        jumps = []
        for i, p in enumerate(others):
            point = value(p.angle)
            before = arcs[i]
            after = before if p.angle == 1 else arcs[i + 1]
            jumps.append(BottJump(p.angle, after - point, before - point, p.geom))
        return cls(dim2n, b, tuple(jumps), jump_at_one, elliptic_height_of(phases), name=name)
    #---------------------------------------------------------------------------
    @classmethod
    def from_generator(cls, generator, name=''):
        """
        Exact Bott data of a generator built from rotation, hyperbolic and
        loop blocks, direct sums and inverses. Other generators are inferred
        with :func:`infer_bott`.
        """
        g = generator
        if isinstance(g, sympath.RotationBlock):
            d = cls.rotation(g.r)
        elif isinstance(g, sympath.HyperbolicBlock):
            d = cls.hyperbolic(g.half_turns)
        elif isinstance(g, sympath.LoopProduct):
            d = cls.from_generator(g.base).shifted(2*g.maslov())
        elif isinstance(g, sympath.DirectSum):
            d = reduce(lambda a, b: a.direct_sum(b), [cls.from_generator(b) for b in g.blocks])
        elif isinstance(g, sympath.InvertedBlock):
            d = cls.from_generator(g.base).inverted()
        else:
            d = infer_bott(sympath.SymplecticPath(g.dim2n, generator=g))
        return replace(d, name=name) if name else d
    #---------------------------------------------------------------------------
    #  transformations
    #---------------------------------------------------------------------------
    def shifted(self, c):
        """𝔅 + c (a loop of Maslov index c/2 multiplied in)."""
        return replace(self, b_at_one=self.b_at_one + c, local_homology=None, iterate_homology=None)
    #---------------------------------------------------------------------------
    def direct_sum(self, other):
        """
        Bott data of the direct sum of two paths: all values and splitting
        numbers add.
        """
        jumps = list(self.jumps)
        for j in other.jumps:
            for i, mine in enumerate(jumps):
                if arith.compare(mine.angle, j.angle) == 0:
                    jumps[i] = BottJump(mine.angle, mine.s_plus + j.s_plus, mine.s_minus + j.s_minus, mine.nu + j.nu)
                    break
            else:
                jumps.append(j)
        ones = [o for o in (self.jump_at_one, other.jump_at_one) if o is not None]
        one = OneJump(sum(o.s for o in ones), sum(o.nu for o in ones)) if ones else None
        return BottData(self.dim2n + other.dim2n, self.b_at_one + other.b_at_one, tuple(jumps), one,
                        self.elliptic_height + other.elliptic_height)
    #---------------------------------------------------------------------------
    def inverted(self):
        """
        Bott data of the pointwise inverse path: 𝔅' = −𝔅 − ν, the splitting
        numbers become ν − S^±, degrees of local homology change sign.
        """
        nu1 = self.jump_at_one.nu if self.jump_at_one else 0
        one = OneJump(self.jump_at_one.nu - self.jump_at_one.s, nu1) if self.jump_at_one else None
        jumps = tuple(BottJump(j.angle, j.nu - j.s_plus, j.nu - j.s_minus, j.nu) for j in self.jumps)
        local = None if self.local_homology is None else {-d: r for d, r in self.local_homology.items()}
        ih = None
        if self.iterate_homology is not None:
            period = arith.lcm(self.iterate_homology.period, nullity_period(self))
            entries = {}
            for residue in range(period):
                k = residue or period
                offsets = self.iterate_homology.offsets(k)
                if offsets is not None:
                    nu_k = iterated_nullity(self, k)
                    entries[residue] = {nu_k - o: r for o, r in offsets.items()}
            ih = IterateHomology(period, entries)
        return BottData(self.dim2n, -self.b_at_one - nu1, jumps, one, self.elliptic_height,
                        local, ih, self.name)
#===============================================================================
def rotation_value(r, phi):
    """
    𝔅(e^{iπφ}) of the rotation path R(rπt): the number of integers l with
    |φ + 2l| < r for r > 0, minus the number with |φ + 2l| ≤ −r for r ≤ 0.
    """
    if r > 0:
        return max(0, math.ceil((r - phi)/2) - math.floor((-r - phi)/2) - 1)
    s = -r
    return -max(0, math.floor((s - phi)/2) - math.ceil((-s - phi)/2) + 1)
#===============================================================================
def nullity_period(d):
    """
    Least P such that the nullity of γᵏ only depends on k mod P.
    """
    return arith.lcm(*[(j.angle/2).denominator for j in d.jumps if arith.is_exact(j.angle)])
#===============================================================================
def _open_count(k, lo, hi):
    """#{j ∈ ℤ : lo < 2j/k < hi}"""
    return max(0, arith.ceil(k*hi/2) - arith.floor(k*lo/2) - 1)
#===============================================================================
def _point_count(k, alpha):
    """1 if e^{iπα} is a k-th root of unity, else 0."""
    return 1 if arith.is_integer(k*alpha/2) else 0
#===============================================================================
def piece_counts(angles, k):
    """
    How many k-th roots of unity fall on each piece of the circle cut at the
    jump angles (multiples of π, sorted, in (0, 1]).

    :return: (count at 1, counts of the arcs a₀..a_r, counts of the jump
        points), each arc counted together with its mirror image.
    """
    arc_counts = []
    bounds = [Fraction(0)] + list(angles)
    last_at_pi = bool(angles) and arith.is_exact(angles[-1]) and angles[-1] == 1
    for i, lo in enumerate(bounds):
        if i < len(angles):
            hi = angles[i]
            arc_counts.append(_open_count(k, lo, hi) + _open_count(k, 2 - hi, 2 - lo))
        elif not last_at_pi:
            arc_counts.append(_open_count(k, lo, 2 - lo))
    point_counts = []
    for a in angles:
        c = _point_count(k, a)
        point_counts.append(c if arith.is_exact(a) and a == 1 else 2*c)
    return 1, arc_counts, point_counts
#===============================================================================
def bott_value(d, angle):
    """
    𝔅(e^{iπ·angle}) for an angle in multiples of π (any real, taken mod 2).
    """
    a = representative(angle)
    if arith.is_exact(a) and a == 0:
        return d.b_at_one
    for i, j in enumerate(d.jumps):
        c = arith.compare(a, j.angle)
        if c < 0:
            return d.arcs[i]
        if c == 0:
            return d.points[i]
    return d.arcs[-1]
#===============================================================================
def iterated_index(d, k):
    """
    μ⁻(γᵏ) = Σ_{zᵏ=1} 𝔅(z), by counting roots of unity per piece of the
    circle.
    """
    if k < 1:
        raise StructuralError(f"Iterate must be positive, got {k}.")
    c1, arc_counts, point_counts = piece_counts([j.angle for j in d.jumps], k)
    return c1*d.b_at_one + sum(a*c for a, c in zip(d.arcs, arc_counts)) \
                         + sum(p*c for p, c in zip(d.points, point_counts))
#===============================================================================
def iterated_index_sum(d, k):
    """
    μ⁻(γᵏ) as the literal sum of 𝔅 over the k-th roots of unity.
    """
    return sum(bott_value(d, Fraction(2*j, k)) for j in range(k))
#===============================================================================
def iterated_nullity(d, k):
    """
    ν(γᵏ): multiplicities of the jumps at k-th roots of unity, plus the
    nullity at 1.
    """
    nu = d.jump_at_one.nu if d.jump_at_one else 0
    for j in d.jumps:
        if _point_count(k, j.angle):
            nu += j.nu*j.weight
    return nu
#===============================================================================
def iterated_upper(d, k):
    """μ⁺(γᵏ) = μ⁻(γᵏ) + ν(γᵏ)."""
    return iterated_index(d, k) + iterated_nullity(d, k)
#===============================================================================
def mean_index(d):
    """
    Δ(γ) = (1/2π)∫𝔅, exact for exact angles.
    """
    total = Fraction(0)
    bounds = [Fraction(0)] + [j.angle for j in d.jumps] + [Fraction(1)]
    for value, lo, hi in zip(d.arcs, bounds, bounds[1:]):
        total = total + value*(hi - lo)
    return total
#===============================================================================
def splitting_numbers(d, angle):
    """
    (S⁺, S⁻) at e^{iπ·angle}; swapped on the lower semicircle, (0, 0) away
    from the jumps.
    """
    if arith.is_exact(angle):
        angle = arith.to_fraction(angle) % 2
        if angle == 0:
            return (d.jump_at_one.s, d.jump_at_one.s) if d.jump_at_one else (0, 0)
        lower = angle > 1
    else:
        angle = angle - 2*arith.floor(angle/2)
        lower = arith.compare(angle, 1) > 0
    a = representative(angle)
    for j in d.jumps:
        if arith.compare(a, j.angle) == 0:
            return (j.s_minus, j.s_plus) if lower else (j.s_plus, j.s_minus)
    return (0, 0)
#===============================================================================
def total_variation(d):
    """
    Sum of all jumps of 𝔅 around the circle. It bounds |μ⁻(γᵏ) − kΔ(γ)|
    for every k.
    """
    tv = sum((j.s_plus + j.s_minus)*j.weight for j in d.jumps)
    if d.jump_at_one:
        tv += 2*d.jump_at_one.s
    return tv
#===============================================================================
def good_iterate(d, k):
    """
    True iff μ⁻(γᵏ) has the parity of μ⁻(γ).
    """
    return (iterated_index(d, k) - d.b_at_one) % 2 == 0
#===============================================================================
def elliptic_flags(d):
    e = d.elliptic_height
    return EllipticFlags(e == d.dim2n, e == 0, e)
#===============================================================================
def index_gap_check(d, m):
    """
    True iff μ⁻(γ^{2m−2}) < μ⁻(γ^{2m−1}).

    :raise: PreconditionError if m < 2.
    """
    if m < 2:
        raise PreconditionError(f"index_gap_check needs m >= 2, got {m}.")
    return iterated_index(d, 2*m - 2) < iterated_index(d, 2*m - 1)
#===============================================================================
def nondeg_iteration_params(d, verify_up_to=20):
    """
    Write μ⁻(γᵐ) = m·a + Σᵢ 2⌊mθᵢ/2⌋ + b (θᵢ in multiples of π) for the
    nondegenerate iterates.

    A jump at α < 1 with (S⁻, S⁺) = (p, q) and ν = p + q stands for p angles
    θ = α and q angles θ = 2 − α; a jump at π with S^± = c stands for c angles
    θ = 1.

    :return: (a, b, angles)
    :raise: NotRepresentable
    """
    if d.jump_at_one is not None:
        raise NotRepresentable("Orbits with eigenvalue 1 are not of the linear-plus-floors form.")
    thetas = []
    for j in d.jumps:
        if j.s_plus == 0 and j.s_minus == 0:
            continue
        if j.at_pi:
            if 2*j.s_plus != j.nu:
                raise NotRepresentable(f"Splitting ({j.s_plus}, {j.s_minus}) at pi with nu={j.nu}.")
            thetas += [Fraction(1)]*j.s_plus
        else:
            if j.s_plus + j.s_minus != j.nu:
                raise NotRepresentable(f"Splitting ({j.s_plus}, {j.s_minus}) at {arith.to_str(j.angle)} "
                                       f"with nu={j.nu}.")
            thetas += [j.angle]*j.s_minus + [2 - j.angle]*j.s_plus
    b = len(thetas)
    a = d.b_at_one - b
    for m in range(1, verify_up_to + 1):
        if iterated_nullity(d, m):
            continue
        predicted = m*a + sum(2*arith.floor(m*t/2) for t in thetas) + b
        if predicted != iterated_index(d, m):
            raise NotRepresentable(f"Iterate {m}: predicted {predicted} != {iterated_index(d, m)}.")
    return a, b, thetas
#===============================================================================
# Inference from paths
#===============================================================================
def _numeric_spectrum(E, tol):
    """
    Unit eigenphases of a float end matrix, rationalized when close to a
    fraction with small denominator.
    """
    eigs = np.linalg.eigvals(E)
    dim = E.shape[0]
    phases = []
    used = np.zeros(len(eigs), dtype=bool)
    for i, z in enumerate(eigs):
        if used[i] or abs(abs(z) - 1) > 1e-7 or z.imag < -1e-9:
            continue
        close = np.abs(eigs - z) < 1e-6
        used |= close
        angle = abs(np.angle(z))/np.pi
        q = arith.rationalize(angle, 720, 1e-9)
        angle = q if q is not None else arith.ApproxReal.from_float(angle, 1e-9)
        s = np.linalg.svd(E - z*np.eye(dim), compute_uv=False)
        geom = int(np.sum(s < 1e-6))
        phases.append(Eigenphase(angle, int(np.sum(close)), max(geom, 1)))
    return merge_spectrum(phases)
#===============================================================================
def infer_bott(path, K=None, tolerances=None, validate=5):
    """
    Infer Bott data from a path: the jump angles are the unit eigenphases of
    Γ(1), the values of 𝔅 on the pieces of the circle solve the exact linear
    system iterated_index(k) = cz_lower(iterate_path(Γ, k)), k = 1..K.

    :param int K: number of iterates in the system; by default large enough
        to sample every piece, and enlarged while the system is underdetermined.
    :param int validate: number of further iterates K+1.. checked afterwards.
    :raise: InferenceError, AmbiguityError
    """
    generator = path.generator
    if generator is not None:
        phases = generator.unit_spectrum()
    else:
        E = path.end_matrix().array
        phases = _numeric_spectrum(E, tolerances)
    e = elliptic_height_of(phases)
    one = [p for p in phases if arith.is_exact(p.angle) and p.angle == 0]
    others = [p for p in phases if not (arith.is_exact(p.angle) and p.angle == 0)]
    angles = [p.angle for p in others]
    last_at_pi = bool(angles) and arith.is_exact(angles[-1]) and angles[-1] == 1

    # unknowns: v1 (only with eigenvalue 1), arcs, points at exact angles
    names = (['v1'] if one else []) + [f"a{i}" for i in range(len(angles) + (0 if last_at_pi else 1))]
    exact_points = [i for i, a in enumerate(angles) if arith.is_exact(a)]
    names += [f"p{i}" for i in exact_points]
    column = {name: c for c, name in enumerate(names)}

    def row(k):
        c1, arcs, points = piece_counts(angles, k)
        r = [0]*len(names)
        r[column['v1' if one else 'a0']] += c1
        for i, c in enumerate(arcs):
            r[column[f"a{i}"]] += c
        for i, c in enumerate(points):
            if i in exact_points:
                r[column[f"p{i}"]] += c
        return r

    def rhs(k):
        return sympath.cz_lower(sympath.iterate_path(path, k), tolerances=tolerances)

    dens = [(a/2).denominator for a in angles if arith.is_exact(a)]
    K0 = K if K is not None else max(len(names) + 2, max(dens, default=1) + 1)
    tries = [K0] if K is not None else [K0, 2*K0, 4*K0]
    values = {}
    rows, b = [], []
    for K_try in tries:
        for k in range(len(rows) + 1, K_try + 1):
            rows.append(row(k))
            b.append(rhs(k))
        try:
            sol, params = sp.Matrix(rows).gauss_jordan_solve(sp.Matrix(b))
        except ValueError as e:
            raise InferenceError(f"Inconsistent index system for {path!r} with K={K_try}.") from e
        free = [names[i] for i in range(len(names)) if sol[i].free_symbols]
        if not free:
            K_used = K_try
            break
        reebindex_log.debug(f"infer_bott: K={K_try} leaves {free} free")
    else:
        unresolved = [('1' if n == 'v1' else arith.to_str(angles[int(n[1:])]) if n[0] == 'p' else n)
                      for n in free]
        raise AmbiguityError(f"Index system underdetermined for {path!r}: {free}.", unresolved=unresolved)
    for i, name in enumerate(names):
        v = sol[i]
        if not v.is_integer:
            raise InferenceError(f"Non-integer value {v} for {name}.")
        values[name] = int(v)

    arcs = [values[f"a{i}"] for i in range(len(angles) + (0 if last_at_pi else 1))]
    b1 = values['v1'] if one else arcs[0]
    jumps = []
    for i, p in enumerate(others):
        before = arcs[i]
        after = before if (last_at_pi and i == len(angles) - 1) else arcs[i + 1]
        if i in exact_points:
            point = values[f"p{i}"]
        elif p.geom == 1 and abs(before - after) <= 1:
            # a simple eigenvalue splits (1, 0) or (0, 1)
            point = min(before, after)
        else:
            raise AmbiguityError(f"Value of the Bott function at {arith.to_str(p.angle)} is not determined.",
                                 unresolved=[arith.to_str(p.angle)])
        try:
            jumps.append(BottJump(p.angle, after - point, before - point, p.geom))
        except StructuralError as e:
            raise InferenceError(f"Inferred splitting numbers at {arith.to_str(p.angle)} are invalid: {e}") from e
    try:
        jump_at_one = OneJump(arcs[0] - b1, one[0].geom) if one else None
        d = BottData(path.dim2n, b1, tuple(jumps), jump_at_one, e)
    except StructuralError as e:
        raise InferenceError(f"Inferred Bott data are invalid: {e}") from e

    for k in range(K_used + 1, K_used + validate + 1):
        expected = rhs(k)
        if iterated_index(d, k) != expected:
            raise InferenceError(f"Inferred Bott data predict {iterated_index(d, k)} at k={k}, path gives {expected}.")
    reebindex_log.debug(f"infer_bott: {path!r} -> {d}")
    return d
#===============================================================================
# JSON
#===============================================================================
def orbit_to_json(d):
    obj = {'name': d.name,
           'dim2n': d.dim2n,
           'b_at_one': d.b_at_one,
           'elliptic_height': d.elliptic_height,
           'jumps': [],
           'jump_at_one': None if d.jump_at_one is None else
                          {'s_plus': d.jump_at_one.s, 's_minus': d.jump_at_one.s, 'nu': d.jump_at_one.nu},
           'local_homology': None if d.local_homology is None else
                             {str(k): v for k, v in sorted(d.local_homology.items())},
          }
    for j in d.jumps:
        entry = {'s_plus': j.s_plus, 's_minus': j.s_minus, 'nu': j.nu}
        if arith.is_exact(j.angle):
            entry['angle_num'], entry['angle_den'] = j.angle.numerator, j.angle.denominator
        else:
            entry['angle_approx'] = arith.to_str(j.angle)
        obj['jumps'].append(entry)
    if d.iterate_homology is not None:
        obj['iterate_homology'] = {
            'period': d.iterate_homology.period,
            'entries': {str(r): {str(o): n for o, n in sorted(v.items())}
                        for r, v in sorted(d.iterate_homology.entries.items())}}
    return obj
#===============================================================================
def orbit_from_json(obj):
    """
    :raise: StructuralError
    """
    try:
        jumps = []
        for j in obj.get('jumps', []):
            if 'angle_approx' in j:
                angle = arith.ApproxReal.from_float(float(j['angle_approx']))
            else:
                angle = Fraction(int(j['angle_num']), int(j['angle_den']))
            jumps.append(BottJump(angle, int(j['s_plus']), int(j['s_minus']), int(j['nu'])))
        one = obj.get('jump_at_one')
        if one is not None:
            if int(one['s_plus']) != int(one.get('s_minus', one['s_plus'])):
                raise StructuralError("At the eigenvalue 1 the splitting numbers must agree.")
            one = OneJump(int(one['s_plus']), int(one['nu']))
        ih = obj.get('iterate_homology')
        if ih is not None:
            ih = IterateHomology(int(ih['period']),
                                 {int(r): {int(o): int(n) for o, n in v.items()} for r, v in ih['entries'].items()})
        lh = obj.get('local_homology')
        return BottData(int(obj['dim2n']), int(obj['b_at_one']), tuple(jumps), one,
                        int(obj.get('elliptic_height', 0)), lh, ih, obj.get('name', ''))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, StructuralError):
            raise
        raise StructuralError(f"Malformed orbit record: {e}") from e
#===============================================================================
