"""
Module models
=============
Exact fixtures: the closed orbits of the ellipsoid

    E(a₁, ..., a_{n+1}) = {Σ |zᵢ|²/aᵢ = 1} ⊂ ℂ^{n+1},

the manifold profiles of prequantizations, and 2×2 path blocks.

The ellipsoid is the prequantization of ℂPⁿ. Its simple orbits are the circles
in the coordinate planes; orbit j has linearized flow ⊕_{i≠j} R(2π(aⱼ/aᵢ)t)
and a loop of Maslov index 1 from the trivialization over the capping disk.
When aspects are rationally related some iterates are degenerate; they are
resolved by the tilt aᵢ ↦ aᵢ(1 + iη), η → 0⁺, which turns the ellipsoid into a
nondegenerate one and moves a degenerate block with kaⱼ/aᵢ ∈ ℤ upwards (degree
offset 2) exactly when j > i.
"""
#===============================================================================
import logging
from dataclasses import dataclass
from fractions import Fraction
#===============================================================================
from reebindex import arith
from reebindex.bott import BottData, IterateHomology, iterated_index, iterated_nullity
from reebindex.chomology import PrequantProfile, OrbitCatalog
from reebindex.exceptions import StructuralError, ConstructionError, UnknownProfile
from reebindex.sympath import SymplecticPath, RotationBlock, HyperbolicBlock, LoopProduct, DirectSum, \
                              cz_lower, iterate_path
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
PROFILES = ('sphere', 'unit-cotangent-sphere', 'custom')
#===============================================================================
@dataclass(frozen=True)
class EllipsoidSpec:
    """
    :param tuple aspects: positive rationals a₁..a_{n+1}, n ≥ 1.
    """
    aspects: tuple

    def __post_init__(self):
        aspects = tuple(arith.to_fraction(a) for a in self.aspects)
        if len(aspects) < 2:
            raise StructuralError(f"An ellipsoid needs at least two aspects, got {len(aspects)}.")
        if any(a <= 0 for a in aspects):
            raise StructuralError(f"Aspects must be positive, got {[str(a) for a in aspects]}.")
        object.__setattr__(self, 'aspects', aspects)

    @property
    def n(self):
        return len(self.aspects) - 1
#===============================================================================
def ellipsoid_generator(spec, j):
    """
    Generator of the linearized flow along orbit j (0-based).
    """
    a = spec.aspects
    blocks = tuple(RotationBlock(2*a[j]/a[i]) for i in range(len(a)) if i != j)
    return LoopProduct((1,) + (0,)*(spec.n - 1), DirectSum(blocks))
#===============================================================================
def _tilt_homology(spec, j):
    """Iterate homology of orbit j after the tilt."""
    a = spec.aspects
    ratios = [(i, a[j]/a[i]) for i in range(len(a)) if i != j]
    period = arith.lcm(*[r.denominator for _, r in ratios])
    entries = {}
    for residue in range(period):
        k = residue or period
        degenerate = [i for i, r in ratios if (k*r).denominator == 1]
        if degenerate:
            entries[residue] = {sum(2 for i in degenerate if j > i): 1}
    return IterateHomology(period, entries)
#===============================================================================
def _closed_form_lower(spec, j):
    a = spec.aspects
    return 2 + sum(2*arith.ceil(a[j]/a[i]) - 1 for i in range(len(a)) if i != j)
#===============================================================================
def ellipsoid_catalog(spec, resolve=True, verify_up_to=12, tolerances=None):
    """
    Catalog of the n+1 simple orbits of an ellipsoid on the profile of
    S^{2n+1} → ℂPⁿ.

    The Bott data of every orbit is checked against cz_lower of the iterated
    generator paths for k ≤ *verify_up_to*.

    :param EllipsoidSpec spec:
    :param bool resolve: attach the iterate homology of the tilted ellipsoid;
        False gives paths and Bott data only.
    :rtype: OrbitCatalog, with the generator paths in ``paths``.
    :raise: ConstructionError
    """
    orbits = []
    paths = {}
    for j in range(spec.n + 1):
        name = f"gamma{j + 1}"
        path = SymplecticPath(2*spec.n, generator=ellipsoid_generator(spec, j), tolerances=tolerances)
        d = BottData.from_generator(path.generator, name=name)
        if d.b_at_one != _closed_form_lower(spec, j):
            raise ConstructionError(f"{name}: Bott value {d.b_at_one} at 1 differs from the closed form "
                                    f"{_closed_form_lower(spec, j)}.")
        for k in range(1, verify_up_to + 1):
            expected = cz_lower(iterate_path(path, k), tolerances=tolerances)
            if iterated_index(d, k) != expected:
                raise ConstructionError(f"{name}^{k}: Bott data gives {iterated_index(d, k)}, "
                                        f"cz_lower gives {expected}.")
        if resolve:
            ih = _tilt_homology(spec, j)
            for k in range(1, ih.period + 1):
                if (ih.offsets(k) is None) != (iterated_nullity(d, k) == 0):
                    raise ConstructionError(f"{name}^{k}: tilt resolution disagrees with the nullity.")
            d = BottData(d.dim2n, d.b_at_one, d.jumps, d.jump_at_one, d.elliptic_height,
                         iterate_homology=ih, name=name)
        orbits.append(d)
        paths[name] = path
    reebindex_log.debug(f"ellipsoid_catalog: aspects {[str(x) for x in spec.aspects]} verified "
                        f"up to k = {verify_up_to}")
    return OrbitCatalog(catalog_profile('sphere', spec.n), tuple(orbits), True, paths)
#===============================================================================
def catalog_profile(name, n=None, betti=None, I=None, c_B=None):
    """
    Named profiles:

    * 'sphere': S^{2n+1} → ℂPⁿ, c_B = n+1, I = 2(n+1);
    * 'unit-cotangent-sphere': ST*S^{n+1} → G⁺₂(ℝ^{n+2}), c_B = 2 for n = 1
      and n otherwise, I defaults to 2c_B;
    * 'custom': all of n, betti, I and c_B supplied.

    :raise: UnknownProfile, StructuralError
    """
    if name == 'custom':
        if None in (n, betti, I, c_B):
            raise StructuralError("A custom profile needs n, betti, I and c_B.")
        return PrequantProfile(n, tuple(betti), I, c_B, 'custom')
    if name not in PROFILES:
        raise UnknownProfile(f"Unknown profile '{name}', expecting one of {PROFILES}.")
    if n is None or n < 1:
        raise StructuralError(f"Profile '{name}' needs n >= 1, got {n}.")
    if name == 'sphere':
        betti = tuple(1 - i % 2 for i in range(2*n + 1))
        c = n + 1
        return PrequantProfile(n, betti, 2*c if I is None else I, c, f"sphere({n})")
    # complex quadric: one class in every even degree, two in the middle one for even n
    betti = [1 - i % 2 for i in range(2*n + 1)]
    if n % 2 == 0:
        betti[n] = 2
    c = 2 if n == 1 else n
    return PrequantProfile(n, tuple(betti), 2*c if I is None else I, c, f"unit-cotangent-sphere({n})")
#===============================================================================
def katok_ziller_count(name, n):
    """
    Number of simple closed orbits of the Katok-Ziller type examples on the
    n-th member of a family.

    * 'finsler-sphere': 2(⌊n/2⌋+1), the number of closed geodesics of an
      irrational Katok metric on S^{n+1};
    * 'irrational-ellipsoid': n+1.

    :raise: UnknownProfile
    """
    if n < 1:
        raise StructuralError(f"Expecting n >= 1, got {n}.")
    if name == 'finsler-sphere':
        return 2*(n//2 + 1)
    if name == 'irrational-ellipsoid':
        return n + 1
    raise UnknownProfile(f"Unknown Katok-Ziller family '{name}'.")
#===============================================================================
def block(kind, params=None, tolerances=None):
    """
    2×2 generator path:

    * 'rotation', {'angle': r}: R(rπt);
    * 'hyperbolic', {'lambda': λ, 'half_turns': h}: R(hπt)·diag(λᵗ, λ⁻ᵗ); a
      negative λ stands for |λ| with one half turn;
    * 'identity', {'twist': m}: the loop R(2πmt), constant Id for m = 0.

    :raise: StructuralError
    """
    params = params or {}
    if kind == 'rotation':
        if 'angle' not in params:
            raise StructuralError("A rotation block needs an angle.")
        generator = RotationBlock(params['angle'])
    elif kind == 'hyperbolic':
        lam = arith.to_fraction(params.get('lambda', 0))
        if lam in (0, 1, -1):
            raise StructuralError(f"A hyperbolic block needs lambda not in {{0, 1, -1}}, got {lam}.")
        h = int(params.get('half_turns', 0))
        if lam < 0:
            lam, h = -lam, h + 1
        generator = HyperbolicBlock(lam, h)
    elif kind == 'identity':
        m = int(params.get('twist', 0))
        generator = RotationBlock(Fraction(2*m))
    else:
        raise StructuralError(f"Unknown block kind '{kind}'.")
    return SymplecticPath(2, generator=generator, tolerances=tolerances)
#===============================================================================
