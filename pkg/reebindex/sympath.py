"""
Module sympath
==============
Symplectic matrices and paths Γ: [0,1] → Sp(2n) with Γ(0) = Id, and their
Conley-Zehnder indices.

Coordinates are interleaved, (x₁, y₁, x₂, y₂, ...), so that the standard
complex structure is J₀ = ⊕[[0,−1],[1,0]] and exp(J₀t) = R(t) is the rotation
by t. Angles of generator blocks are given as multiples of π: a rotation block
with angle ``Fraction(2, 5)`` is the path t ↦ R(2πt/5).

A path is described either by samples (t, M) or by a generator, a closed form
descriptor built from blocks:

* :class:`RotationBlock`: R(rπt);
* :class:`HyperbolicBlock`: R(hπt)·diag(λᵗ, λ⁻ᵗ), or with the factors swapped;
* :class:`ExpSymmetricBlock`: exp(J₀At) for a rational symmetric A;
* :class:`LoopProduct`: ⊕R(2πmᵢt) times a base generator;
* :class:`DirectSum`, :class:`IteratedBlock`, :class:`InvertedBlock`.

Generators know their lower index and nullity in closed form whenever that is
possible; the other paths go through the crossing form engine
:class:`reebindex.numeric.NumericEngine`.
"""
#===============================================================================
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key
#===============================================================================
import mpmath
import numpy as np
import sympy as sp
from scipy.linalg import block_diag, expm, logm
#===============================================================================
import reebindex
from reebindex import arith
from reebindex.config import DEFAULT_TOLERANCES
from reebindex.core import IndexTriple
from reebindex.exceptions import StructuralError, DegenerateEndpoint
from reebindex.numeric import j0, rotation, symplectic_inverse, kernel_dimension
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
# rational lower bound of 2π
SPECTRAL_BOUND = Fraction(6283185, 1000000)
#===============================================================================
def _sympy_rational(value):
    q = arith.to_fraction(value)
    return sp.Rational(q.numerator, q.denominator)
#===============================================================================
def _check_dim2n(dim2n):
    if not isinstance(dim2n, int) or dim2n <= 0 or dim2n % 2:
        raise StructuralError(f"Expecting a positive even dimension, got {dim2n!r}.")
#===============================================================================
# Symplectic matrices
#===============================================================================
class SymplecticMatrix:
    """
    A 2n×2n matrix, exact (sympy Rational entries) or floating point.

    :param entries: nested rows, a numpy array or a sympy Matrix. Entries that
        are int, Fraction or 'p/q' strings give an exact matrix, floats give a
        floating point matrix.
    """
    def __init__(self, entries):
        if isinstance(entries, sp.MatrixBase):
            rows = entries.tolist()
        else:
            rows = [list(row) for row in np.asarray(entries, dtype=object)] \
                   if isinstance(entries, np.ndarray) else [list(row) for row in entries]
        if not rows or any(len(row) != len(rows) for row in rows):
            raise StructuralError("A symplectic matrix must be square.")
        _check_dim2n(len(rows))
        self.dim2n = len(rows)
        try:
            self.exact = sp.ImmutableMatrix([[_sympy_rational(x) for x in row] for row in rows])
        except StructuralError:
            self.exact = None
        if self.exact is None:
            self.array = np.array([[float(x) for x in row] for row in rows])
        else:
            self.array = np.array(self.exact.tolist(), dtype=float)
    #---------------------------------------------------------------------------
    @classmethod
    def identity(cls, dim2n):
        _check_dim2n(dim2n)
        return cls(sp.eye(dim2n))
    #---------------------------------------------------------------------------
    @property
    def is_exact(self):
        return self.exact is not None
    #---------------------------------------------------------------------------
    def inverse(self):
        if self.is_exact:
            J = sp.ImmutableMatrix(j0(self.dim2n).astype(int).tolist())
            return SymplecticMatrix(-J*self.exact.T*J)
        return SymplecticMatrix(symplectic_inverse(self.array))
    #---------------------------------------------------------------------------
    def __repr__(self):
        kind = 'exact' if self.is_exact else 'float'
        return f"SymplecticMatrix({kind}, dim2n={self.dim2n})"
#===============================================================================
@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of :func:`validate_symplectic`.

    :param bool ok: MᵀJ₀M = J₀ within tolerance (exactly for exact matrices).
    :param deviation: max entry of |MᵀJ₀M − J₀| (a Fraction for exact matrices).
    :param det_deviation: |det M − 1|.
    """
    ok: bool
    deviation: object
    det_deviation: object
#===============================================================================
def validate_symplectic(M, tolerances=None):
    """
    Check MᵀJ₀M = J₀.

    :param M: a :class:`SymplecticMatrix` (or anything its constructor accepts).
    :rtype: ValidationReport
    """
    tol = DEFAULT_TOLERANCES if tolerances is None else tolerances
    if not isinstance(M, SymplecticMatrix):
        M = SymplecticMatrix(M)
    if M.is_exact:
        J = sp.ImmutableMatrix(j0(M.dim2n).astype(int).tolist())
        D = M.exact.T*J*M.exact - J
        deviation = max(arith.to_fraction(abs(x)) for x in D)
        det_deviation = arith.to_fraction(abs(M.exact.det() - 1))
        return ValidationReport(deviation == 0, deviation, det_deviation)
    J = j0(M.dim2n)
    deviation = float(np.max(np.abs(M.array.T @ J @ M.array - J)))
    det_deviation = abs(float(np.linalg.det(M.array)) - 1.0)
    ok = deviation <= tol.tau_sympl and det_deviation <= 1e3*tol.tau_sympl
    return ValidationReport(ok, deviation, det_deviation)
#===============================================================================
def nullity(M, tolerances=None):
    """
    dim ker(M − Id): exact rank for exact matrices, singular value
    thresholding with tau_rank otherwise.
    """
    tol = DEFAULT_TOLERANCES if tolerances is None else tolerances
    if not isinstance(M, SymplecticMatrix):
        M = SymplecticMatrix(M)
    if M.is_exact:
        return M.dim2n - (M.exact - sp.eye(M.dim2n)).rank()
    return kernel_dimension(M.array, tol.tau_rank)
#===============================================================================
# Spectral data of generators
#===============================================================================
@dataclass(frozen=True)
class Eigenphase:
    """
    A unit eigenvalue e^{iπ·angle} of an end matrix, with angle in [0, 1]
    (the conjugate e^{−iπ·angle} is implied).

    :param angle: Fraction, or :class:`reebindex.arith.ApproxReal`.
    :param int alg: algebraic multiplicity of e^{iπ·angle} (of the eigenvalue
        itself, not of the pair).
    :param int geom: geometric multiplicity of e^{iπ·angle}.
    """
    angle: object
    alg: int
    geom: int

    @property
    def is_real(self):
        """True for the eigenvalues 1 and −1."""
        return arith.is_exact(self.angle) and self.angle in (0, 1)
#===============================================================================
def representative(x):
    """
    The angle in [0, 1] (multiples of π) of the conjugate pair e^{±iπx}.
    """
    if arith.is_exact(x):
        a = Fraction(x) % 2
        return a if a <= 1 else 2 - a
    a = x - 2*arith.floor(x/2)
    return a if arith.compare(a, 1) <= 0 else 2 - a
#===============================================================================
def merge_spectrum(phases):
    """
    Merge eigenphases with equal exact angles, summing multiplicities, and
    sort by angle.
    """
    exact = {}
    approx = []
    for p in phases:
        if arith.is_exact(p.angle):
            a, g = exact.get(p.angle, (0, 0))
            exact[p.angle] = (a + p.alg, g + p.geom)
        else:
            approx.append(p)
    merged = [Eigenphase(angle, a, g) for angle, (a, g) in exact.items()] + approx
    return sort_by_angle(merged, key=lambda p: p.angle)
#===============================================================================
def sort_by_angle(items, key):
    """
    Sort items by a possibly approximate angle (certified comparisons).
    """
    return sorted(items, key=cmp_to_key(lambda a, b: arith.compare(key(a), key(b))))
#===============================================================================
def elliptic_height_of(phases):
    """
    Total algebraic multiplicity of the unit eigenvalues described by *phases*.
    """
    return sum(p.alg if p.is_real else 2*p.alg for p in phases)
#===============================================================================
# Generator blocks
#===============================================================================
class Block:
    """
    Base class of generator descriptors.

    Derived classes implement ``dim2n``, ``matrix(t)``, ``exact_lower(k)``,
    ``exact_nullity(k)``, ``iterate(k)``, ``inverse()``, ``unit_spectrum()``
    and ``to_json()``. exact_lower and exact_nullity return None when no closed
    form is available; the argument k evaluates them on the k-th iterate.
    """
    def exact_lower(self, k=1):
        return None

    def exact_nullity(self, k=1):
        return None

    def iterate(self, k):
        return IteratedBlock(self, k)

    def inverse(self):
        return InvertedBlock(self)

    def elliptic_height(self):
        return elliptic_height_of(self.unit_spectrum())
#===============================================================================
@dataclass(frozen=True)
class RotationBlock(Block):
    """
    t ↦ R(rπt), r any rational.
    """
    r: Fraction
    dim2n: int = field(default=2, init=False)

    def __post_init__(self):
        object.__setattr__(self, 'r', arith.to_fraction(self.r))

    def matrix(self, t):
        return rotation(math.pi*float(self.r)*t)

    def exact_lower(self, k=1):
        return 2*math.ceil(k*self.r/2) - 1

    def exact_nullity(self, k=1):
        return 2 if (k*self.r/2).denominator == 1 else 0

    def iterate(self, k):
        return RotationBlock(k*self.r)

    def inverse(self):
        return RotationBlock(-self.r)

    def unit_spectrum(self):
        a = representative(self.r)
        if a in (0, 1):
            return [Eigenphase(a, 2, 2)]
        return [Eigenphase(a, 1, 1)]

    def to_json(self):
        return {'kind': 'rotation_sum', 'params': [arith.to_str(self.r)]}
#===============================================================================
@dataclass(frozen=True)
class HyperbolicBlock(Block):
    """
    t ↦ R(hπt)·diag(λᵗ, λ⁻ᵗ) (order 'RD') or diag(λᵗ, λ⁻ᵗ)·R(hπt) (order 'DR',
    the pointwise inverse of an 'RD' block).

    :param lam: λ > 0, λ ≠ 1.
    :param int half_turns: h; the end matrix is (−1)ʰ·diag(λ, λ⁻¹).
    """
    lam: Fraction
    half_turns: int = 0
    order: str = 'RD'
    dim2n: int = field(default=2, init=False)

    def __post_init__(self):
        lam = arith.to_fraction(self.lam)
        if lam <= 0 or lam == 1:
            raise StructuralError(f"Hyperbolic block needs lambda > 0 and != 1, got {lam}.")
        if self.order not in ('RD', 'DR'):
            raise StructuralError(f"Unknown hyperbolic block order '{self.order}'.")
        object.__setattr__(self, 'lam', lam)
        object.__setattr__(self, 'half_turns', int(self.half_turns))

    def matrix(self, t):
        lam = float(self.lam)
        D = np.diag([lam**t, lam**(-t)])
        R = rotation(math.pi*self.half_turns*t)
        return R @ D if self.order == 'RD' else D @ R

    def exact_lower(self, k=1):
        return self.half_turns*k

    def exact_nullity(self, k=1):
        return 0

    def iterate(self, k):
        return HyperbolicBlock(self.lam**k, self.half_turns*k, self.order)

    def inverse(self):
        return HyperbolicBlock(1/self.lam, -self.half_turns, 'DR' if self.order == 'RD' else 'RD')

    def unit_spectrum(self):
        return []

    def to_json(self):
        return {'kind': 'hyperbolic_sum', 'params': [self.param_json()]}

    def param_json(self):
        if self.order == 'RD' and self.half_turns == 0:
            return arith.to_str(self.lam)
        if self.order == 'RD' and self.half_turns == 1:
            return arith.to_str(-self.lam)
        return {'lambda': arith.to_str(self.lam), 'half_turns': self.half_turns, 'order': self.order}
#===============================================================================
def _sign_changes(coeffs):
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
#===============================================================================
def _reflected(coeffs):
    """Coefficients (highest first) of p(−x)."""
    d = len(coeffs) - 1
    return [c*(-1)**(d - i) for i, c in enumerate(coeffs)]
#===============================================================================
@dataclass(frozen=True)
class ExpSymmetricBlock(Block):
    """
    t ↦ exp(J₀At) for a rational symmetric matrix A.
    """
    A: sp.ImmutableMatrix

    def __post_init__(self):
        A = self.A
        if not isinstance(A, sp.MatrixBase):
            A = [list(row) for row in A]
        A = sp.ImmutableMatrix(sp.ImmutableMatrix(A).applyfunc(_sympy_rational))
        if A.rows != A.cols:
            raise StructuralError("exp_symmetric needs a square matrix.")
        _check_dim2n(A.rows)
        if A != A.T:
            raise StructuralError("exp_symmetric needs a symmetric matrix.")
        object.__setattr__(self, 'A', A)

    @property
    def dim2n(self):
        return self.A.rows

    @cached_property
    def _array(self):
        return j0(self.dim2n) @ np.array(self.A.tolist(), dtype=float)

    def matrix(self, t):
        return expm(self._array*t)

    @cached_property
    def _charpoly(self):
        x = sp.Symbol('x')
        return sp.Poly(self.A.charpoly(x).as_expr(), x, domain=sp.QQ)

    @cached_property
    def _rank(self):
        return self.A.rank()

    def spectrum_inside(self, bound):
        """
        True iff every eigenvalue of A lies in the open interval (−bound, bound).
        Exact: Descartes' rule of signs is exact for the real rooted
        characteristic polynomial of a symmetric matrix.
        """
        p = self._charpoly
        c = _sympy_rational(bound)
        if p.eval(c) == 0 or p.eval(-c) == 0:
            return False
        above = _sign_changes(p.shift(c).all_coeffs())
        below = _sign_changes(_reflected(p.shift(-c).all_coeffs()))
        return above == 0 and below == 0

    def signature(self):
        coeffs = self._charpoly.all_coeffs()
        return _sign_changes(coeffs) - _sign_changes(_reflected(coeffs))

    def exact_lower(self, k=1):
        if self._rank < self.dim2n:
            return None
        if not self.spectrum_inside(SPECTRAL_BOUND/k):
            return None
        return self.signature()//2

    def exact_nullity(self, k=1):
        # the nonzero eigenvalues iω of J₀A have algebraic ω, never in 2πℤ
        return self.dim2n - self._rank

    def iterate(self, k):
        return ExpSymmetricBlock(self.A*k)

    def inverse(self):
        return ExpSymmetricBlock(-self.A)

    def unit_spectrum(self):
        x, y = sp.Symbol('x'), sp.Symbol('y')
        J = sp.ImmutableMatrix(j0(self.dim2n).astype(int).tolist())
        P = sp.Poly((J*self.A).charpoly(x).as_expr(), x, domain=sp.QQ)
        # P is even: P(x) = q(x²)
        q = sp.Poly(P.all_coeffs()[0::2], y, domain=sp.QQ)
        roots = Counter(q.real_roots())
        phases = []
        M = np.array((J*self.A).tolist(), dtype=float)
        for r, mult in roots.items():
            if r == 0:
                phases.append(Eigenphase(Fraction(0), 2*mult, self.dim2n - self._rank))
            elif r < 0:
                omega = float(sp.sqrt(-r).evalf(30))
                s = np.linalg.svd(M - 1j*omega*np.eye(self.dim2n), compute_uv=False)
                geom = int(np.sum(s < 1e-8*max(1.0, float(np.linalg.norm(M, 2)))))
                phases.append(Eigenphase(representative(_omega_over_pi(r)), mult, max(geom, 1)))
        return merge_spectrum(phases)

    def to_json(self):
        return {'kind': 'exp_symmetric',
                'params': [[arith.to_str(arith.to_fraction(v)) for v in self.A.row(i)]
                           for i in range(self.A.rows)]}
#===============================================================================
def _omega_over_pi(r):
    """
    √(−r)/π as an ApproxReal, for a negative algebraic number r.
    """
    def evaluate(dps):
        v = mpmath.mpf(str(sp.N(r, dps + 10)))
        return mpmath.sqrt(-v)/mpmath.pi, mpmath.mpf(10)**(-dps)
    return arith.ApproxReal(evaluate, f"sqrt({-r})/pi")
#===============================================================================
@dataclass(frozen=True)
class LoopProduct(Block):
    """
    φ(t)·Γ(t) (side 'left') or Γ(t)·φ(t) (side 'right') with the loop
    φ(t) = ⊕R(2πmᵢt).
    """
    loop: tuple
    base: Block
    side: str = 'left'

    def __post_init__(self):
        loop = tuple(int(m) for m in self.loop)
        if 2*len(loop) != self.base.dim2n:
            raise StructuralError(f"Loop with {len(loop)} planes does not match dimension {self.base.dim2n}.")
        if self.side not in ('left', 'right'):
            raise StructuralError(f"Unknown loop side '{self.side}'.")
        object.__setattr__(self, 'loop', loop)

    @property
    def dim2n(self):
        return self.base.dim2n

    def maslov(self):
        return sum(self.loop)

    def loop_matrix(self, t):
        return block_diag(*[rotation(2*math.pi*m*t) for m in self.loop])

    def matrix(self, t):
        if self.side == 'left':
            return self.loop_matrix(t) @ self.base.matrix(t)
        return self.base.matrix(t) @ self.loop_matrix(t)

    def exact_lower(self, k=1):
        mu = self.base.exact_lower(k)
        return None if mu is None else mu + 2*k*self.maslov()

    def exact_nullity(self, k=1):
        return self.base.exact_nullity(k)

    def iterate(self, k):
        return LoopProduct(tuple(k*m for m in self.loop), self.base.iterate(k), self.side)

    def inverse(self):
        return LoopProduct(tuple(-m for m in self.loop), self.base.inverse(),
                           'right' if self.side == 'left' else 'left')

    def unit_spectrum(self):
        return self.base.unit_spectrum()

    def to_json(self):
        return {'kind': 'loop_product',
                'params': {'loop': list(self.loop), 'side': self.side, 'base': self.base.to_json()}}
#===============================================================================
@dataclass(frozen=True)
class DirectSum(Block):
    """
    Block diagonal sum of generators.
    """
    blocks: tuple

    def __post_init__(self):
        if not self.blocks:
            raise StructuralError("A direct sum needs at least one block.")
        object.__setattr__(self, 'blocks', tuple(self.blocks))

    @property
    def dim2n(self):
        return sum(b.dim2n for b in self.blocks)

    def matrix(self, t):
        return block_diag(*[b.matrix(t) for b in self.blocks])

    def exact_lower(self, k=1):
        values = [b.exact_lower(k) for b in self.blocks]
        return None if None in values else sum(values)

    def exact_nullity(self, k=1):
        values = [b.exact_nullity(k) for b in self.blocks]
        return None if None in values else sum(values)

    def iterate(self, k):
        return DirectSum(tuple(b.iterate(k) for b in self.blocks))

    def inverse(self):
        return DirectSum(tuple(b.inverse() for b in self.blocks))

    def unit_spectrum(self):
        return merge_spectrum([p for b in self.blocks for p in b.unit_spectrum()])

    def to_json(self):
        if all(isinstance(b, RotationBlock) for b in self.blocks):
            return {'kind': 'rotation_sum', 'params': [arith.to_str(b.r) for b in self.blocks]}
        if all(isinstance(b, HyperbolicBlock) for b in self.blocks):
            return {'kind': 'hyperbolic_sum', 'params': [b.param_json() for b in self.blocks]}
        return {'kind': 'direct_sum', 'params': [b.to_json() for b in self.blocks]}
#===============================================================================
@dataclass(frozen=True)
class IteratedBlock(Block):
    """
    The k-th iterate t ↦ Γ(kt − j)·Γ(1)ʲ on [j/k, (j+1)/k] of a generator
    without a simpler closed form.
    """
    base: Block
    k: int

    @property
    def dim2n(self):
        return self.base.dim2n

    def matrix(self, t):
        j = min(int(math.floor(self.k*t)), self.k - 1)
        s = self.k*t - j
        return self.base.matrix(s) @ np.linalg.matrix_power(self.base.matrix(1.0), j)

    def exact_lower(self, k=1):
        return self.base.exact_lower(self.k*k)

    def exact_nullity(self, k=1):
        return self.base.exact_nullity(self.k*k)

    def iterate(self, k):
        return IteratedBlock(self.base, self.k*k)

    def unit_spectrum(self):
        phases = []
        for p in self.base.unit_spectrum():
            a = representative(self.k*p.angle)
            if not p.is_real and arith.is_exact(a) and a in (0, 1):
                phases.append(Eigenphase(a, 2*p.alg, 2*p.geom))
            else:
                phases.append(Eigenphase(a, p.alg, p.geom))
        return merge_spectrum(phases)

    def to_json(self):
        return {'kind': 'iterate', 'params': {'k': self.k, 'base': self.base.to_json()}}
#===============================================================================
@dataclass(frozen=True)
class InvertedBlock(Block):
    """
    The pointwise inverse t ↦ Γ(t)⁻¹ of a generator without a simpler closed
    form. Its lower index is −μ⁺ of the base.
    """
    base: Block

    @property
    def dim2n(self):
        return self.base.dim2n

    def matrix(self, t):
        return symplectic_inverse(self.base.matrix(t))

    def exact_lower(self, k=1):
        mu, nu = self.base.exact_lower(k), self.base.exact_nullity(k)
        return None if mu is None or nu is None else -(mu + nu)

    def exact_nullity(self, k=1):
        return self.base.exact_nullity(k)

    def inverse(self):
        return self.base

    def unit_spectrum(self):
        return self.base.unit_spectrum()

    def to_json(self):
        return {'kind': 'inverse', 'params': {'base': self.base.to_json()}}
#===============================================================================
def block_from_json(obj):
    """
    Parse a generator descriptor {"kind": ..., "params": ...}.

    :raise: StructuralError
    """
    try:
        kind, params = obj['kind'], obj['params']
    except (KeyError, TypeError) as e:
        raise StructuralError(f"Generator needs 'kind' and 'params': {obj!r}") from e

    def single(blocks):
        return blocks[0] if len(blocks) == 1 else DirectSum(tuple(blocks))

    if kind == 'rotation_sum':
        return single([RotationBlock(arith.to_fraction(r)) for r in params])
    if kind == 'hyperbolic_sum':
        blocks = []
        for p in params:
            if isinstance(p, dict):
                blocks.append(HyperbolicBlock(arith.to_fraction(p['lambda']),
                                              int(p.get('half_turns', 0)), p.get('order', 'RD')))
            else:
                lam = arith.to_fraction(p)
                blocks.append(HyperbolicBlock(abs(lam), 1 if lam < 0 else 0))
        return single(blocks)
    if kind == 'exp_symmetric':
        return ExpSymmetricBlock(sp.ImmutableMatrix([[_sympy_rational(v) for v in row] for row in params]))
    if kind == 'loop_product':
        return LoopProduct(tuple(params['loop']), block_from_json(params['base']), params.get('side', 'left'))
    if kind == 'direct_sum':
        return single([block_from_json(p) for p in params])
    if kind == 'iterate':
        return block_from_json(params['base']).iterate(int(params['k']))
    if kind == 'inverse':
        return block_from_json(params['base']).inverse()
    raise StructuralError(f"Unknown generator kind '{kind}'.")
#===============================================================================
# Paths
#===============================================================================
class SymplecticPath:
    """
    A path Γ: [0,1] → Sp(2n) with Γ(0) = Id.

    :param int dim2n: dimension.
    :param generator: a :class:`Block`, or None.
    :param samples: sequence of (t, M) with t rational (or float) in [0,1] and
        M a :class:`SymplecticMatrix` (or anything its constructor accepts).
        Between samples the path is interpolated as M_k·exp(s·log(M_k⁻¹M_{k+1})).
    :param tolerances: :class:`reebindex.config.Tolerances` used to validate
        the samples.
    :raise: StructuralError if neither generator nor samples is given, or if
        the samples violate the path invariants.
    """
    def __init__(self, dim2n=None, generator=None, samples=None, tolerances=None):
        if generator is None and not samples:
            raise StructuralError("A path needs a generator or samples.")
        if dim2n is None:
            dim2n = generator.dim2n if generator is not None else SymplecticMatrix(samples[0][1]).dim2n
        _check_dim2n(dim2n)
        if generator is not None and generator.dim2n != dim2n:
            raise StructuralError(f"Generator dimension {generator.dim2n} != {dim2n}.")
        self.dim2n = dim2n
        self.generator = generator
        self.tolerances = DEFAULT_TOLERANCES if tolerances is None else tolerances
        self._samples = None
        if samples:
            self._samples = self._validate_samples(samples)
            self._logs = [np.real(logm(symplectic_inverse(a.array) @ b.array))
                          for (_, a), (_, b) in zip(self._samples, self._samples[1:])]
    #---------------------------------------------------------------------------
    def _validate_samples(self, samples):
        tol = self.tolerances
        checked = []
        for t, M in samples:
            t = Fraction(t) if isinstance(t, float) else arith.to_fraction(t)
            M = M if isinstance(M, SymplecticMatrix) else SymplecticMatrix(M)
            if M.dim2n != self.dim2n:
                raise StructuralError(f"Sample at t={t} has dimension {M.dim2n}, expected {self.dim2n}.")
            report = validate_symplectic(M, tol)
            if not report.ok:
                raise StructuralError(f"Sample at t={t} is not symplectic (deviation {report.deviation}).")
            checked.append((t, M))
        if checked[0][0] != 0 or np.max(np.abs(checked[0][1].array - np.eye(self.dim2n))) > tol.tau_sympl:
            raise StructuralError("The first sample must be (0, Id).")
        if checked[-1][0] != 1:
            raise StructuralError("The last sample time must be 1.")
        for (t0, M0), (t1, M1) in zip(checked, checked[1:]):
            if not t1 > t0:
                raise StructuralError(f"Sample times must increase strictly ({t0} >= {t1}).")
            step = float(np.linalg.norm(M1.array - M0.array, 2))
            if step >= tol.tau_step:
                raise StructuralError(f"Samples at t={t0} and t={t1} are too far apart ({step:.3g} >= {tol.tau_step}).")
        return checked
    #---------------------------------------------------------------------------
    @property
    def samples(self):
        """
        The samples; for a generator path without samples, tolerances.grid+1
        equidistant evaluations of the generator.
        """
        if self._samples is None:
            grid = self.tolerances.grid
            return [(Fraction(i, grid), SymplecticMatrix(self.generator.matrix(i/grid))) for i in range(grid + 1)]
        return self._samples
    #---------------------------------------------------------------------------
    def matrix(self, t):
        """
        Γ(t) as a float numpy array.
        """
        if self.generator is not None:
            return self.generator.matrix(float(t))
        times = [float(s) for s, _ in self._samples]
        k = int(np.searchsorted(times, t, side='right')) - 1
        k = min(max(k, 0), len(times) - 2)
        s = (t - times[k])/(times[k + 1] - times[k])
        return self._samples[k][1].array @ expm(s*self._logs[k])
    #---------------------------------------------------------------------------
    def end_matrix(self):
        if self.generator is None:
            return self._samples[-1][1]
        return SymplecticMatrix(self.generator.matrix(1.0))
    #---------------------------------------------------------------------------
    def __repr__(self):
        if self.generator is not None:
            return f"SymplecticPath(dim2n={self.dim2n}, generator={self.generator!r})"
        return f"SymplecticPath(dim2n={self.dim2n}, {len(self._samples)} samples)"
#===============================================================================
# Index operations
#===============================================================================
def index_triple(path, mode='auto', tolerances=None, attempts=4):
    """
    (μ⁻, μ⁺, ν) of a path.

    :param str mode: 'exact' (closed form only, PreconditionError if there is
        none), 'numeric' (crossing forms), or 'auto' (exact when possible).
    :param int attempts: attempts of the numeric engine, see
        :meth:`reebindex.core.ComputationBase.execute_repeat`.
    :rtype: IndexTriple
    """
    return reebindex.run(path, mode, tolerances, attempts=attempts)
#===============================================================================
def cz_lower(path, mode='auto', tolerances=None):
    """
    Lower semicontinuous extension μ⁻ of the Conley-Zehnder index.
    """
    return index_triple(path, mode, tolerances).mu_minus
#===============================================================================
def cz_upper(path, mode='auto', tolerances=None):
    """
    Upper semicontinuous extension μ⁺ = μ⁻ + ν.
    """
    return index_triple(path, mode, tolerances).mu_plus
#===============================================================================
def cz_index(path, mode='auto', tolerances=None):
    """
    Conley-Zehnder index of a path with nondegenerate end point.

    :raise: DegenerateEndpoint if Γ(1) has eigenvalue 1.
    """
    triple = index_triple(path, mode, tolerances)
    if triple.nullity:
        raise DegenerateEndpoint(f"End point of {path!r} has nullity {triple.nullity}; use cz_lower or cz_upper.")
    return triple.mu_minus
#===============================================================================
def rs_index(path, mode='auto', tolerances=None):
    """
    Robbin-Salamon index, taken as the midpoint (μ⁻ + μ⁺)/2.

    :rtype: Fraction
    """
    triple = index_triple(path, mode, tolerances)
    return Fraction(triple.mu_minus + triple.mu_plus, 2)
#===============================================================================
def invert_path(path):
    """
    The pointwise inverse t ↦ Γ(t)⁻¹.
    """
    if path.generator is not None:
        return SymplecticPath(path.dim2n, generator=path.generator.inverse(), tolerances=path.tolerances)
    return SymplecticPath(path.dim2n, samples=[(t, M.inverse()) for t, M in path.samples],
                          tolerances=path.tolerances)
#===============================================================================
def iterate_path(path, k):
    """
    The k-th iterate t ↦ Γ(kt − j)·Γ(1)ʲ on [j/k, (j+1)/k].
    """
    if not isinstance(k, int) or k < 1:
        raise StructuralError(f"Iterate needs a positive integer, got {k!r}.")
    if k == 1:
        return path
    if path.generator is not None:
        return SymplecticPath(path.dim2n, generator=path.generator.iterate(k), tolerances=path.tolerances)
    E = path.end_matrix()
    samples = []
    power = SymplecticMatrix.identity(path.dim2n)
    for j in range(k):
        for i, (t, M) in enumerate(path.samples):
            if j and i == 0:
                continue
            if M.is_exact and power.is_exact:
                P = SymplecticMatrix(M.exact*power.exact)
            else:
                P = SymplecticMatrix(M.array @ power.array)
            samples.append(((j + t)/k, P))
        power = SymplecticMatrix(E.exact*power.exact) if E.is_exact and power.is_exact \
                else SymplecticMatrix(E.array @ power.array)
    return SymplecticPath(path.dim2n, samples=samples, tolerances=path.tolerances)
#===============================================================================
def direct_sum(*paths):
    """
    Block diagonal sum of paths.
    """
    if not paths:
        raise StructuralError("direct_sum needs at least one path.")
    dim2n = sum(p.dim2n for p in paths)
    if all(p.generator is not None for p in paths):
        return SymplecticPath(dim2n, generator=DirectSum(tuple(p.generator for p in paths)))
    times = sorted({t for p in paths for t, _ in p.samples})
    samples = [(t, SymplecticMatrix(block_diag(*[p.matrix(float(t)) for p in paths]))) for t in times]
    return SymplecticPath(dim2n, samples=samples)
#===============================================================================
def path_from_json(obj, tolerances=None):
    """
    Parse {"dim2n": int, "generator": {...}, "samples": [[t, rows], ...]}.
    A float matrix may also be written {"approx": true, "rows": [...]}.
    """
    if not isinstance(obj, dict):
        raise StructuralError("A path must be a JSON object.")
    generator = block_from_json(obj['generator']) if obj.get('generator') else None
    samples = None
    if obj.get('samples'):
        samples = []
        for t, rows in obj['samples']:
            if isinstance(rows, dict):
                rows = rows['rows']
            samples.append((t if isinstance(t, float) else arith.to_fraction(t), SymplecticMatrix(rows)))
    return SymplecticPath(obj.get('dim2n'), generator=generator, samples=samples, tolerances=tolerances)
#===============================================================================
def path_to_json(path):
    obj = {'dim2n': path.dim2n}
    if path.generator is not None:
        obj['generator'] = path.generator.to_json()
    if path._samples is not None:
        obj['samples'] = [[arith.to_str(t), matrix_to_json(M)] for t, M in path._samples]
    return obj
#===============================================================================
def matrix_to_json(M):
    if M.is_exact:
        return [[arith.to_str(arith.to_fraction(v)) for v in M.exact.row(i)] for i in range(M.dim2n)]
    return {'approx': True, 'rows': M.array.tolist()}
#===============================================================================
