"""
Class NumericEngine
===================
Crossing form computation of the lower Conley-Zehnder index of a path that
is only known through its values Γ(t) (a sampled path, or a closed form without
an exact index formula).

The path is perturbed to Γ(t)·exp(−εJ₀t), which makes the end point
nondegenerate and realizes the lower semicontinuous extension μ⁻. The index is

    ½·Sign(S(0)) + Σ_{0<t<1} Sign(Q_t)

where S(t) = −J₀Γ'(t)Γ(t)⁻¹ and Q_t is the restriction of S(t) to ker(Γ(t) − Id)
at each crossing t. Crossings are located as local minima of
min|λ(Γ(t)) − 1| over the eigenvalues λ, refined with
:func:`scipy.optimize.minimize_scalar`.
"""
#===============================================================================
import logging
import math
#===============================================================================
import numpy as np
from scipy.linalg import block_diag
from scipy.optimize import minimize_scalar
#===============================================================================
from reebindex.core import ComputationBase, IndexTriple
from reebindex.exceptions import ResolutionError
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
_FD_STEP = 1e-6
#===============================================================================
def rotation(theta):
    """
    The 2×2 rotation matrix R(θ) = exp(J₀θ).
    """
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])
#===============================================================================
def j0(dim2n):
    """
    The standard complex structure ⊕[[0,−1],[1,0]] in interleaved coordinates
    (x₁, y₁, x₂, y₂, ...).
    """
    if dim2n <= 0 or dim2n % 2:
        raise ValueError(f"Expecting a positive even dimension, got {dim2n}.")
    return np.kron(np.eye(dim2n//2), np.array([[0., -1.], [1., 0.]]))
#===============================================================================
def rotation_sum(thetas):
    """
    ⊕R(θᵢ) for a sequence of angles (radians).
    """
    return block_diag(*[rotation(t) for t in thetas])
#===============================================================================
def symplectic_inverse(M):
    """
    M⁻¹ = −J₀MᵀJ₀ for a symplectic M.
    """
    J = j0(M.shape[0])
    return -J @ M.T @ J
#===============================================================================
def kernel_dimension(M, tau_rank):
    """
    dim ker(M − Id) by singular value thresholding.
    """
    s = np.linalg.svd(M - np.eye(M.shape[0]), compute_uv=False)
    scale = max(1.0, float(np.linalg.norm(M, 2)))
    return int(np.sum(s < tau_rank*scale))
#===============================================================================
def distance_to_one(M):
    """
    min|λ − 1| over the eigenvalues λ of M.
    """
    return float(np.min(np.abs(np.linalg.eigvals(M) - 1.0)))
#===============================================================================
def automatic_epsilon(E):
    """
    A perturbation size below a quarter of the smallest nonzero eigenphase of
    the end matrix *E*, and at most 0.1.
    """
    phases = [abs(np.angle(z)) for z in np.linalg.eigvals(E)
              if abs(z - 1.0) > 1e-6 and abs(np.angle(z)) > 1e-6]
    if not phases:
        return 0.1
    return min(0.1, 0.25*min(phases))
#===============================================================================
class NumericEngine(ComputationBase):
    """
    Crossing form engine.

    :param path: any object with a ``dim2n`` attribute and a ``matrix(t)``
        method returning Γ(t) as a numpy array (typically a
        :class:`reebindex.sympath.SymplecticPath`).
    :param tolerances: :class:`reebindex.config.Tolerances`.
    """
    #---------------------------------------------------------------------------
    def execute(self, tolerances=None, error_log=None):
        """
        Compute the index triple (μ⁻, μ⁺, ν) of the path.

        :raise: ResolutionError if a crossing is not regular or the start
            form is degenerate.
        """
        tol = self.tolerances if tolerances is None else tolerances
        dim2n = self.path.dim2n
        J = j0(dim2n)
        E = np.asarray(self.path.matrix(1.0), dtype=float)
        nu = kernel_dimension(E, tol.tau_rank)

        eps = automatic_epsilon(E) if tol.epsilon is None else tol.epsilon
        n = dim2n//2

        def perturbed(t):
            return np.asarray(self.path.matrix(t), dtype=float) @ rotation_sum([-eps*t]*n)

        def generator(t):
            # S(t) = −J₀Γ'(t)Γ(t)⁻¹, symmetrized
            h = _FD_STEP
            if t - h < 0.:
                d = (-3*perturbed(t) + 4*perturbed(t + h) - perturbed(t + 2*h))/(2*h)
            elif t + h > 1.:
                d = (3*perturbed(t) - 4*perturbed(t - h) + perturbed(t - 2*h))/(2*h)
            else:
                d = (perturbed(t + h) - perturbed(t - h))/(2*h)
            S = -J @ d @ symplectic_inverse(perturbed(t))
            return (S + S.T)/2

        def f(t):
            return distance_to_one(perturbed(t))

        S0 = generator(0.)
        w = np.linalg.eigvalsh(S0)
        scale = max(1.0, float(np.max(np.abs(w))))
        if np.min(np.abs(w)) < 1e-9*scale:
            raise ResolutionError(f"Degenerate start form (eigenvalues {w}); choose another epsilon."
                                 , error_log=error_log)
        start = int(np.sum(w > 0) - np.sum(w < 0))//2

        speed = max(float(np.linalg.norm(generator(t), 2)) for t in np.linspace(0., 1., 33))
        grid = max(tol.grid, int(math.ceil(16*speed)))
        ts = np.linspace(0., 1., grid + 1)
        fs = np.array([f(t) for t in ts])
        reebindex_log.debug(f"NumericEngine: eps={eps:.3g}, grid={grid}, speed={speed:.3g}")

        crossings = []
        for i in range(1, grid + 1):
            if fs[i] > fs[i - 1]:
                continue
            if i < grid and fs[i] > fs[i + 1]:
                continue
            lo, hi = ts[i - 1], ts[min(i + 1, grid)]
            res = minimize_scalar(f, bounds=(lo, hi), method='bounded',
                                  options={'xatol': tol.tau_time})
            t_star, f_star = float(res.x), float(res.fun)
            if fs[i] < f_star:
                t_star, f_star = float(ts[i]), float(fs[i])
            if f_star >= tol.tau_cross or t_star >= 1.0 - tol.tau_time:
                continue
            if crossings and abs(crossings[-1] - t_star) < 10*tol.tau_time:
                continue
            crossings.append(t_star)

        total = start
        for t_star in crossings:
            M = perturbed(t_star) - np.eye(dim2n)
            _, s, vh = np.linalg.svd(M)
            threshold = max(1e-5, 100*distance_to_one(perturbed(t_star)))
            K = vh[s < threshold].T
            if K.shape[1] == 0:
                raise ResolutionError(f"Empty kernel at crossing t={t_star:.12f}.", error_log=error_log)
            S = generator(t_star)
            q = np.linalg.eigvalsh(K.T @ S @ K)
            if np.min(np.abs(q)) < 1e-7*(1.0 + float(np.linalg.norm(S, 2))):
                raise ResolutionError(f"Crossing at t={t_star:.12f} is not regular (form {q})."
                                     , error_log=error_log)
            total += int(np.sum(q > 0) - np.sum(q < 0))
        reebindex_log.debug(f"NumericEngine: {len(crossings)} crossings, mu_minus={total}, nu={nu}")
        return IndexTriple(total, total + nu, nu)
    #---------------------------------------------------------------------------
#===============================================================================
