"""
Configuration
=============
Tolerances and run settings. Both are immutable; derive modified copies with
:func:`dataclasses.replace` or :meth:`Tolerances.updated`.
"""
#===============================================================================
from dataclasses import dataclass, field, asdict, replace
#===============================================================================
from reebindex.exceptions import StructuralError
#===============================================================================
@dataclass(frozen=True)
class Tolerances:
    """
    Numerical tolerances of the sampled (non exact) code paths.

    :param float tau_sympl: maximal entry of MᵀJ₀M − J₀ for a float matrix.
    :param float tau_rank: singular values below this count as zero.
    :param float tau_time: time resolution of crossing refinement.
    :param float tau_step: maximal norm of the difference of consecutive samples.
    :param float tau_cross: min|λ − 1| below which a refined minimum is a crossing.
    :param int grid: number of evaluation points of a closed form path.
    :param float epsilon: size of the negative rotation perturbation; None
        selects it from the spectrum of the end matrix.
    :param int precision_dps: initial mpmath precision (decimal digits).
    :param int precision_cap_dps: precision beyond which interval decisions
        give up with a PrecisionError.
    """
    tau_sympl: float = 1e-9
    tau_rank: float = 1e-8
    tau_time: float = 1e-12
    tau_step: float = 0.5
    tau_cross: float = 1e-7
    grid: int = 256
    epsilon: float = None
    precision_dps: int = 30
    precision_cap_dps: int = 480

    def __post_init__(self):
        for name in ('tau_sympl', 'tau_rank', 'tau_time', 'tau_step', 'tau_cross'):
            if not getattr(self, name) > 0:
                raise StructuralError(f"Tolerance {name} must be positive, got {getattr(self, name)}.")
        if self.grid < 8:
            raise StructuralError(f"grid must be at least 8, got {self.grid}.")
        if self.epsilon is not None and not self.epsilon > 0:
            raise StructuralError(f"epsilon must be positive, got {self.epsilon}.")
        if not 0 < self.precision_dps <= self.precision_cap_dps:
            raise StructuralError("Need 0 < precision_dps <= precision_cap_dps.")
    #---------------------------------------------------------------------------
    def updated(self, **kwargs):
        """
        Return a copy with the given fields replaced. Fields set to None in
        *kwargs* are ignored, which lets CLI options pass through unchanged.
        """
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs)
    #---------------------------------------------------------------------------
    def refined(self):
        """
        Tolerances for the next attempt of a repeated computation: half the
        perturbation, twice the grid.
        """
        epsilon = None if self.epsilon is None else self.epsilon/2
        return replace(self, grid=2*self.grid, epsilon=epsilon)
    #---------------------------------------------------------------------------
    def as_dict(self):
        return asdict(self)
#===============================================================================
DEFAULT_TOLERANCES = Tolerances()
#===============================================================================
@dataclass(frozen=True)
class RunConfig:
    """
    Settings of one command line run.
    """
    subcommand: str = ''
    input_path: str = None
    output_path: str = None
    tolerances: Tolerances = field(default_factory=Tolerances)
    search_bound: int = 10**6
    attempts: int = 4
    n_jobs: int = 1
    format: str = 'json'
    seed: int = None

    def __post_init__(self):
        if self.search_bound < 1:
            raise StructuralError(f"search_bound must be >= 1, got {self.search_bound}.")
        if self.attempts < 1:
            raise StructuralError(f"attempts must be >= 1, got {self.attempts}.")
        if self.format not in ('json', 'text'):
            raise StructuralError(f"Unknown output format '{self.format}'.")
    #---------------------------------------------------------------------------
    def as_dict(self):
        d = asdict(self)
        d['tolerances'] = self.tolerances.as_dict()
        return d
#===============================================================================
