import enum
from dataclasses import dataclass

from samkit.bounds import BoundMethod
from samkit.errors import ParameterDomainError
from samkit.inference import Statistic


class Denominator(str, enum.Enum):
    # l of the proportion test: the number of regions analysed, or the number of subjects
    ROIS = "rois"
    SAMPLES = "samples"

    @classmethod
    def parse(cls, value) -> "Denominator":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ParameterDomainError(f"Unknown denominator {value!r}, expected rois or samples.")


@dataclass(frozen=True)
class PipelineConfig:
    k: int = 1
    bound_method: BoundMethod = BoundMethod.COVER
    delta: float = 0.05
    alpha: float = 0.05
    c_reg: float = 1.0
    statistic: Statistic = Statistic.WORST_CASE
    denominator: Denominator = Denominator.ROIS
    pi0: float = 0.5
    tol: float = 1e-6
    max_iter: int = 1000
    bonferroni: bool = False
    dim_includes_bias: bool = False
    threads: int = 1

    def __post_init__(self):
        object.__setattr__(self, "bound_method", BoundMethod.parse(self.bound_method))
        object.__setattr__(self, "statistic", Statistic.parse(self.statistic))
        object.__setattr__(self, "denominator", Denominator.parse(self.denominator))
        if int(self.k) != self.k or self.k < 1:
            raise ParameterDomainError(f"k must be an integer >= 1, got {self.k!r}.")
        for name in ("delta", "alpha", "pi0"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ParameterDomainError(f"{name} must lie in (0, 1), got {value!r}.")
        if not self.c_reg > 0 or not self.tol > 0:
            raise ParameterDomainError("c_reg and tol must be positive.")
        if self.threads < 0:
            raise ParameterDomainError(f"threads must be >= 0, got {self.threads!r}.")

    def bound_dim(self, k: int) -> int:
        return k + 1 if self.dim_includes_bias else k

    @classmethod
    def from_cfg(cls, cfg) -> "PipelineConfig":
        return cls(k=cfg.PLS.COMPONENTS, bound_method=cfg.BOUND.METHOD, delta=cfg.BOUND.DELTA,
                   alpha=cfg.INFERENCE.ALPHA, c_reg=cfg.SVM.C_REG, statistic=cfg.INFERENCE.STATISTIC,
                   denominator=cfg.INFERENCE.DENOMINATOR, pi0=cfg.INFERENCE.PI0, tol=cfg.SVM.TOL,
                   max_iter=cfg.SVM.MAX_ITER, bonferroni=cfg.INFERENCE.BONFERRONI,
                   dim_includes_bias=cfg.BOUND.DIM_INCLUDES_BIAS, threads=cfg.THREADS)

    def to_dict(self) -> dict:
        # no threads entry, reports are identical for any worker count
        return {
            "k": self.k,
            "bound_method": self.bound_method.value,
            "delta": self.delta,
            "alpha": self.alpha,
            "c_reg": self.c_reg,
            "statistic": self.statistic.value,
            "denominator": self.denominator.value,
            "pi0": self.pi0,
            "tol": self.tol,
            "max_iter": self.max_iter,
            "bonferroni": self.bonferroni,
            "dim_includes_bias": self.dim_includes_bias,
        }
