"""
Synthetic region-structured datasets with known effect regions. Every voxel is N(0, noise_sd^2); in an effect region
the class +1 subjects get a mean shift of effect_size·noise_sd on every voxel of the region.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

import numpy as np

from samkit.errors import ParameterDomainError
from samkit.utils import substream

from .dataset import LabeledDataset, Parcellation

logger = logging.getLogger(__name__)

# spawn keys of the label permutation and of the region blocks
_LABEL_STREAM = 0
_REGION_STREAM = 1


@dataclass(frozen=True)
class SynthConfig:
    n: int = 200
    rois: int = 20
    voxels_per_roi: int = 50
    effect_rois: Tuple[int, ...] = field(default_factory=tuple)
    effect_size: float = 0.0
    noise_sd: float = 1.0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "effect_rois", tuple(sorted({int(r) for r in self.effect_rois})))
        if self.n < 2 or self.n % 2:
            raise ParameterDomainError(f"Synthetic datasets are balanced, n must be even and >= 2, got {self.n}.")
        if self.rois < 1 or self.voxels_per_roi < 1:
            raise ParameterDomainError("Need at least one region with at least one voxel.")
        outside = [r for r in self.effect_rois if not 0 <= r < self.rois]
        if outside:
            raise ParameterDomainError(f"Effect regions {outside} are outside 0..{self.rois - 1}.")
        if not self.effect_size >= 0:
            raise ParameterDomainError(f"effect_size must be >= 0, got {self.effect_size!r}.")
        if not self.noise_sd > 0:
            raise ParameterDomainError(f"noise_sd must be > 0, got {self.noise_sd!r}.")

    @classmethod
    def from_cfg(cls, cfg) -> "SynthConfig":
        return cls(n=cfg.SYNTH.N, rois=cfg.SYNTH.ROIS, voxels_per_roi=cfg.SYNTH.VOXELS_PER_ROI,
                   effect_rois=tuple(cfg.SYNTH.EFFECT_ROIS), effect_size=cfg.SYNTH.EFFECT_SIZE,
                   noise_sd=cfg.SYNTH.NOISE_SD, seed=cfg.SEED)


@dataclass(frozen=True)
class SynthResult:
    dataset: LabeledDataset
    parcellation: Parcellation
    ground_truth: FrozenSet[int]


def roi_name(roi_id: int) -> str:
    return f"roi_{roi_id:03d}"


def synth_generate(config: SynthConfig) -> SynthResult:
    """
    Draw a balanced dataset (n/2 subjects per class) from `config`. The output is a pure function of the config:
    labels and every region come from their own seeded substream.
    """
    half = config.n // 2
    labels = np.concatenate([np.ones(half), -np.ones(half)])
    labels = substream(config.seed, _LABEL_STREAM).permutation(labels)
    positive = labels > 0

    blocks = []
    effect = set(config.effect_rois)
    for roi in range(config.rois):
        rng = substream(config.seed, _REGION_STREAM, roi)
        block = rng.normal(0.0, config.noise_sd, size=(config.n, config.voxels_per_roi))
        if roi in effect:
            block[positive] += config.effect_size * config.noise_sd
        blocks.append(block)

    features = np.hstack(blocks)
    roi_of_feature = np.repeat(np.arange(config.rois), config.voxels_per_roi)
    subject_ids = tuple(f"sub-{i:04d}" for i in range(config.n))
    parcellation = Parcellation(roi_of_feature, {r: roi_name(r) for r in range(config.rois)})
    logger.debug("Generated %d subjects over %d regions, effect regions %s.", config.n, config.rois,
                 list(config.effect_rois))
    return SynthResult(dataset=LabeledDataset(features, labels, subject_ids), parcellation=parcellation,
                       ground_truth=frozenset(config.effect_rois))
