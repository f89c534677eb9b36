from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from samkit.errors import InputError, ShapeError


@dataclass(frozen=True)
class LabeledDataset:
    """
    n subjects with D features each and a ±1 group label. Arrays are copied to float64 on construction and never
    modified afterwards.
    """

    features: np.ndarray
    labels: np.ndarray
    subject_ids: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        features = np.array(self.features, dtype=np.float64)
        labels = np.array(self.labels, dtype=np.float64)
        if features.ndim != 2:
            raise ShapeError(f"Features must be an n x D matrix, got shape {features.shape}.")
        n = features.shape[0]
        if labels.shape != (n,):
            raise ShapeError(f"Expected {n} labels, got shape {labels.shape}.")
        if n < 2:
            raise InputError(f"A dataset needs at least 2 subjects, got {n}.")
        if not np.all(np.isfinite(features)):
            row, col = np.argwhere(~np.isfinite(features))[0]
            raise InputError(f"Non-finite feature value at subject {row}, feature {col}.")
        if not np.all(np.isin(labels, (-1.0, 1.0))):
            raise InputError("Labels must be -1 or +1.")
        if np.all(labels == labels[0]):
            raise InputError("Both labels must be present.")
        if self.subject_ids is not None and len(self.subject_ids) != n:
            raise ShapeError(f"Got {len(self.subject_ids)} subject ids for {n} subjects.")
        features.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)
        if self.subject_ids is not None:
            object.__setattr__(self, "subject_ids", tuple(str(s) for s in self.subject_ids))

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    def select_features(self, columns: Sequence[int]) -> "LabeledDataset":
        return LabeledDataset(self.features[:, np.asarray(columns, dtype=int)], self.labels, self.subject_ids)

    def subset(self, rows: Sequence[int]) -> "LabeledDataset":
        rows = np.asarray(rows, dtype=int)
        ids = None if self.subject_ids is None else tuple(self.subject_ids[i] for i in rows)
        return LabeledDataset(self.features[rows], self.labels[rows], ids)


@dataclass(frozen=True)
class Parcellation:
    """Maps each of the D features to one region id; every region id used has a name."""

    roi_of_feature: np.ndarray
    roi_names: Dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        roi_of_feature = np.array(self.roi_of_feature, dtype=np.int64)
        if roi_of_feature.ndim != 1 or roi_of_feature.size == 0:
            raise ShapeError("A parcellation needs a non-empty 1d region assignment.")
        names = {int(k): str(v) for k, v in self.roi_names.items()}
        missing = sorted(set(np.unique(roi_of_feature).tolist()) - set(names))
        if missing:
            raise InputError(f"Regions without a name: {missing}.")
        roi_of_feature.setflags(write=False)
        object.__setattr__(self, "roi_of_feature", roi_of_feature)
        object.__setattr__(self, "roi_names", names)

    @property
    def n_features(self) -> int:
        return self.roi_of_feature.shape[0]

    @property
    def roi_ids(self) -> Tuple[int, ...]:
        return tuple(int(r) for r in np.unique(self.roi_of_feature))

    @property
    def n_rois(self) -> int:
        return len(self.roi_ids)

    def features_of(self, roi_id: int) -> np.ndarray:
        return np.flatnonzero(self.roi_of_feature == roi_id)

    def name_of(self, roi_id: int) -> str:
        return self.roi_names[int(roi_id)]


def nested_subsample(dataset: LabeledDataset, n: int) -> LabeledDataset:
    """
    The first n/2 subjects of each class, in row order. Smaller samples drawn this way are subsets of larger ones.
    """
    if n % 2 or n < 2:
        raise InputError(f"Nested subsamples take n/2 subjects per class, n must be even and >= 2, got {n}.")
    positives = np.flatnonzero(dataset.labels > 0)
    negatives = np.flatnonzero(dataset.labels < 0)
    half = n // 2
    if half > min(len(positives), len(negatives)):
        raise InputError(f"Cannot take {half} subjects per class from a dataset with "
                         f"{len(positives)} and {len(negatives)}.")
    rows = np.sort(np.concatenate([positives[:half], negatives[:half]]))
    return dataset.subset(rows)
