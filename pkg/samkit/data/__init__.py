# __init__.py

from .dataset import LabeledDataset, Parcellation, nested_subsample
from .io import load_dataset, load_parcellation, read_report, write_dataset, write_report
from .synth import SynthConfig, SynthResult, synth_generate

__all__ = [
    "LabeledDataset",
    "Parcellation",
    "nested_subsample",
    "load_dataset",
    "load_parcellation",
    "read_report",
    "write_dataset",
    "write_report",
    "SynthConfig",
    "SynthResult",
    "synth_generate"
]
