"""
File formats.

    manifest.json   {"features": path, "labels": path, "n": int, "d": int, "subject_ids": [..] (optional)}
                    relative paths are taken from the manifest's folder
    features csv    header-free, comma separated, one subject per row
    labels csv      one -1 or +1 per line
    atlas csv       header feature_index,roi_id,roi_name, every feature index 0..D-1 exactly once
    report          json ({"config": {...}, "regions": [...]}) or csv (one row per region, config in a
                    <name>.config.json sidecar)
"""

import io
import json
import logging
import os
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from samkit.errors import DataFormatError
from samkit.inference import REPORT_FIELDS, SamReport

from .dataset import LabeledDataset, Parcellation

logger = logging.getLogger(__name__)

ATLAS_COLUMNS = ("feature_index", "roi_id", "roi_name")
FLOAT_FORMAT = "%.17g"
# fixed report columns, then the flag for regions where no PLS direction could be fitted
REPORT_CSV_FIELDS = REPORT_FIELDS + ("degenerate",)


def _resolve(base_dir: str, path: str) -> str:
    return path if os.path.isabs(path) else os.path.join(base_dir, path)


def _require_file(path: str) -> None:
    if not os.path.isfile(path):
        raise DataFormatError("File not found", path=path)


def _read_text(path: str) -> str:
    _require_file(path)
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = data.rfind(b"\n", 0, e.start) + 1
        raise DataFormatError(f"Byte {data[e.start]:#04x} is not valid utf-8", path=path,
                              row=data.count(b"\n", 0, e.start) + 1, column=e.start - line_start + 1)


def _read_features(path: str) -> np.ndarray:
    text = _read_text(path)
    try:
        raw = pd.read_csv(io.StringIO(text), header=None, dtype=str, keep_default_na=False, skip_blank_lines=True)
    except pd.errors.EmptyDataError:
        raise DataFormatError("Features file is empty", path=path)
    except pd.errors.ParserError as e:
        raise DataFormatError(f"Malformed features file: {e}", path=path)
    stripped = raw.apply(lambda column: column.str.strip())
    values = stripped.apply(lambda column: pd.to_numeric(column, errors="coerce")).to_numpy(dtype=np.float64)
    bad = np.argwhere(~np.isfinite(values))
    if bad.size:
        row, col = bad[0]
        raise DataFormatError(f"Missing, non-numeric or non-finite value {raw.iat[row, col]!r}", path=path,
                              row=int(row) + 1, column=int(col) + 1)
    # python float() rounds correctly, written features read back bit for bit
    return np.array([[float(v) for v in row] for row in stripped.itertuples(index=False)], dtype=np.float64)


def _read_labels(path: str) -> np.ndarray:
    labels = []
    lines = _read_text(path).splitlines()
    # trailing blank lines are allowed, blank lines in between are not
    while lines and not lines[-1].strip():
        lines.pop()
    for number, line in enumerate(lines, start=1):
        token = line.strip()
        try:
            value = int(token)
        except ValueError:
            raise DataFormatError(f"Label {token!r} is not an integer", path=path, row=number)
        if value not in (-1, 1):
            raise DataFormatError(f"Label {value} is outside {{-1, +1}}", path=path, row=number)
        labels.append(value)
    return np.asarray(labels, dtype=np.float64)


def load_dataset(manifest_path: str) -> LabeledDataset:
    """
    Read a dataset from its manifest and cross check the declared subject and feature counts against the files.
    """
    text = _read_text(manifest_path)
    try:
        manifest = json.loads(text)
    except json.JSONDecodeError as e:
        raise DataFormatError(f"Manifest is not valid json: {e.msg}", path=manifest_path, row=e.lineno,
                              column=e.colno)
    for key in ("features", "labels", "n", "d"):
        if key not in manifest:
            raise DataFormatError(f"Manifest lacks the {key!r} entry", path=manifest_path)

    base_dir = os.path.dirname(os.path.abspath(manifest_path))
    features_path = _resolve(base_dir, manifest["features"])
    labels_path = _resolve(base_dir, manifest["labels"])
    features = _read_features(features_path)
    labels = _read_labels(labels_path)

    n, d = int(manifest["n"]), int(manifest["d"])
    if features.shape[0] != n:
        raise DataFormatError(f"Manifest declares n={n} but the features file has {features.shape[0]} rows",
                              path=features_path)
    if features.shape[1] != d:
        raise DataFormatError(f"Manifest declares d={d} but the features file has {features.shape[1]} columns",
                              path=features_path)
    if labels.shape[0] != n:
        raise DataFormatError(f"Manifest declares n={n} but the labels file has {labels.shape[0]} lines",
                              path=labels_path)
    subject_ids = manifest.get("subject_ids")
    dataset = LabeledDataset(features, labels, tuple(subject_ids) if subject_ids is not None else None)
    logger.info("Loaded %d subjects with %d features from %s.", dataset.n, dataset.n_features, manifest_path)
    return dataset


def load_parcellation(path: str, n_features: Optional[int] = None) -> Parcellation:
    """
    Read an atlas csv. The number of rows fixes D unless `n_features` is given; indices 0..D-1 must each appear
    exactly once and a region id may carry only one name.
    """
    text = _read_text(path)
    try:
        table = pd.read_csv(io.StringIO(text), dtype={"roi_name": str}, keep_default_na=False)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise DataFormatError(f"Malformed atlas file: {e}", path=path)
    missing_columns = [c for c in ATLAS_COLUMNS if c not in table.columns]
    if missing_columns:
        raise DataFormatError(f"Atlas header lacks {missing_columns}", path=path, row=1)
    for column in ("feature_index", "roi_id"):
        numeric = pd.to_numeric(table[column], errors="coerce")
        bad = np.flatnonzero(numeric.isna().to_numpy() | (numeric != numeric.round()).to_numpy())
        if bad.size:
            raise DataFormatError(f"{column} {table[column].iat[bad[0]]!r} is not an integer", path=path,
                                  row=int(bad[0]) + 2, column=ATLAS_COLUMNS.index(column) + 1)
        table[column] = numeric.astype(np.int64)

    d = len(table) if n_features is None else int(n_features)
    duplicated = table["feature_index"].duplicated()
    if duplicated.any():
        row = int(np.flatnonzero(duplicated.to_numpy())[0])
        raise DataFormatError(f"Feature index {table['feature_index'].iat[row]} appears more than once", path=path,
                              row=row + 2, column=1)
    out_of_range = ~table["feature_index"].between(0, d - 1)
    if out_of_range.any():
        row = int(np.flatnonzero(out_of_range.to_numpy())[0])
        raise DataFormatError(f"Feature index {table['feature_index'].iat[row]} is outside 0..{d - 1}", path=path,
                              row=row + 2, column=1)
    missing = sorted(set(range(d)) - set(table["feature_index"].tolist()))
    if missing:
        raise DataFormatError(f"Feature indices {missing[:10]} are not assigned to any region", path=path)

    names = {}
    for row, (roi_id, name) in enumerate(zip(table["roi_id"], table["roi_name"]), start=2):
        if names.setdefault(int(roi_id), name) != name:
            raise DataFormatError(f"Region {roi_id} is named both {names[int(roi_id)]!r} and {name!r}", path=path,
                                  row=row, column=3)

    roi_of_feature = np.empty(d, dtype=np.int64)
    roi_of_feature[table["feature_index"].to_numpy()] = table["roi_id"].to_numpy()
    return Parcellation(roi_of_feature, names)


def write_dataset(dataset: LabeledDataset, parcellation: Parcellation, out_dir: str,
                  ground_truth: Optional[Iterable[int]] = None) -> str:
    """
    Write a dataset and its atlas in the formats `load_dataset` and `load_parcellation` read.
    @return: path of the written manifest
    """
    os.makedirs(out_dir, exist_ok=True)
    np.savetxt(os.path.join(out_dir, "features.csv"), dataset.features, fmt=FLOAT_FORMAT, delimiter=",")
    with open(os.path.join(out_dir, "labels.csv"), "w") as f:
        f.writelines(f"{int(v)}\n" for v in dataset.labels)
    atlas = pd.DataFrame({
        "feature_index": np.arange(parcellation.n_features),
        "roi_id": parcellation.roi_of_feature,
        "roi_name": [parcellation.name_of(r) for r in parcellation.roi_of_feature],
    })
    atlas.to_csv(os.path.join(out_dir, "atlas.csv"), index=False)

    manifest = {"features": "features.csv", "labels": "labels.csv", "n": dataset.n, "d": dataset.n_features}
    if dataset.subject_ids is not None:
        manifest["subject_ids"] = list(dataset.subject_ids)
    manifest_path = os.path.join(out_dir, "manifest.json")
    with open(manifest_path, "w") as f:
        json.dump(manifest, f, indent=2)
    if ground_truth is not None:
        with open(os.path.join(out_dir, "ground_truth.json"), "w") as f:
            json.dump({"effect_rois": sorted(int(r) for r in ground_truth)}, f, indent=2)
    return manifest_path


def _config_sidecar(path: str) -> str:
    return os.path.splitext(path)[0] + ".config.json"


def write_report(report: SamReport, path: str, fmt: str = "json") -> None:
    """
    Write a report as json or csv. The csv holds exactly one row per region in REPORT_CSV_FIELDS order; its config
    block goes to a sidecar json next to it. Writing the same report twice gives byte-identical files.
    """
    fmt = fmt.lower()
    if fmt not in ("json", "csv"):
        raise DataFormatError(f"Unknown report format {fmt!r}, expected json or csv")
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    if fmt == "json":
        with open(path, "w") as f:
            json.dump(report.to_dict(), f, indent=2)
            f.write("\n")
        return

    table = pd.DataFrame([a.to_dict() for a in report.analyses], columns=list(REPORT_CSV_FIELDS))
    table.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    with open(_config_sidecar(path), "w") as f:
        json.dump(dict(report.config), f, indent=2)
        f.write("\n")


def read_report(path: str) -> SamReport:
    _require_file(path)
    if path.lower().endswith(".csv"):
        table = pd.read_csv(path, dtype={"roi_name": str}, keep_default_na=False, float_precision="round_trip")
        config = {}
        if os.path.isfile(_config_sidecar(path)):
            with open(_config_sidecar(path), "r") as f:
                config = json.load(f)
        return SamReport.from_dict({"config": config, "regions": table.to_dict(orient="records")})
    with open(path, "r") as f:
        return SamReport.from_dict(json.load(f))
