"""
Region-wise analysis: PLS scores, an in-sample linear SVM, the bound deviation for the score dimension, and the
proportion test, assembled into a SamReport over all regions of a parcellation.
"""

import functools
import logging
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from samkit.bounds import BoundMethod, BoundRequest, compute_bound
from samkit.data import LabeledDataset, Parcellation
from samkit.errors import DegenerateDirectionError, InputError, ShapeError
from samkit.inference import (ProportionTest, RoiAnalysis, SamReport, Statistic, p_value_one_sided, proportion_z,
                              select_significant, worst_case_accuracy)
from samkit.learners import empirical_risk, majority_classifier, pls_fit, svm_fit
from samkit.utils import parallel_map

from .config import Denominator, PipelineConfig

logger = logging.getLogger(__name__)


def analyze_roi(dataset: LabeledDataset, config: PipelineConfig, l: int, roi_id: int = 0,
                roi_name: str = "") -> RoiAnalysis:
    """
    Analyse one region, `dataset` holding only the region's features.

    A region with fewer features than config.k uses as many components as it has features. When PLS finds no
    direction with non-zero label covariance the region keeps a majority-class accuracy, is flagged degenerate and
    is never significant.
    """
    n, d = dataset.features.shape
    if d < 1:
        raise InputError(f"Region {roi_id} has no features.")
    k = min(config.k, d)
    if k < config.k:
        logger.info("Region %s has %d features, using %d PLS components instead of %d.", roi_id, d, k, config.k)

    degenerate = False
    try:
        pls = pls_fit(dataset.features, dataset.labels, k)
        classifier = svm_fit(pls.train_scores, dataset.labels, c_reg=config.c_reg, tol=config.tol,
                             max_iter=config.max_iter)
        risk = empirical_risk(classifier, pls.train_scores, dataset.labels)
    except DegenerateDirectionError as e:
        logger.warning("Region %s (%s): %s Reporting a majority-class accuracy.", roi_id, roi_name, e)
        degenerate = True
        classifier = majority_classifier(dataset.labels, k)
        risk = empirical_risk(classifier, np.zeros((n, k)), dataset.labels)

    bound = compute_bound(BoundRequest(config.bound_method, n, config.bound_dim(k), config.delta))
    worst_case = worst_case_accuracy(risk.empirical_accuracy, bound.delta_n)

    test = ProportionTest(l=l, pi0=config.pi0, alpha=config.alpha)
    pi_hat = worst_case if config.statistic is Statistic.WORST_CASE else risk.empirical_accuracy
    z = proportion_z(pi_hat, test)
    p = p_value_one_sided(z)
    return RoiAnalysis(roi_id=int(roi_id), roi_name=str(roi_name), n=n, k=k,
                       empirical_accuracy=risk.empirical_accuracy, delta_n=bound.delta_n,
                       worst_case_accuracy=worst_case, z=z, p_value=p,
                       significant=bool(p < config.alpha and not degenerate), degenerate=degenerate)


def _analyze_region(roi_id: int, dataset: LabeledDataset, parcellation: Parcellation, config: PipelineConfig,
                    l: int) -> RoiAnalysis:
    region = dataset.select_features(parcellation.features_of(roi_id))
    return analyze_roi(region, config, l, roi_id=roi_id, roi_name=parcellation.name_of(roi_id))


def denominator_for(dataset: LabeledDataset, parcellation: Parcellation, config: PipelineConfig) -> int:
    return parcellation.n_rois if config.denominator is Denominator.ROIS else dataset.n


def build_sam(dataset: LabeledDataset, parcellation: Parcellation, config: PipelineConfig) -> SamReport:
    """
    Analyse every region of `parcellation` independently (over config.threads processes) and test them together.
    The report is ordered by roi_id and does not depend on the number of workers.
    """
    if parcellation.n_features != dataset.n_features:
        raise ShapeError(f"Atlas covers {parcellation.n_features} features, the dataset has {dataset.n_features}.")
    l = denominator_for(dataset, parcellation, config)
    logger.info("Building SAM over %d regions, n=%d, k=%d, %s bound, delta=%g.", parcellation.n_rois, dataset.n,
                config.k, config.bound_method.value, config.delta)

    region_fn = functools.partial(_analyze_region, dataset=dataset, parcellation=parcellation, config=config, l=l)
    analyses = parallel_map(region_fn, parcellation.roi_ids, threads=config.threads)
    report = select_significant(analyses, ProportionTest(l=l, pi0=config.pi0, alpha=config.alpha),
                                statistic=config.statistic, bonferroni=config.bonferroni)
    return report.with_config(**config.to_dict(), n=dataset.n, n_features=dataset.n_features,
                              n_rois=parcellation.n_rois)


def method_comparison(report: SamReport, methods: Optional[Iterable] = None,
                      delta: Optional[float] = None) -> pd.DataFrame:
    """
    Per region, the worst case accuracy under every bound method for the region's own (n, k), next to the empirical
    accuracy. Columns delta_n_<method> and worst_case_<method> for each method.
    """
    methods = [BoundMethod.parse(m) for m in (methods if methods is not None else BoundMethod)]
    delta = float(report.config.get("delta", 0.05) if delta is None else delta)
    with_bias = bool(report.config.get("dim_includes_bias", False))

    rows = []
    for analysis in report.analyses:
        row = {"roi_id": analysis.roi_id, "roi_name": analysis.roi_name, "n": analysis.n, "k": analysis.k,
               "empirical_accuracy": analysis.empirical_accuracy}
        dim = analysis.k + 1 if with_bias else analysis.k
        for method in methods:
            bound = compute_bound(BoundRequest(method, analysis.n, dim, delta))
            row[f"delta_n_{method.value}"] = bound.delta_n
            row[f"worst_case_{method.value}"] = worst_case_accuracy(analysis.empirical_accuracy, bound.delta_n)
        rows.append(row)
    return pd.DataFrame(rows)
