# __init__.py

from .pls import PlsModel, deflate, pls_fit, pls_transform
from .svm import LinearClassifier, RiskEstimate, empirical_risk, majority_classifier, predict, svm_fit

__all__ = [
    "PlsModel",
    "deflate",
    "pls_fit",
    "pls_transform",
    "LinearClassifier",
    "RiskEstimate",
    "empirical_risk",
    "majority_classifier",
    "predict",
    "svm_fit"
]
