from .config import CfgNode as CN

# -----------------------------------------------------------------------------
# Config definition
# -----------------------------------------------------------------------------
# Defaults follow the published analysis: first PLS component, Cover bound at 95% confidence, one sided proportion
# test at alpha 0.05 against a chance level of 0.5.

_C = CN()

_C.SEED = 0
# number of worker processes, 0 means one per cpu
_C.THREADS = 0
_C.OUTPUT_DIR = "sam_output"

_C.DATA = CN()
# manifest json naming the features and labels csv files
_C.DATA.MANIFEST = ""
# csv with feature_index,roi_id,roi_name rows
_C.DATA.ATLAS = ""

_C.PLS = CN()
_C.PLS.COMPONENTS = 1

_C.SVM = CN()
_C.SVM.C_REG = 1.0
_C.SVM.TOL = 1e-6
# passes over the full sample
_C.SVM.MAX_ITER = 1000

_C.BOUND = CN()
# "cover", "vc" or "massart"
_C.BOUND.METHOD = "cover"
_C.BOUND.DELTA = 0.05
# feed k + 1 instead of k to the bound
_C.BOUND.DIM_INCLUDES_BIAS = False

_C.INFERENCE = CN()
_C.INFERENCE.ALPHA = 0.05
_C.INFERENCE.PI0 = 0.5
# "worst_case" or "empirical"
_C.INFERENCE.STATISTIC = "worst_case"
# "rois" or "samples"
_C.INFERENCE.DENOMINATOR = "rois"
_C.INFERENCE.BONFERRONI = False

_C.SYNTH = CN()
_C.SYNTH.N = 200
_C.SYNTH.ROIS = 20
_C.SYNTH.VOXELS_PER_ROI = 50
_C.SYNTH.EFFECT_ROIS = []
_C.SYNTH.EFFECT_SIZE = 0.0
_C.SYNTH.NOISE_SD = 1.0

_C.SIMULATION = CN()
_C.SIMULATION.TRIALS = 2000
# fresh samples used to measure the actual risk of every fitted classifier
_C.SIMULATION.HOLDOUT = 100000
# class +1 mean shift of the coverage population, in noise standard deviations
_C.SIMULATION.EFFECT_SIZE = 1.0
_C.SIMULATION.N_GRID = [50, 100, 200, 400]

_C.REPORT = CN()
# "json" or "csv"
_C.REPORT.FORMAT = "json"
