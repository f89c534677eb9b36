import argparse

BOUND_METHODS = ("cover", "vc", "massart")

# options whose dest is an upper case config key override that key after the config file is merged


def int_list(value: str):
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got {value!r}")


def str_list(value: str):
    return [v.strip() for v in value.split(",") if v.strip()]


def method_list(value: str):
    methods = [v.lower() for v in str_list(value)]
    unknown = [m for m in methods if m not in BOUND_METHODS]
    if unknown or not methods:
        raise argparse.ArgumentTypeError(f"expected bound methods out of {','.join(BOUND_METHODS)}, got {value!r}")
    return methods


def _cfg_option(parser, flag, key, **kwargs):
    parser.add_argument(flag, dest=key, default=None, **kwargs)


def _cfg_flag(parser, flag, key, help):
    parser.add_argument(flag, dest=key, default=None, action="store_const", const=True, help=help)


def _common(parser):
    parser.add_argument("--config-file", default="", metavar="FILE", help="path to a yaml config file")
    parser.add_argument("--json", action="store_true", help="print the numeric output as json")
    _cfg_option(parser, "--seed", "SEED", type=int, help="seed of every random stream of the run")
    _cfg_option(parser, "--threads", "THREADS", type=int, help="worker processes, 0 for one per cpu")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at debug level")
    parser.add_argument("--opts", help="Modify config options using the command-line 'KEY VALUE' pairs", default=[],
                        nargs=argparse.REMAINDER)


def _bound_options(parser, flag="--method"):
    _cfg_option(parser, flag, "BOUND.METHOD", choices=BOUND_METHODS, help="deviation bound")
    _cfg_option(parser, "--delta", "BOUND.DELTA", type=float, help="bound failure probability")


def _synth_options(parser):
    _cfg_option(parser, "--rois", "SYNTH.ROIS", type=int, help="number of regions")
    _cfg_option(parser, "--voxels-per-roi", "SYNTH.VOXELS_PER_ROI", type=int, help="features per region")
    _cfg_option(parser, "--effect-rois", "SYNTH.EFFECT_ROIS", type=int_list,
                help="regions with a class effect, e.g. 0,1,2")
    _cfg_option(parser, "--effect-size", "SYNTH.EFFECT_SIZE", type=float,
                help="class +1 mean shift in the effect regions, in noise standard deviations")
    _cfg_option(parser, "--noise-sd", "SYNTH.NOISE_SD", type=float, help="voxel noise standard deviation")


def _pipeline_options(parser):
    _cfg_option(parser, "--components", "PLS.COMPONENTS", type=int, help="PLS components per region")
    _bound_options(parser, flag="--bound")
    _cfg_option(parser, "--alpha", "INFERENCE.ALPHA", type=float, help="significance level")
    _cfg_option(parser, "--c-reg", "SVM.C_REG", type=float, help="SVM regularization constant")
    _cfg_option(parser, "--statistic", "INFERENCE.STATISTIC", choices=["worst_case", "empirical"],
                help="accuracy fed to the proportion test")
    _cfg_option(parser, "--denominator", "INFERENCE.DENOMINATOR", choices=["rois", "samples"],
                help="l of the proportion test")
    _cfg_flag(parser, "--bonferroni", "INFERENCE.BONFERRONI", help="test every region at alpha / number of regions")
    _cfg_flag(parser, "--dim-includes-bias", "BOUND.DIM_INCLUDES_BIAS", help="feed k + 1 to the bound instead of k")


def get_parser():
    parser = argparse.ArgumentParser(prog="samkit",
                                     description="Statistical agnostic maps from in-sample linear classifiers")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    #######################################################################################################
    # BOUND
    bound = commands.add_parser("bound", help="deviation between empirical and actual risk")
    _bound_options(bound)
    bound.add_argument("--n", type=int, required=True, help="sample size")
    bound.add_argument("--dim", type=int, required=True, help="dimension of the linear classifier")
    _cfg_flag(bound, "--dim-includes-bias", "BOUND.DIM_INCLUDES_BIAS", help="feed dim + 1 to the bound instead of dim")
    _common(bound)

    #######################################################################################################
    # SAM
    sam = commands.add_parser("sam", help="build a statistical agnostic map from a dataset and an atlas")
    _cfg_option(sam, "--data", "DATA.MANIFEST", metavar="MANIFEST", help="dataset manifest json")
    _cfg_option(sam, "--atlas", "DATA.ATLAS", metavar="CSV", help="atlas csv")
    _pipeline_options(sam)
    sam.add_argument("--out", default="", metavar="PATH", help="report path, default OUTPUT_DIR/report.<format>")
    _cfg_option(sam, "--format", "REPORT.FORMAT", choices=["json", "csv"], help="report format")
    sam.add_argument("--compare-out", default="", metavar="PATH",
                     help="also write the per region comparison of all bound methods as csv")
    _common(sam)

    #######################################################################################################
    # SYNTH
    synth = commands.add_parser("synth", help="write a synthetic dataset with planted effect regions")
    _cfg_option(synth, "--n", "SYNTH.N", type=int, help="subjects, half per class")
    _synth_options(synth)
    synth.add_argument("--out", default="", metavar="DIR", help="output folder, default OUTPUT_DIR")
    _common(synth)

    #######################################################################################################
    # SIMULATE
    simulate = commands.add_parser("simulate", help="Monte Carlo experiments")
    experiments = simulate.add_subparsers(dest="experiment", metavar="EXPERIMENT")
    experiments.required = True

    coverage = experiments.add_parser("coverage", help="violation rate of a bound on a Gaussian population")
    _bound_options(coverage)
    coverage.add_argument("--n", type=int, required=True, help="training sample size")
    coverage.add_argument("--dim", type=int, default=1, help="feature dimension, equal to the PLS components")
    _cfg_option(coverage, "--trials", "SIMULATION.TRIALS", type=int, help="Monte Carlo trials, at least 100")
    _cfg_option(coverage, "--holdout", "SIMULATION.HOLDOUT", type=int, help="fresh draws per actual risk")
    _cfg_option(coverage, "--effect-size", "SIMULATION.EFFECT_SIZE", type=float, help="class +1 mean shift")
    _common(coverage)

    rademacher = experiments.add_parser("rademacher", help="Rademacher average on a Gaussian sample")
    rademacher.add_argument("--n", type=int, required=True, help="sample size")
    rademacher.add_argument("--dim", type=int, default=1, help="feature dimension")
    _cfg_option(rademacher, "--trials", "SIMULATION.TRIALS", type=int, help="Monte Carlo trials")
    _common(rademacher)

    sweep = experiments.add_parser("sweep", help="SAM on nested samples of a synthetic dataset")
    _cfg_option(sweep, "--n-grid", "SIMULATION.N_GRID", type=int_list, help="sample sizes, e.g. 50,100,200")
    _synth_options(sweep)
    _pipeline_options(sweep)
    sweep.add_argument("--out", default="", metavar="PATH", help="per region csv of every sample size")
    _common(sweep)

    #######################################################################################################
    # CURVE
    curve = commands.add_parser("curve", help="bound values over a grid of sample sizes and dimensions")
    curve.add_argument("--methods", type=method_list, default=list(BOUND_METHODS), help="e.g. cover,vc")
    curve.add_argument("--n-grid", type=int_list, required=True, help="sample sizes")
    curve.add_argument("--dim-grid", type=int_list, default=[1], help="dimensions")
    _cfg_option(curve, "--delta", "BOUND.DELTA", type=float, help="bound failure probability")
    curve.add_argument("--out", default="", metavar="PATH", help="csv path, printed to stdout when empty")
    _common(curve)
    return parser
