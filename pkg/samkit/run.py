#!/usr/bin/env python
"""
SAM command line.

Reads an optional yaml config (with _BASE_ inheritance), applies the flags given on the command line and then the
trailing --opts KEY VALUE pairs, freezes the result and runs one of the subcommands: bound, sam, synth,
simulate {coverage, rademacher, sweep} or curve. Logs go to stderr, results to stdout.

Exit codes: 0 on success, 2 on a usage error, 1 when the library rejects the input or a file cannot be used.
"""

import logging
import sys

import yaml

from samkit.cli import COMMANDS, get_parser
from samkit.config import get_cfg
from samkit.errors import SamkitError
from samkit.utils import setup_logger

logger = logging.getLogger("samkit.run")


def setup(args):
    """
    Create the config: defaults, then the config file, then explicit flags, then --opts.
    """
    cfg = get_cfg()
    if args.config_file:
        cfg.merge_from_file(args.config_file)

    # flags carrying a config key as dest, only the ones actually given
    overrides = []
    for key, value in sorted(vars(args).items()):
        if key.isupper() and value is not None:
            overrides.extend([key, value])
    cfg.merge_from_list(overrides)
    cfg.merge_from_list(args.opts)
    cfg.freeze()
    return cfg


def _fail(args, error) -> int:
    print(f"samkit {args.command}: error: {error}", file=sys.stderr)
    return 1


def main(argv=None) -> int:
    parser = get_parser()
    try:
        # argparse exits with 2 on usage errors, after printing the usage line and the offending flag
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    setup_logger(level=logging.DEBUG if args.verbose else logging.INFO)
    try:
        cfg = setup(args)
    except (KeyError, ValueError, AssertionError) as e:
        # unknown config keys and values of the wrong type
        print(f"{parser.prog} {args.command}: error: invalid configuration: {e}", file=sys.stderr)
        return 2
    except (OSError, yaml.YAMLError) as e:
        return _fail(args, e)
    logger.info("Running with full config:\n%s", cfg)

    command = args.experiment if args.command == "simulate" else args.command
    try:
        return COMMANDS[command](cfg, args)
    except (SamkitError, OSError) as e:
        return _fail(args, e)


if __name__ == "__main__":
    sys.exit(main())
