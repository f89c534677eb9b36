import logging
import os

import yaml
from yacs.config import CfgNode as _CfgNode

BASE_KEY = "_BASE_"


class CfgNode(_CfgNode):
    """
    The same as `yacs.config.CfgNode`, but loading a yaml file also follows its `_BASE_` key, so a run config only
    has to list what differs from the base file. Paths in `_BASE_` are relative to the file that names them.
    """

    @classmethod
    def load_yaml_with_base(cls, filename: str) -> dict:
        with open(filename, "r") as f:
            cfg = yaml.safe_load(f) or {}

        if BASE_KEY in cfg:
            base_cfg_file = cfg.pop(BASE_KEY)
            if not os.path.isabs(base_cfg_file):
                base_cfg_file = os.path.join(os.path.dirname(filename), base_cfg_file)
            base_cfg = cls.load_yaml_with_base(base_cfg_file)
            _merge_a_into_b(cfg, base_cfg)
            return base_cfg
        return cfg

    def merge_from_file(self, cfg_filename: str) -> None:
        loaded_cfg = self.load_yaml_with_base(cfg_filename)
        loaded_cfg = type(self)(loaded_cfg)
        self.merge_from_other_cfg(loaded_cfg)

    def dump_to(self, path: str) -> None:
        with open(path, "w") as f:
            f.write(self.dump())


def _merge_a_into_b(a: dict, b: dict) -> None:
    # values of a win, nested dicts are merged key by key
    for k, v in a.items():
        if isinstance(v, dict) and k in b and isinstance(b[k], dict):
            _merge_a_into_b(v, b[k])
        else:
            b[k] = v


def get_cfg() -> CfgNode:
    """
    Get a copy of the default config, with THREADS taken from the SAMKIT_THREADS environment variable when set.
    """
    from .defaults import _C

    cfg = _C.clone()
    threads = os.environ.get("SAMKIT_THREADS")
    if threads:
        try:
            cfg.THREADS = int(threads)
        except ValueError:
            logging.getLogger(__name__).warning("Ignoring SAMKIT_THREADS=%r, not an integer.", threads)
    return cfg
