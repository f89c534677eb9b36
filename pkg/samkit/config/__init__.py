# __init__.py

from .config import CfgNode, get_cfg

__all__ = [
    "CfgNode",
    "get_cfg",
]
