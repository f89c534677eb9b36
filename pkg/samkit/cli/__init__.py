# __init__.py

from .commands import COMMANDS
from .custom_parser import get_parser

__all__ = [
    "COMMANDS",
    "get_parser"
]
