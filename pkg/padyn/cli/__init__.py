"""
padyn Command Line Module
Expression parsing, JSON rendering and subcommand dispatch
"""

from .parser import parse_map, parse_point, parse_polynomial, parse_rational
from .output import CommandResult
from .app import PadynCLI, main

__all__ = [
    'parse_map',
    'parse_point',
    'parse_polynomial',
    'parse_rational',
    'CommandResult',
    'PadynCLI',
    'main',
]
