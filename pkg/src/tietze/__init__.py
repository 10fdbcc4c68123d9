"""Tietze transformation simplifier for finitely presented groups."""

__version__ = "0.1.0"

from .engine import EngineConfig, EngineStats, simplify
from .presentation import (
    ParseError,
    Presentation,
    make_presentation,
    parse_presentation,
    serialize_presentation,
)
from .verify import abelian_invariants

__all__ = [
    "EngineConfig",
    "EngineStats",
    "ParseError",
    "Presentation",
    "abelian_invariants",
    "make_presentation",
    "parse_presentation",
    "serialize_presentation",
    "simplify",
    "__version__",
]
