"""Content, discrepancy and measure-space quantifications of semantic
information over propositional possible-worlds universes."""

from .formula import Atom, And, Not, Or, negate, parse, render
from .worlds import Message, Universe, build_universe, interpret

__version__ = "0.1.0"

__all__ = ["Atom", "And", "Not", "Or", "negate", "parse", "render", "Message", "Universe", "build_universe", "interpret"]
