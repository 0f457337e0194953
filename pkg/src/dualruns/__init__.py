"""Exact workbench for alternating-run polynomials of dual Stirling permutations."""

from .polys import IntPoly, RatPoly
from .series import TruncSeries
from .grammar import FormalSum, Grammar
from .theta import ClosedForm
from .analytic import RootSet, Verdict

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "RatPoly",
    "TruncSeries",
    "FormalSum",
    "Grammar",
    "ClosedForm",
    "RootSet",
    "Verdict",
    "__version__",
]
