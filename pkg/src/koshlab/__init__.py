"""Numerical laboratory for Bessel-kernel integrals and divisor-sum series identities."""
from ._accel import COMPILED
from .complexcore import EvalResult

__version__ = "0.1.0"

__all__ = ["COMPILED", "EvalResult", "__version__"]
