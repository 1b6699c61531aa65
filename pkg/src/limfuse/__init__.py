"""Exact computational engine for direct limits of graded vector spaces and
fusion-ring data of generic Virasoro-type ribbon categories.

Everything is computed over arbitrary-precision rationals; no floating point
enters any result (a single rational sampling helper is used to *select* a
candidate minimum, which is then verified symbolically).
"""

from limfuse.exact import Rat, RatFunc, Poly, Phase

__all__ = ["Rat", "RatFunc", "Poly", "Phase"]
__version__ = "0.1.0"
