"""Exact rational arithmetic toolbox and verification pipeline for a
computer-assisted self-similar NLS blowup profile construction.

Subpackages by role: ``exact`` (rationals, Gaussian rationals, certified
enclosures), ``poly`` (three polynomial representations with exact
conversions), ``tnorm`` (the l^1-of-Chebyshev-coefficients sup-norm
substitute), ``certify`` (grid extrema with Lipschitz budgets), ``matpoly``
(4x4 polynomial matrices), ``profile`` (the concrete constructed objects),
``oscillate`` (boundary-sum estimates), and ``verify`` (the task registry
and runner behind the ``verify`` command).
"""

from .exact import (
    Enclosure,
    ComplexEnclosure,
    GaussianRational,
    QQ,
    cos_enclose,
    exp_i_enclose,
    parse_fraction,
    format_fraction,
    pi_enclosure,
    sin_enclose,
)
from .poly import ChebPoly1, LagPoly1, MonoPoly1, MonoPoly2, PolyFraction

__all__ = [
    "Enclosure", "ComplexEnclosure", "GaussianRational", "QQ",
    "cos_enclose", "sin_enclose", "exp_i_enclose", "pi_enclosure",
    "parse_fraction", "format_fraction",
    "ChebPoly1", "LagPoly1", "MonoPoly1", "MonoPoly2", "PolyFraction",
]

__version__ = "1.0.0"
