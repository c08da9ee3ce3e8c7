"""
Truncated hypergeometric series, the left-hand side of the supercongruences.
"""

from .series import TruncSeriesSpec, rising, trunc_hyp, trunc_hyp_direct, trunc_hyp_exact

__all__ = ["TruncSeriesSpec", "rising", "trunc_hyp", "trunc_hyp_direct", "trunc_hyp_exact"]
