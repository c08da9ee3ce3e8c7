"""
p-adic hypergeometric functions, their identities, and a harness that checks them prime by prime.
"""

__all__ = [
    "charsums",
    "config",
    "gamma",
    "gfunction",
    "hyperseries",
    "padic",
    "qseries",
    "verifier",
]
