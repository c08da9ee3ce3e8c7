"""
Identity registry and prime-sweep verification harness.
"""

from .registry import REGISTRY, IdentityCase, delta, get_identity
from .runner import (
    RunResult,
    RunSummary,
    VerificationReport,
    odd_primes,
    run_all,
    run_prime,
    verify,
    write_jsonl,
)
from .session import DEFAULT_D_PAIRS, CheckContext, VerifyOptions

__all__ = [
    "DEFAULT_D_PAIRS",
    "REGISTRY",
    "CheckContext",
    "IdentityCase",
    "RunResult",
    "RunSummary",
    "VerificationReport",
    "VerifyOptions",
    "delta",
    "get_identity",
    "odd_primes",
    "run_all",
    "run_prime",
    "verify",
    "write_jsonl",
]
