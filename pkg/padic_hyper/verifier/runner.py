"""
Sweep orchestration: runs registry entries over primes and turns outcomes
into ordered VerificationReport records.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Any, Iterable, Iterator, Literal, Sequence

from pydantic import BaseModel, ConfigDict
from sympy import isprime, primerange
from tenacity import Retrying, retry_if_result, stop_after_attempt

from padic_hyper.errors import InsufficientPrecision, PadicHyperError, PrecisionExhausted
from padic_hyper.padic import pad_eq_mod

from .registry import REGISTRY, IdentityCase, get_identity
from .session import CheckContext, Comparison, Outcome, Skipped, Verdict, VerifyOptions

logger = logging.getLogger(__name__)

Status = Literal["pass", "fail", "skip", "lowprec"]
STATUSES: tuple[Status, ...] = ("pass", "fail", "skip", "lowprec")
RETRY_EXTRA_PRECISION = 2


class VerificationReport(BaseModel):
    """One JSONL record; field order is the serialized key order."""

    model_config = ConfigDict(frozen=True)

    id: str
    p: int
    case: dict[str, Any]
    status: Status
    lhs: str = ""
    rhs: str = ""
    prec: str = ""

    def to_jsonl(self) -> str:
        return self.model_dump_json()


def odd_primes(p_min: int, p_max: int) -> list[int]:
    return [int(p) for p in primerange(max(p_min, 3), p_max + 1)]


# --- outcome -> report -------------------------------------------------


def _report(id: str, p: int, outcome: Outcome) -> VerificationReport:
    if isinstance(outcome, Skipped):
        logger.info(f"{id} p={p} {outcome.case} skipped ({outcome.reason})")
        return VerificationReport(id=id, p=p, case={**outcome.case, "reason": outcome.reason}, status="skip")
    if isinstance(outcome, Verdict):
        status: Status = "pass" if outcome.ok else "fail"
        report = VerificationReport(
            id=id, p=p, case=outcome.case, status=status, lhs=outcome.lhs, rhs=outcome.rhs, prec="exact"
        )
    else:
        case = outcome.case
        try:
            status = "pass" if pad_eq_mod(outcome.lhs, outcome.rhs, outcome.k) else "fail"
        except InsufficientPrecision:
            status, case = "lowprec", {**case, "reason": "insufficient-precision"}
        report = VerificationReport(
            id=id,
            p=p,
            case=case,
            status=status,
            lhs=str(outcome.lhs),
            rhs=str(outcome.rhs),
            prec=f"{p}^{outcome.k}",
        )
    if report.status == "fail":
        logger.warning(f"{id} p={p} {report.case} FAILED: {report.lhs} != {report.rhs}")
    return report


def _evaluate(case: IdentityCase, ctx: CheckContext) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    try:
        for outcome in case.check(ctx):
            reports.append(_report(case.id, ctx.p, outcome))
    except (InsufficientPrecision, PrecisionExhausted) as exc:
        logger.info(f"{case.id} p={ctx.p} ran out of precision at K={ctx.K}: {exc}")
        reports.append(
            VerificationReport(
                id=case.id, p=ctx.p, case={"reason": "insufficient-precision"}, status="lowprec", lhs=str(exc)
            )
        )
    except PadicHyperError as exc:
        logger.warning(f"{case.id} p={ctx.p} raised {type(exc).__name__}: {exc}")
        reports.append(
            VerificationReport(
                id=case.id, p=ctx.p, case={"error": type(exc).__name__}, status="fail", lhs=str(exc), rhs="error"
            )
        )
    return reports


def _run_cases(
    p: int, cases: Sequence[IdentityCase], K: int, target: int, options: VerifyOptions
) -> dict[str, list[VerificationReport]]:
    """Evaluate several entries at one prime over a single shared table sweep."""
    out: dict[str, list[VerificationReport]] = {}
    needs = {case.id: case.sweep_precision(p, K, options) for case in cases}
    feasible = []
    for case in cases:
        if (p ** needs[case.id]).bit_length() > options.max_bits:
            logger.info(f"{case.id} p={p} needs mod {p}^{needs[case.id]}, over {options.max_bits} bits")
            out[case.id] = [
                VerificationReport(
                    id=case.id, p=p, case={"reason": "range-overflow"}, status="lowprec", prec=f"{p}^{needs[case.id]}"
                )
            ]
        else:
            feasible.append(case)
    if not feasible:
        return out

    args = set().union(*(case.gamma_args(p, options) for case in feasible))
    sweep_K = max(needs[case.id] for case in feasible)
    ctx = CheckContext.build(p, K, target, args, sweep_K, options)
    for case in feasible:
        out[case.id] = _evaluate(case, ctx)
    return out


def _needs_retry(reports: list[VerificationReport]) -> bool:
    return any(r.status == "lowprec" and r.case.get("reason") == "insufficient-precision" for r in reports)


def _settle(
    case: IdentityCase, p: int, K: int, options: VerifyOptions, first: list[VerificationReport]
) -> list[VerificationReport]:
    """Keep the first attempt unless it ran out of precision; then rerun once at K + 2."""
    attempts = iter((None, K + RETRY_EXTRA_PRECISION))

    def attempt() -> list[VerificationReport]:
        K_run = next(attempts)
        if K_run is None:
            return first
        logger.info(f"retrying {case.id} at p={p} with K={K_run}")
        return _run_cases(p, [case], K_run, K, options)[case.id]

    retrying = Retrying(
        stop=stop_after_attempt(2),
        retry=retry_if_result(_needs_retry),
        retry_error_callback=lambda state: state.outcome.result(),
    )
    return retrying(attempt)


def run_prime(p: int, ids: Sequence[str], K: int, options: VerifyOptions) -> list[VerificationReport]:
    """Every requested entry at one prime; the unit of parallel work."""
    cases = [get_identity(i) for i in ids]
    reports: dict[str, list[VerificationReport]] = {}
    active = []
    for case in cases:
        if not case.prime_filter(p):
            logger.info(f"{case.id} p={p} outside filter ({case.filter_text})")
            reports[case.id] = [VerificationReport(id=case.id, p=p, case={"reason": "filter"}, status="skip")]
        elif case.congruence_exponent and K < case.congruence_exponent:
            reports[case.id] = [
                VerificationReport(
                    id=case.id,
                    p=p,
                    case={"reason": "precision-gate"},
                    status="lowprec",
                    prec=f"{p}^{case.congruence_exponent}",
                )
            ]
        else:
            active.append(case)

    first = _run_cases(p, active, K, K, options) if active else {}
    for case in active:
        reports[case.id] = _settle(case, p, K, options, first[case.id])
    return [r for case in cases for r in reports[case.id]]


def _prime_unit(unit: tuple[int, tuple[str, ...], int, VerifyOptions]) -> list[VerificationReport]:
    p, ids, K, options = unit
    return run_prime(p, ids, K, options)


def _ordered(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    """Registry order, then p; sweep order is kept within each (id, p)."""
    order = {id: i for i, id in enumerate(REGISTRY)}
    return sorted(reports, key=lambda r: (order[r.id], r.p))


def verify(
    id: str, p_range: Iterable[int], K_target: int, options: VerifyOptions | None = None
) -> Iterator[VerificationReport]:
    """Reports for one registry entry over the given odd primes."""
    options = options or VerifyOptions()
    get_identity(id)
    for p in p_range:
        if p == 2 or not isprime(p):
            raise ValueError(f"{p} is not an odd prime")
        yield from run_prime(p, (id,), K_target, options)


# --- full sweeps -------------------------------------------------------


@dataclass(slots=True)
class RunSummary:
    counts: dict[str, Counter] = field(default_factory=dict)

    @classmethod
    def from_reports(cls, reports: Iterable[VerificationReport]) -> RunSummary:
        summary = cls()
        for r in reports:
            summary.counts.setdefault(r.id, Counter())[r.status] += 1
        return summary

    @property
    def failures(self) -> int:
        return sum(c["fail"] for c in self.counts.values())

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def to_dict(self) -> dict[str, dict[str, int]]:
        return {id: {s: counts[s] for s in STATUSES} for id, counts in self.counts.items()}

    def table(self) -> str:
        width = max([len("identity")] + [len(id) for id in self.counts])
        lines = [f"{'identity':<{width}}  " + "  ".join(f"{s:>7}" for s in STATUSES)]
        for id, counts in self.counts.items():
            lines.append(f"{id:<{width}}  " + "  ".join(f"{counts[s]:>7}" for s in STATUSES))
        total = Counter()
        for counts in self.counts.values():
            total.update(counts)
        lines.append(f"{'total':<{width}}  " + "  ".join(f"{total[s]:>7}" for s in STATUSES))
        return "\n".join(lines)


@dataclass(slots=True)
class RunResult:
    reports: list[VerificationReport]
    summary: RunSummary


def run_all(
    p_min: int,
    p_max: int,
    K_target: int,
    jobs: int = 1,
    options: VerifyOptions | None = None,
    ids: Sequence[str] | None = None,
) -> RunResult:
    """Run registry entries (all by default) over the odd primes in [p_min, p_max]."""
    options = options or VerifyOptions()
    ids = tuple(ids) if ids is not None else tuple(REGISTRY)
    for id in ids:
        get_identity(id)
    primes = odd_primes(p_min, p_max)
    logger.info(f"verifying {len(ids)} identities over {len(primes)} primes at K={K_target} with {jobs} job(s)")

    units = [(p, ids, K_target, options) for p in primes]
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_prime_unit, units))
    else:
        batches = [_prime_unit(unit) for unit in units]

    reports = _ordered(r for batch in batches for r in batch)
    summary = RunSummary.from_reports(reports)
    logger.info(f"verification finished with {summary.failures} failure(s)")
    return RunResult(reports, summary)


def write_jsonl(reports: Iterable[VerificationReport], stream: IO[str]) -> None:
    for report in reports:
        stream.write(report.to_jsonl())
        stream.write("\n")
