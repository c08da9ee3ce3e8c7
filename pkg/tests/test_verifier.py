import io
import json
from fractions import Fraction

import pytest

from padic_hyper.errors import InsufficientPrecision, UnknownIdentity
from padic_hyper.verifier import (
    REGISTRY,
    IdentityCase,
    VerificationReport,
    VerifyOptions,
    delta,
    get_identity,
    odd_primes,
    run_all,
    run_prime,
    verify,
    write_jsonl,
)
from padic_hyper.verifier.session import Comparison

REGISTERED = [
    "gamma-reflection",
    "gamma-mult",
    "gamma-dup",
    "teich-hom",
    "s-sign",
    "h-sign",
    "lemma-quad",
    "lemma-nonquad",
    "jacobi-gk",
    "thm-quad-transform",
    "thm-reduction",
    "thm-inversion",
    "thm-main-id",
    "ao-level8",
    "thm-gtoc-level16",
    "kilbourn-super",
    "rv3-super",
    "thm-4g1",
    "dmc-level25-g",
    "dmc-level25-f",
    "dmc-level25-f-wide",
    "eta-weil",
    "eta-hecke",
]


def test_registry_order():
    assert list(REGISTRY) == REGISTERED


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        get_identity("no-such-identity")


def test_odd_primes_and_delta():
    assert odd_primes(2, 20) == [3, 5, 7, 11, 13, 17, 19]
    assert odd_primes(50, 52) == []
    assert delta(14, 7) == 1
    assert delta(-6, 7) == 0


def test_anchor_at_three(options):
    (report,) = run_prime(3, ["ao-level8"], 4, options)
    assert report.status == "pass"
    assert report.prec == "3^4"
    assert report.case == {"weil_certified": True}


def test_main_identity_reports(options):
    reports = list(verify("thm-main-id", [3, 5, 7, 11], 3, options))
    assert [r.p for r in reports] == [3, 5, 7, 11]
    assert all(r.status == "pass" for r in reports)


def test_verify_rejects_non_primes(options):
    with pytest.raises(ValueError):
        list(verify("s-sign", [9], 3, options))


def test_prime_filter_skips(options):
    (report,) = run_prime(5, ["h-sign"], 3, options)
    assert report.status == "skip"
    assert report.case == {"reason": "filter"}


def test_pair_outside_congruence_is_skipped():
    options = VerifyOptions(d_pairs=((2, 5),))
    (report,) = run_prime(7, ["thm-4g1"], 3, options)
    assert report.status == "skip"
    assert report.case == {"d1": 2, "d2": 5, "reason": "filter"}


def test_supercongruence_needs_three_digits(options):
    (report,) = run_prime(7, ["kilbourn-super"], 2, options)
    assert report.status == "lowprec"
    assert report.case == {"reason": "precision-gate"}


def test_oversized_modulus_is_lowprec():
    (report,) = run_prime(7, ["gamma-reflection"], 3, VerifyOptions(max_bits=8))
    assert report.status == "lowprec"
    assert report.case == {"reason": "range-overflow"}


def test_hecke_skips_bad_prime_and_short_expansion():
    reports = run_prime(5, ["eta-hecke"], 3, VerifyOptions(qseries_nmax=30))
    assert [(r.case["form"], r.status) for r in reports] == [("a", "pass"), ("b", "skip"), ("c", "pass")]
    reports = run_prime(7, ["eta-hecke"], 3, VerifyOptions(qseries_nmax=30))
    assert all(r.case["reason"] == "nmax" for r in reports)


def test_retry_raises_working_precision(monkeypatch, options):
    attempts = []

    def check(ctx):
        attempts.append(ctx.K)
        if ctx.K < ctx.target + 2:
            raise InsufficientPrecision("first attempt is too coarse")
        yield Comparison({}, ctx.const(1), ctx.const(Fraction(3, 3)), ctx.target)

    monkeypatch.setitem(REGISTRY, "retry-check", IdentityCase("retry-check", "1 = 1", "odd p", "none", check))
    (report,) = run_prime(5, ["retry-check"], 2, options)
    assert attempts == [2, 4]
    assert report.status == "pass"
    assert report.prec == "5^2"


def test_small_sweep_has_no_failures(options):
    result = run_all(3, 7, 3, options=options)
    assert result.summary.failures == 0
    assert result.summary.exit_code == 0
    assert set(result.summary.counts) == set(REGISTERED)
    order = {id: i for i, id in enumerate(REGISTRY)}
    keys = [(order[r.id], r.p) for r in result.reports]
    assert keys == sorted(keys)


def test_parallel_output_matches_serial(options):
    ids = ["s-sign", "lemma-quad", "thm-main-id"]
    serial = run_all(3, 13, 3, jobs=1, options=options, ids=ids)
    parallel = run_all(3, 13, 3, jobs=2, options=options, ids=ids)
    assert [r.to_jsonl() for r in serial.reports] == [r.to_jsonl() for r in parallel.reports]


def test_empty_range_exits_zero(options):
    result = run_all(50, 52, 3, options=options)
    assert result.reports == []
    assert result.summary.exit_code == 0


def test_jsonl_record_shape(options):
    result = run_all(3, 5, 3, options=options, ids=["s-sign"])
    stream = io.StringIO()
    write_jsonl(result.reports, stream)
    lines = stream.getvalue().splitlines()
    assert len(lines) == 4
    record = json.loads(lines[0])
    assert list(record) == ["id", "p", "case", "status", "lhs", "rhs", "prec"]
    assert record["id"] == "s-sign"
    assert record["prec"] == "3^3"


def test_summary_table_and_failures():
    reports = [
        VerificationReport(id="s-sign", p=3, case={}, status="pass"),
        VerificationReport(id="s-sign", p=5, case={}, status="fail"),
    ]
    from padic_hyper.verifier import RunSummary

    summary = RunSummary.from_reports(reports)
    assert summary.failures == 1
    assert summary.exit_code == 1
    assert summary.to_dict() == {"s-sign": {"pass": 1, "fail": 1, "skip": 0, "lowprec": 0}}
    assert summary.table().splitlines()[-1].split() == ["total", "1", "1", "0", "0"]


def test_exact_checks_report_exact_precision():
    reports = run_prime(5, ["eta-hecke", "gamma-reflection"], 3, VerifyOptions(qseries_nmax=30))
    hecke = [r for r in reports if r.id == "eta-hecke" and r.status == "pass"]
    assert hecke and all(r.prec == "exact" for r in hecke)
    reflection = [r for r in reports if r.id == "gamma-reflection"]
    assert reflection and all(r.prec == "5^3" for r in reflection)


def test_fifths_series_filters_split_the_residues():
    plain, wide = get_identity("dmc-level25-f"), get_identity("dmc-level25-f-wide")
    assert [p for p in odd_primes(3, 31) if plain.prime_filter(p)] == [11, 19, 29, 31]
    assert [p for p in odd_primes(3, 31) if wide.prime_filter(p)] == [3, 7, 13, 17, 23]
