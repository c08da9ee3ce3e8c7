"""
Command-line entry point: one-shot computations and the verification sweep.

    padic-hyper gamma --p 7 --prec 3 --arg 1/2
    padic-hyper ngn --p 13 --prec 3 --a 1/2,1/2,1/4,3/4 --b 1,1,1,1 --s 1
    padic-hyper verify all --p-min 3 --p-max 31 --prec 3 --jobs 4 --json -
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from padic_hyper.config import Settings, get_settings
from padic_hyper.errors import PadicHyperError
from padic_hyper.qseries import FORMS
from padic_hyper.service import ComputeService
from padic_hyper.verifier import REGISTRY, VerifyOptions, run_all, write_jsonl

logger = logging.getLogger(__name__)

LOG_FORMAT = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _add_prime(parser: argparse.ArgumentParser, precision_flag: str = "--prec") -> None:
    parser.add_argument("--p", type=int, required=True, help="Odd prime.")
    parser.add_argument(precision_flag, dest="prec", type=int, required=True, help="Precision exponent K (mod p^K).")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="padic-hyper", description="p-adic hypergeometric functions and identity checks.")
    parser.add_argument("--log-level", default=settings.log_level, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    commands = parser.add_subparsers(dest="command", required=True)

    gamma = commands.add_parser("gamma", help="Morita's Gamma_p at a rational argument.")
    _add_prime(gamma)
    gamma.add_argument("--arg", required=True, help="Rational argument R/S with p not dividing S.")

    teich = commands.add_parser("teich", help="Teichmuller character omega^J(x).")
    _add_prime(teich)
    teich.add_argument("--x", type=int, required=True)
    teich.add_argument("--pow", type=int, default=1, help="Character exponent J (default 1).")

    ngn = commands.add_parser("ngn", help="Evaluate nGn[a; b | s]_p.")
    _add_prime(ngn)
    ngn.add_argument("--a", required=True, help="Comma-separated upper parameters.")
    ngn.add_argument("--b", required=True, help="Comma-separated lower parameters.")
    ngn.add_argument("--s", type=int, default=1)

    jacobi = commands.add_parser("jacobi", help="Jacobi sum J(omega^j1, omega^j2).")
    _add_prime(jacobi)
    jacobi.add_argument("--j1", type=int, required=True)
    jacobi.add_argument("--j2", type=int, required=True)
    jacobi.add_argument("--via", choices=["gamma", "sum"], default="sum")

    fseries = commands.add_parser("fseries", help="Truncated hypergeometric series mod p^M.")
    _add_prime(fseries)
    fseries.add_argument("--upper", required=True)
    fseries.add_argument("--lower", required=True, help="Lower parameters without the implicit n! factor.")
    fseries.add_argument("--z", default="1")
    fseries.add_argument("--trunc", default="p-1", help="Truncation index: an integer or p, p-K, p+K.")

    eta = commands.add_parser("eta", help="Print the q-expansion of a newform.")
    eta.add_argument("--form", choices=FORMS, required=True)
    eta.add_argument("--nmax", type=int, required=True)
    eta.add_argument("--cache", type=Path, default=None, help="Directory for q-series cache files.")

    coef = commands.add_parser("coef", help="One Fourier coefficient of a newform.")
    coef.add_argument("--form", choices=FORMS, required=True)
    coef.add_argument("--n", type=int, required=True)
    coef.add_argument("--nmax", type=int, default=None, help="Expansion length (default from settings).")

    verify = commands.add_parser("verify", help="Check registered identities over a range of primes.")
    verify.add_argument("id", help="Registry id, or 'all'.")
    verify.add_argument("--p-min", type=int, default=None)
    verify.add_argument("--p-max", type=int, default=None)
    verify.add_argument("--prec", type=int, default=None)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--deep", action="store_true", help="Use the deep sweep range and precision.")
    verify.add_argument("--json", default=None, help="Write JSONL records to PATH, or '-' for stdout.")
    verify.add_argument("--cache", type=Path, default=None)
    verify.add_argument("--d1", type=int, default=None)
    verify.add_argument("--d2", type=int, default=None)

    commands.add_parser("list", help="List registered identities.")

    serve = commands.add_parser("serve", help="Run the HTTP API with uvicorn.")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _run_verify(args: argparse.Namespace, settings: Settings) -> int:
    if args.id != "all" and args.id not in REGISTRY:
        print(f"unknown identity {args.id!r}; see 'padic-hyper list'", file=sys.stderr)
        return EXIT_USAGE
    if (args.d1 is None) != (args.d2 is None):
        print("--d1 and --d2 must be given together", file=sys.stderr)
        return EXIT_USAGE

    p_min = args.p_min if args.p_min is not None else settings.p_min
    p_max = args.p_max if args.p_max is not None else (settings.deep_p_max if args.deep else settings.p_max)
    prec = args.prec if args.prec is not None else (settings.deep_prec if args.deep else settings.prec)
    jobs = args.jobs if args.jobs is not None else settings.jobs
    if prec < 1 or jobs < 1:
        print("--prec and --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE

    options = VerifyOptions.from_settings(
        settings,
        cache_dir=str(args.cache) if args.cache else None,
        d_pairs=((args.d1, args.d2),) if args.d1 is not None else None,
    )
    ids = None if args.id == "all" else [args.id]
    result = run_all(p_min, p_max, prec, jobs=jobs, options=options, ids=ids)

    if args.json == "-":
        write_jsonl(result.reports, sys.stdout)
    elif args.json:
        with Path(args.json).open("w", encoding="utf-8") as fh:
            write_jsonl(result.reports, fh)
    print(result.summary.table(), file=sys.stderr)
    return result.summary.exit_code


def _run_list() -> int:
    width = max(len(id) for id in REGISTRY)
    for id, case in REGISTRY.items():
        print(f"{id:<{width}}  [{case.filter_text}]  {case.claim}")
    return EXIT_OK


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("padic_hyper.main:create_app", host=args.host, port=args.port, factory=True)
    return EXIT_OK


def dispatch(args: argparse.Namespace, settings: Settings) -> int:
    service = ComputeService(settings)
    command = args.command
    if command == "gamma":
        print(service.gamma(args.p, args.prec, args.arg))
    elif command == "teich":
        print(service.teich(args.p, args.prec, args.x, args.pow))
    elif command == "ngn":
        print(service.ngn(args.p, args.prec, args.a, args.b, args.s))
    elif command == "jacobi":
        print(service.jacobi(args.p, args.prec, args.j1, args.j2, args.via))
    elif command == "fseries":
        print(service.fseries(args.p, args.prec, args.upper, args.lower, args.z, args.trunc))
    elif command == "eta":
        series = service.eta(args.form, args.nmax, str(args.cache) if args.cache else None)
        for n, c in enumerate(series.tolist()):
            print(f"{n}\t{c}")
    elif command == "coef":
        print(service.coef(args.form, args.n, args.nmax))
    elif command == "verify":
        return _run_verify(args, settings)
    elif command == "list":
        return _run_list()
    elif command == "serve":
        return _run_serve(args)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    try:
        settings = get_settings()
    except ValidationError as exc:
        logging.basicConfig(level=logging.ERROR, format=LOG_FORMAT)
        logger.error(f"invalid configuration: {exc}")
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    args = build_parser(settings).parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT)
    try:
        return dispatch(args, settings)
    except (PadicHyperError, ValueError) as exc:
        logger.error(f"{args.command} failed: {type(exc).__name__}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
