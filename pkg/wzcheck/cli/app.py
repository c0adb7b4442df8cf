"""Command line front end: verify, list, telescope and identity."""

import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence, Text, Union

from wzcheck.claims import registry
from wzcheck.claims.claim import InternalMismatch
from wzcheck.common import logger
from wzcheck.config import config
from wzcheck.engine import engine, report

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MISMATCH = 2
EXIT_USAGE = config.CONFIG_ERROR_EXIT_CODE


class Error(Exception):
    """Base Exception handling class."""


class UsageError(Error):
    """The command line could not be parsed."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: Text) -> None:
        raise UsageError(message)


def _claim_ids(value: Text) -> Union[str, List[str]]:
    if value == engine.ALL_CLAIMS:
        return engine.ALL_CLAIMS
    ids = [claim_id.strip() for claim_id in value.split(",") if claim_id.strip()]
    if not ids:
        raise argparse.ArgumentTypeError("expected 'all' or a comma separated list of claim ids")
    return ids


def _add_output_flags(parser: argparse.ArgumentParser, defaults: config.Defaults) -> None:
    parser.add_argument("--format", choices=config.OUTPUT_FORMATS, default=defaults.format)
    parser.add_argument("--out", help="Write results to this file instead of standard output.")


def build_parser() -> argparse.ArgumentParser:
    defaults = config.get_config().defaults
    parser = _ArgumentParser(
        prog="wzcheck", description="Verifies WZ-derived supercongruences at concrete primes."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run claims over a prime range.")
    verify.add_argument("--claims", type=_claim_ids, default=engine.ALL_CLAIMS)
    verify.add_argument("--pmin", type=int, default=defaults.pmin)
    verify.add_argument("--pmax", type=int, default=defaults.pmax)
    verify.add_argument("--oracle-max", type=int, default=defaults.oracle_max)
    verify.add_argument("--nmax", type=int, default=defaults.nmax, help="Upper n for identities.")
    verify.add_argument("--grid", type=int, default=defaults.grid, help="Telescoping grid echoed in the report.")
    verify.add_argument("--threads", type=int, default=defaults.threads)
    verify.add_argument("--precision", type=int, default=defaults.precision)
    _add_output_flags(verify, defaults)

    listing = commands.add_parser("list", help="Print the claim registry.")
    _add_output_flags(listing, defaults)

    telescope = commands.add_parser("telescope", help="Check telescoping of both pairs.")
    telescope.add_argument("--grid", type=int, default=defaults.grid)
    telescope.add_argument("--threads", type=int, default=defaults.threads)
    _add_output_flags(telescope, defaults)

    identity = commands.add_parser("identity", help="Check boundary identities over a range.")
    identity.add_argument("--nmin", type=int, default=1)
    identity.add_argument("--nmax", type=int, default=defaults.nmax)
    identity.add_argument("--threads", type=int, default=defaults.threads)
    _add_output_flags(identity, defaults)
    return parser


def _write(text: Text, out: Optional[Text]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", newline="") as stream:
        stream.write(text)
    logger.info("Results written to %s", out)


def _report_exit(r: engine.Report) -> int:
    if r.failures:
        for outcome in r.failures:
            print(f"COUNTEREXAMPLE: {outcome}", file=sys.stderr)
    return EXIT_OK if r.all_hold else EXIT_FAILED


def _verify(args: argparse.Namespace) -> int:
    cfg = engine.RunConfig(
        claim_ids=args.claims,
        p_min=args.pmin,
        p_max=args.pmax,
        oracle_max=args.oracle_max,
        identity_n_max=args.nmax,
        telescope_grid=args.grid,
        worker_count=args.threads,
        precision=args.precision,
    )
    r = engine.run_suite(cfg)
    _write(report.format_report(r, args.format), args.out)
    return _report_exit(r)


def _list(args: argparse.Namespace) -> int:
    rows = [report.claim_record(c) for c in registry.registry()]
    _write(report.format_rows(rows, report.CLAIM_FIELDS, args.format), args.out)
    return EXIT_OK


def _telescope(args: argparse.Namespace) -> int:
    results = engine.run_telescope(args.grid, args.threads)
    rows = [report.grid_record(result) for result in results]
    _write(report.format_rows(rows, report.GRID_FIELDS, args.format), args.out)
    return EXIT_OK if all(result.holds for result in results) else EXIT_FAILED


def _identity(args: argparse.Namespace) -> int:
    r = engine.run_identities(args.nmin, args.nmax, args.threads)
    _write(report.format_report(r, args.format), args.out)
    return _report_exit(r)


_COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "verify": _verify,
    "list": _list,
    "telescope": _telescope,
    "identity": _identity,
}


def main(argv: Optional[Sequence[Text]] = None) -> int:
    """Runs one subcommand and returns the process exit code.

    0: every check holds. 1: a counterexample or an arithmetic error.
    2: the fast and exact paths disagree. 3: usage or configuration error.
    """
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except (UsageError, engine.ConfigError) as e:
        print(f"wzcheck: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InternalMismatch as e:
        print(f"wzcheck: internal error: {e}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
