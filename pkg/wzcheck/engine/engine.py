"""Runs claims over prime ranges and collects the outcomes into a report."""

import concurrent.futures
import dataclasses
import time
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple, Union

from wzcheck.arith.exact import INFINITY, NegativeValuation
from wzcheck.arith.residue import DEFAULT_PRECISION, PrecisionExhausted
from wzcheck.claims import claim as claims
from wzcheck.claims import registry
from wzcheck.claims.claim import BOTH, Claim, InternalMismatch, VerificationOutcome
from wzcheck.common import logger
from wzcheck.common.utils import primes_in
from wzcheck.sequences.rings import EXACT, FAST
from wzcheck.wz import pairs
from wzcheck.wz.pairs import WZPairId

ALL_CLAIMS = "all"
BOUNDARY_PREFIX = "boundary-"
SPLIT_PREFIX = "split-"


class Error(Exception):
    """Base Exception handling class."""


class ConfigError(Error):
    """The run configuration is malformed."""


class UnknownClaimError(ConfigError):
    """A requested claim id is not in the registry."""


@dataclasses.dataclass
class RunConfig:
    """What to verify, and how.

    Attributes:
        claim_ids: "all", or a list of claim ids.
        p_min: Smallest prime tried.
        p_max: Largest prime tried.
        oracle_max: Primes up to here run both paths and must agree.
        identity_n_max: Exact identities run for 1 <= n <= identity_n_max.
        telescope_grid: Telescoping is checked for n, k <= telescope_grid.
        worker_count: Number of worker processes; 1 runs in-process.
        precision: Minimum unit precision of the fast path.
    """

    claim_ids: Union[str, List[str]] = ALL_CLAIMS
    p_min: int = 5
    p_max: int = 199
    oracle_max: int = 97
    identity_n_max: int = 300
    telescope_grid: int = 120
    worker_count: int = 1
    precision: int = DEFAULT_PRECISION

    @classmethod
    def from_dict(cls, msg: Dict[str, Any]) -> "RunConfig":
        known = {field.name for field in dataclasses.fields(cls)}
        unknown = set(msg) - known
        if unknown:
            raise ConfigError(f"Unknown run settings: {sorted(unknown)}")
        cfg = cls(**msg)
        cfg.validate()
        return cfg

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)

    def report_settings(self) -> Dict[str, Any]:
        """The settings a report echoes: everything but the worker count."""
        settings = self.to_dict()
        del settings["worker_count"]
        return settings

    def validate(self) -> None:
        if self.p_min < 2:
            raise ConfigError(f"p_min must be at least 2, got {self.p_min}")
        if self.p_min > self.p_max:
            raise ConfigError(f"p_min {self.p_min} exceeds p_max {self.p_max}")
        if self.worker_count < 1:
            raise ConfigError(f"worker_count must be positive, got {self.worker_count}")
        if self.identity_n_max < 0:
            raise ConfigError(f"identity_n_max must be nonnegative, got {self.identity_n_max}")
        if self.telescope_grid < 1:
            raise ConfigError(f"telescope_grid must be positive, got {self.telescope_grid}")
        if self.precision < 1:
            raise ConfigError(f"precision must be positive, got {self.precision}")
        self.claims()

    def claims(self) -> List[Claim]:
        """The selected claims in registry order.

        Raises:
            UnknownClaimError: If an id is not in the registry.
        """
        if self.claim_ids == ALL_CLAIMS:
            return registry.registry()
        selected = []
        for claim_id in self.claim_ids:
            try:
                selected.append(registry.get_claim(claim_id))
            except registry.UnknownClaimError:
                raise UnknownClaimError(f"Unknown claim id {claim_id!r}") from None
        return selected


@dataclasses.dataclass(frozen=True)
class ItemError:
    """An arithmetic error raised while checking one work item."""

    claim_id: str
    p: int
    instance: str
    message: str


@dataclasses.dataclass
class ClaimSummary:
    passed: int = 0
    failed: int = 0
    errors: int = 0


@dataclasses.dataclass(frozen=True)
class WorkItem:
    claim_id: str
    p: int
    mode: str
    precision: int = DEFAULT_PRECISION


@dataclasses.dataclass
class ItemResult:
    claim_id: str
    p: int
    outcomes: List[VerificationOutcome] = dataclasses.field(default_factory=list)
    errors: List[ItemError] = dataclasses.field(default_factory=list)
    elapsed: float = 0.0


@dataclasses.dataclass
class Report:
    """The result of a run.

    Attributes:
        config: Echo of the settings the run used, less the worker count.
        outcomes: All outcomes, ordered by (claim id, p).
        summary: claim id -> pass/fail/error counts.
        errors: Arithmetic errors, ordered like the outcomes.
        timing: claim id -> wall-clock seconds; excluded from comparisons.
    """

    config: Dict[str, Any]
    outcomes: List[VerificationOutcome] = dataclasses.field(default_factory=list)
    summary: Dict[str, ClaimSummary] = dataclasses.field(default_factory=dict)
    errors: List[ItemError] = dataclasses.field(default_factory=list)
    timing: Dict[str, float] = dataclasses.field(default_factory=dict)

    @property
    def failures(self) -> List[VerificationOutcome]:
        return [outcome for outcome in self.outcomes if not outcome.holds]

    @property
    def all_hold(self) -> bool:
        return not self.errors and not self.failures

    def add(self, result: ItemResult) -> None:
        counts = self.summary.setdefault(result.claim_id, ClaimSummary())
        for outcome in result.outcomes:
            if outcome.holds:
                counts.passed += 1
            else:
                counts.failed += 1
        counts.errors += len(result.errors)
        self.outcomes.extend(result.outcomes)
        self.errors.extend(result.errors)
        self.timing[result.claim_id] = self.timing.get(result.claim_id, 0.0) + result.elapsed

    def finalize(self) -> None:
        # Stable, so instances keep their generation order within (claim, p).
        self.outcomes.sort(key=lambda o: (o.claim_id, o.p))
        self.errors.sort(key=lambda e: (e.claim_id, e.p))
        self.summary = dict(sorted(self.summary.items()))
        self.timing = dict(sorted(self.timing.items()))


def _evaluate(item: WorkItem, c: Claim, params: Dict[str, int]) -> VerificationOutcome:
    if item.mode != FAST:
        return claims.evaluate_claim(c, item.p, item.mode, params, item.precision)
    try:
        return claims.evaluate_claim(c, item.p, FAST, params, item.precision)
    except PrecisionExhausted:
        logger.debug(
            "Falling back to the exact path for %s at p=%d %s", c.id, item.p, params
        )
        return claims.evaluate_claim(c, item.p, EXACT, params, item.precision)


def run_item(item: WorkItem) -> ItemResult:
    """Checks every instance of one claim at one prime.

    Module level so it can be shipped to worker processes.

    Raises:
        InternalMismatch: If the fast and exact paths disagree.
    """
    c = registry.get_claim(item.claim_id)
    result = ItemResult(claim_id=item.claim_id, p=item.p)
    start = time.monotonic()
    for params in c.instances(item.p):
        try:
            result.outcomes.append(_evaluate(item, c, params))
        except (NegativeValuation, ZeroDivisionError) as e:
            result.errors.append(
                ItemError(
                    claim_id=item.claim_id,
                    p=item.p,
                    instance=claims.format_instance(params),
                    message=f"{type(e).__name__}: {e}",
                )
            )
    result.elapsed = time.monotonic() - start
    return result


def work_items(cfg: RunConfig) -> List[WorkItem]:
    """Expands a configuration into (claim, prime, mode) work items."""
    primes = primes_in(cfg.p_min, cfg.p_max)
    items = []
    for c in cfg.claims():
        if c.is_identity:
            items.extend(
                WorkItem(c.id, n, EXACT, cfg.precision)
                for n in range(1, cfg.identity_n_max + 1)
            )
            continue
        for p in primes:
            if not c.domain.contains(p):
                continue
            mode = BOTH if p <= cfg.oracle_max else FAST
            items.append(WorkItem(c.id, p, mode, cfg.precision))
    return items


def _map(fn: Callable[[Any], Any], items: Sequence[Any], worker_count: int) -> Iterable[Any]:
    if worker_count == 1 or len(items) < 2:
        return map(fn, items)
    executor = concurrent.futures.ProcessPoolExecutor(max_workers=worker_count)
    # One item per task; a jacobsthal item costs far more than most others.
    try:
        return list(executor.map(fn, items, chunksize=1))
    finally:
        executor.shutdown(cancel_futures=True)


def run_suite(cfg: RunConfig) -> Report:
    """Runs every selected claim at every prime of the configured range.

    Raises:
        ConfigError: If the configuration is invalid.
        InternalMismatch: If the fast and exact paths disagree anywhere.
    """
    cfg.validate()
    items = work_items(cfg)
    logger.info(
        "Verifying %d claims in %d work items, p in [%d, %d], %d worker(s)",
        len(cfg.claims()),
        len(items),
        cfg.p_min,
        cfg.p_max,
        cfg.worker_count,
    )
    report = Report(config=cfg.report_settings())
    try:
        for result in _map(run_item, items, cfg.worker_count):
            report.add(result)
    except InternalMismatch as e:
        logger.critical("%s", e)
        raise
    report.finalize()
    for claim_id, seconds in report.timing.items():
        counts = report.summary[claim_id]
        logger.info(
            "%s: %d passed, %d failed, %d errors in %.2fs",
            claim_id,
            counts.passed,
            counts.failed,
            counts.errors,
            seconds,
        )
    for outcome in report.failures:
        logger.error("Counterexample: %s", outcome)
    for error in report.errors:
        logger.error("Arithmetic error: %s", error)
    logger.info("Run finished: %d outcomes, all hold: %s", len(report.outcomes), report.all_hold)
    return report


@dataclasses.dataclass
class GridResult:
    """Telescoping results of one pair over a square grid."""

    pair: WZPairId
    grid: int
    cells: int
    failures: List[pairs.WZTerm] = dataclasses.field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def _telescope_row(args: Tuple[str, int, int]) -> List[int]:
    pair_value, n, grid = args
    pair = WZPairId(pair_value)
    return [k for k in range(1, grid + 1) if not pairs.check_telescoping(pair, n, k)]


def run_telescope(grid: int, worker_count: int = 1) -> List[GridResult]:
    """Checks telescoping for both pairs on 0 <= n <= grid, 1 <= k <= grid."""
    if grid < 1:
        raise ConfigError(f"grid must be positive, got {grid}")
    results = []
    for pair in WZPairId:
        start = time.monotonic()
        rows = [(pair.value, n, grid) for n in range(grid + 1)]
        result = GridResult(pair=pair, grid=grid, cells=(grid + 1) * grid)
        for (_, n, _), bad in zip(rows, _map(_telescope_row, rows, worker_count)):
            for k in bad:
                f_term, _ = pairs.terms(pair, n, k)
                logger.error("Telescoping fails for %s at n=%d, k=%d", pair, n, k)
                result.failures.append(f_term)
        logger.info(
            "Telescoping %s: %d cells, %d failures in %.2fs",
            pair,
            result.cells,
            len(result.failures),
            time.monotonic() - start,
        )
        results.append(result)
    return results


def _identity_row(args: Tuple[str, str, int]) -> ItemResult:
    kind, pair_value, n = args
    pair = WZPairId(pair_value)
    claim_id = kind + pair_value
    result = ItemResult(claim_id=claim_id, p=n)
    start = time.monotonic()
    if kind == BOUNDARY_PREFIX:
        check = pairs.boundary_identity(pair, n)
        holds, lhs, rhs = check.holds, check.lhs, check.rhs
    else:
        split = registry.check_decomposition(pair, n)
        holds, lhs, rhs = split.holds, split.theorem_lhs, split.pieces
    result.outcomes.append(
        VerificationOutcome(
            claim_id=claim_id,
            p=n,
            instance="",
            holds=holds,
            lhs_residue=lhs,
            rhs_residue=rhs,
            modulus_exponent=0,
            diff_valuation=INFINITY if holds else 0,
            path=EXACT,
        )
    )
    result.elapsed = time.monotonic() - start
    return result


def run_identities(lo: int, hi: int, worker_count: int = 1) -> Report:
    """Boundary identities for every integer in [lo, hi], and the lemma split
    of both theorems for every prime p > 3 in the same range."""
    if lo < 1 or hi < lo:
        raise ConfigError(f"Need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    rows = []
    for pair in WZPairId:
        rows.extend((BOUNDARY_PREFIX, pair.value, n) for n in range(lo, hi + 1))
        if hi >= 5:
            rows.extend((SPLIT_PREFIX, pair.value, p) for p in primes_in(max(lo, 5), hi))
    report = Report(config={"lo": lo, "hi": hi})
    for result in _map(_identity_row, rows, worker_count):
        report.add(result)
    report.finalize()
    logger.info("Identities finished: %d rows, all hold: %s", len(report.outcomes), report.all_hold)
    return report
