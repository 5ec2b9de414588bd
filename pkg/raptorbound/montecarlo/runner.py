"""Monte Carlo estimation of Raptor decoding failure rates.

Two protocols are supported:

* fixed outer code: decode until ``target_errors`` failures were seen (or
  the trial cap is hit) at each overhead;
* outer-code ensemble: sample ``num_codes`` parity-check codes, run
  ``trials_per_code`` attempts per code and overhead, and average the
  per-code failure rates.

Trials are evaluated in batches, possibly on a process pool, but counted
strictly in trial-index order, so the stopping point and every count are
the same for any number of workers.
"""

import logging
import multiprocessing
from collections.abc import Callable, Iterable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, TypeVar

from raptorbound.codes.distribution import DegreeDistribution
from raptorbound.codes.lt import sample_received_matrix
from raptorbound.codes.outer import OuterCode, sample_uniform_parity_code
from raptorbound.core.errors import DomainError
from raptorbound.core.models import SimConfig
from raptorbound.decoder.inactivation import inactivation_failure
from raptorbound.gf.field import FieldSpec
from raptorbound.montecarlo.seeds import code_generator, trial_generator
from raptorbound.montecarlo.stats import normal_interval, wilson_interval, zero_failure_interval

logger = logging.getLogger(__name__)

BATCH_SIZE = 256

T = TypeVar("T")
R = TypeVar("R")

# (code, dist, delta, master_seed, code_index, first trial, stop trial)
TrialTask = tuple[OuterCode, DegreeDistribution, int, int, int, int, int]
# (h, k, field, dist, cfg, code_index)
CodeTask = tuple[int, int, FieldSpec, DegreeDistribution, SimConfig, int]


@dataclass(frozen=True)
class SimPoint:
    delta: int
    trials: int
    failures: int
    rate: float
    ci_low: float
    ci_high: float
    censored: bool = False


@dataclass
class SimResult:
    """Per-overhead estimates plus the provenance needed to replay them."""

    master_seed: int
    protocol: str
    points: list[SimPoint] = field(default_factory=list)
    code_hashes: list[str] = field(default_factory=list)

    def point(self, delta: int) -> SimPoint:
        for p in self.points:
            if p.delta == delta:
                return p
        raise KeyError(delta)

    @property
    def censored(self) -> list[int]:
        return [p.delta for p in self.points if p.censored]


def sample_ensemble_code(
    h: int, k: int, f: FieldSpec, master_seed: int, code_index: int
) -> OuterCode:
    """The code_index-th member of a seeded uniform parity-check ensemble."""
    return sample_uniform_parity_code(h, k, f, code_generator(master_seed, code_index))


def trial_failed(
    code: OuterCode,
    dist: DegreeDistribution,
    delta: int,
    master_seed: int,
    code_index: int,
    trial_index: int,
) -> bool:
    """One decoding attempt with k + delta received symbols."""
    rng = trial_generator(master_seed, delta, code_index, trial_index)
    rx = sample_received_matrix(code.h, code.k + delta, dist, code.field, rng)
    return inactivation_failure(code, rx).failed


def _run_trials(task: TrialTask) -> list[bool]:
    code, dist, delta, master_seed, code_index, start, stop = task
    return [trial_failed(code, dist, delta, master_seed, code_index, t) for t in range(start, stop)]


def _run_code(task: CodeTask) -> tuple[str, list[int]]:
    h, k, f, dist, cfg, code_index = task
    assert cfg.ensemble is not None
    code = sample_ensemble_code(h, k, f, cfg.master_seed, code_index)
    counts = []
    for delta in cfg.overhead_list:
        stop = cfg.ensemble.trials_per_code
        outcomes = _run_trials((code, dist, delta, cfg.master_seed, code_index, 0, stop))
        counts.append(sum(outcomes))
    return code.fingerprint(), counts


class _Mapper:
    """Ordered map over an optional process pool."""

    def __init__(self, pool: Any | None):
        self.pool = pool

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        if self.pool is None:
            return [fn(item) for item in items]
        return list(self.pool.map(fn, items))

    def imap(self, fn: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
        if self.pool is None:
            return (fn(item) for item in items)
        return self.pool.imap(fn, items, chunksize=4)


@contextmanager
def _mapper(workers: int) -> Iterator[_Mapper]:
    if workers <= 1:
        yield _Mapper(None)
        return
    logger.info("Starting pool of %d workers", workers)
    with multiprocessing.get_context("spawn").Pool(processes=workers) as pool:
        yield _Mapper(pool)


def _point(delta: int, trials: int, failures: int) -> SimPoint:
    rate = failures / trials
    if failures == 0:
        low, high = zero_failure_interval(trials)
        return SimPoint(delta, trials, failures, rate, low, high, censored=True)
    low, high = wilson_interval(failures, trials)
    return SimPoint(delta, trials, failures, rate, min(low, rate), max(high, rate))


def _check_code(code: OuterCode, dist: DegreeDistribution) -> None:
    if dist.d_max > code.h:
        raise DomainError(f"Maximum degree {dist.d_max} exceeds outer code length {code.h}")


def run_fixed_code(
    code: OuterCode, dist: DegreeDistribution, cfg: SimConfig, workers: int = 1
) -> SimResult:
    """Failure rate of one Raptor code per overhead, with the error-count stopping rule."""
    _check_code(code, dist)
    result = SimResult(
        master_seed=cfg.master_seed, protocol="fixed", code_hashes=[code.fingerprint()]
    )
    with _mapper(workers) as mapper:
        for delta in cfg.overhead_list:
            trials = failures = 0
            while failures < cfg.target_errors and trials < cfg.max_trials_per_point:
                span = min(BATCH_SIZE * workers, cfg.max_trials_per_point - trials)
                bounds = [trials + span * i // workers for i in range(workers + 1)]
                tasks = [
                    (code, dist, delta, cfg.master_seed, 0, lo, hi)
                    for lo, hi in zip(bounds, bounds[1:])
                    if hi > lo
                ]
                for batch in mapper.map(_run_trials, tasks):
                    for failed in batch:
                        trials += 1
                        failures += failed
                        if failures == cfg.target_errors:
                            break
                    if failures == cfg.target_errors:
                        break
                logger.debug("delta=%d: %d failures after %d trials", delta, failures, trials)

            point = _point(delta, trials, failures)
            if point.censored:
                logger.warning(
                    "delta=%d: no failures in %d trials, reporting an upper limit", delta, trials
                )
            logger.info(
                "delta=%d trials=%d failures=%d rate=%r", delta, trials, failures, point.rate
            )
            result.points.append(point)
    return result


def run_ensemble(
    h: int, k: int, f: FieldSpec, dist: DegreeDistribution, cfg: SimConfig, workers: int = 1
) -> SimResult:
    """Average failure rate over a uniform parity-check ensemble.

    Code i is drawn once and reused for every overhead.
    """
    if cfg.ensemble is None:
        raise DomainError("Ensemble simulation needs an ensemble configuration")
    if dist.d_max > h:
        raise DomainError(f"Maximum degree {dist.d_max} exceeds outer code length {h}")
    n_codes = cfg.ensemble.num_codes
    per_code = cfg.ensemble.trials_per_code
    counts: list[list[int]] = []
    result = SimResult(master_seed=cfg.master_seed, protocol="ensemble")

    with _mapper(workers) as mapper:
        tasks = ((h, k, f, dist, cfg, i) for i in range(n_codes))
        for i, (fingerprint, code_counts) in enumerate(mapper.imap(_run_code, tasks), start=1):
            result.code_hashes.append(fingerprint)
            counts.append(code_counts)
            if i % 100 == 0:
                logger.debug("Simulated %d/%d outer codes", i, n_codes)

    for j, delta in enumerate(cfg.overhead_list):
        failures = [c[j] for c in counts]
        rates = [x / per_code for x in failures]
        total = sum(failures)
        trials = n_codes * per_code
        # mean of per-code rates; equal trials per code make it total / trials
        rate = total / trials
        if total == 0:
            low, high = zero_failure_interval(trials)
            point = SimPoint(delta, trials, 0, rate, low, high, censored=True)
        else:
            low, high = normal_interval(rates) if n_codes > 1 else wilson_interval(total, trials)
            point = SimPoint(delta, trials, total, rate, min(low, rate), max(high, rate))
        logger.info("delta=%d codes=%d failures=%d rate=%r", delta, n_codes, total, rate)
        result.points.append(point)
    return result
