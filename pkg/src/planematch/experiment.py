"""Batch experiment runner: generate, verify, accumulate failures.

Per-trial seeds are derived as ``seed XOR trial_index`` and the kind / size
grid cycles deterministically over trials, so a run is reproducible from
(trials, n_min, n_max, seed, kinds) alone and the accumulated failures do
not depend on evaluation order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .classify import verify_main_theorem
from .errors import PlanematchError, PreconditionError
from .generators import KIND_EXCEPTIONAL, KINDS, GeneratorSpec, generate
from .matchings import DEFAULT_COUNT_CAP


@dataclass(frozen=True)
class TrialFailure:
    seed: int
    n: int
    check: str


@dataclass(frozen=True)
class ExperimentSummary:
    trials: int
    n_range: tuple[int, int]
    failures: tuple[TrialFailure, ...]
    timings: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def _trial_plan(trials, n_min, n_max, kinds):
    sizes = list(range(n_min, n_max + 1, 2))
    plan = []
    for i in range(trials):
        kind = kinds[i % len(kinds)]
        n = sizes[(i // len(kinds)) % len(sizes)]
        plan.append((i, kind, n))
    return plan


def run_experiment(
    trials: int,
    n_min: int,
    n_max: int,
    seed: int,
    kinds=("random_disk",),
    *,
    max_enum: int = DEFAULT_COUNT_CAP,
    radius: int = 10**6,
) -> ExperimentSummary:
    """Generate and verify ``trials`` point sets; never aborts mid-run.

    Failed consistency checks and per-trial errors are accumulated as
    (seed, n, check) records; an empty failure list means every report was
    consistent.
    """
    if trials < 0:
        raise PreconditionError("trials must be >= 0")
    if trials and (n_min % 2 or n_max % 2 or n_min < 2 or n_max < n_min):
        raise PreconditionError("need even 2 <= n_min <= n_max")
    for kind in kinds:
        if kind not in KINDS:
            raise PreconditionError(f"unknown generator kind {kind!r}")

    failures: list[TrialFailure] = []
    durations: list[float] = []
    for i, kind, n in _trial_plan(trials, n_min, n_max, list(kinds)):
        trial_seed = seed ^ i
        start = time.perf_counter()
        try:
            spec = GeneratorSpec(kind=kind, n=n, seed=trial_seed, radius=radius)
            ps = generate(spec)
            if kind == KIND_EXCEPTIONAL:
                n = len(ps)
            report = verify_main_theorem(ps, max_enum=max_enum)
            for check in report.failed_checks:
                failures.append(TrialFailure(seed=trial_seed, n=n, check=check))
        except PlanematchError as exc:
            failures.append(
                TrialFailure(seed=trial_seed, n=n, check=f"error:{type(exc).__name__}")
            )
        durations.append(time.perf_counter() - start)

    total = sum(durations)
    timings = {
        "total_s": total,
        "mean_s": total / len(durations) if durations else 0.0,
        "min_s": min(durations) if durations else 0.0,
        "max_s": max(durations) if durations else 0.0,
    }
    return ExperimentSummary(
        trials=trials,
        n_range=(n_min, n_max),
        failures=tuple(failures),
        timings=timings,
    )
