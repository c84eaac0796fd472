"""Seeded experiments: random plans against the exact best-response balance.

Reproducibility scheme: trial ``t`` of a run with master seed ``s`` uses the
derived seed ``s * 1_000_003 + t``, so any subset of trials can be re-run
on its own and the whole run is a pure function of its arguments.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import engine
from .analysis import chernoff_tail_bound
from .builders import RandomStrategyParams, random_strategy
from .core import DomainError, GameSpec
from .verifier import census_perfect

Z_95 = 1.959963984540054  # two-sided 95% normal quantile


def trial_seed(seed: int, t: int) -> int:
    return seed * 1_000_003 + t


@dataclass(frozen=True)
class TrialReport:
    """One experiment's outcome with its sampling uncertainty."""

    spec: GameSpec | None
    params: dict[str, Any]
    trials: int
    successes: int
    estimate: float
    half_width: float  # 95% normal-approximation half width
    seed: int
    extras: dict[str, Any] = field(default_factory=dict)


def _report(spec, params, trials, successes, seed, extras=None) -> TrialReport:
    p = successes / trials
    hw = Z_95 * math.sqrt(p * (1.0 - p) / trials)
    return TrialReport(spec, params, trials, successes, p, hw, seed, extras or {})


def _check_trials(trials: int) -> None:
    if trials < 1:
        raise DomainError(f"need at least one trial, got {trials}")


def simulate_random_player(
    spec: GameSpec,
    r: float,
    trials: int,
    seed: int = 0,
    mask_cap: int = engine.DEFAULT_MASK_CAP,
) -> TrialReport:
    """Balance win rate against seeded random plans with on-rate ``r``.

    Each trial plays the exact adversary: the balance wins the trial iff
    some announcement keeps two hypotheses alive against that trial's plan.
    """
    _check_trials(trials)
    engine.check_mask_cap(spec.q, mask_cap)
    codes = np.empty((trials, spec.n), dtype=np.int64)
    for t in range(trials):
        plan = random_strategy(spec.n, spec.q, RandomStrategyParams(r, trial_seed(seed, t)))
        codes[t] = [engine.encode_row(row) for row in plan]
    wins = int(engine.batch_balance_wins(spec, codes).sum())
    return _report(spec, {"r": r}, trials, wins, seed)


def concentration_experiment(
    q: int, r: float, delta: float, trials: int, seed: int = 0
) -> tuple[float, float]:
    """(empirical tail, hoeffding bound) for the on-fraction of random rows.

    Each trial draws one length-q row with independent on-probability r and
    checks whether its on-fraction strays from r by more than delta.
    """
    if q < 1:
        raise DomainError(f"need q >= 1, got {q}")
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"on-balance rate must lie in [0, 1], got {r}")
    _check_trials(trials)
    hits = 0
    for t in range(trials):
        rng = random.Random(trial_seed(seed, t))
        on = sum(rng.random() < r for _ in range(q))
        if abs(on / q - r) > delta:
            hits += 1
    return hits / trials, chernoff_tail_bound(q, delta)


def random_perfect_rate(
    n: int,
    q: int,
    prior: str,
    trials: int,
    seed: int = 0,
    mask_cap: int = engine.DEFAULT_MASK_CAP,
    census_cap: int = 500_000,
) -> TrialReport:
    """Fraction of uniformly random plans that certify must-win (zero lies).

    Extras carry two reference points: ``pair_count_rate`` is the exact rate
    2**n n! / 3**(n q) of one-row-per-mirror-pair plans when n equals the
    unknown-prior capacity, ``pair_count_rate_with_columns`` multiplies in a
    q! column factor, and ``census_rate`` is the enumerated ground truth
    whenever the full census fits under ``census_cap``.
    """
    _check_trials(trials)
    spec = GameSpec(n, q, 0, prior)
    engine.check_mask_cap(spec.q, mask_cap)
    codes = np.empty((trials, n), dtype=np.int64)
    for t in range(trials):
        rng = random.Random(trial_seed(seed, t))
        codes[t] = [rng.randrange(3**q) for _ in range(n)]
    perfect = int((~engine.batch_balance_wins(spec, codes)).sum())
    total = (3**q) ** n
    extras: dict[str, Any] = {
        "pair_count_rate": 2**n * math.factorial(n) / total,
        "pair_count_rate_with_columns": 2**n * math.factorial(n) * math.factorial(q) / total,
    }
    if total <= census_cap:
        extras["census_count"] = census_perfect(spec, census_cap, mask_cap)
        extras["census_rate"] = extras["census_count"] / total
    return _report(spec, {}, trials, perfect, seed, extras)
