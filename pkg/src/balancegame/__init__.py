"""Predetermined counterfeit-coin balance games.

The player commits an ``n x q`` placement plan, the balance answers with
any length-``q`` outcome announcement within a lie budget, and survival
analysis decides who wins.  See :mod:`balancegame.core` for the rules,
:mod:`balancegame.verifier` for exhaustive certification, and
:mod:`balancegame.analysis` for the closed-form rate theory.
"""

from .adversary import (
    AttackResult,
    best_response_exists,
    constructive_attack,
    find_winning_mask,
)
from .analysis import (
    LieThresholds,
    RateCurve,
    adaptive_first_move_range,
    best_on_fraction,
    binary_entropy,
    chernoff_tail_bound,
    entropy_round_bound,
    expected_survivors,
    golden_section_max,
    hamming_ball_volume,
    honest_threshold_rate,
    lie_win_thresholds,
    lying_survivor_bound,
    lying_threshold_rate,
    prob_considered_heavier,
    prob_fewer_than_two_heavier,
    sample_curve,
    two_heavy_threshold,
)
from .builders import (
    RandomStrategyParams,
    binary_strategy,
    complement_free_strategy,
    random_strategy,
    row_profile,
    ternary_strategy,
)
from .core import (
    BalanceGameError,
    CapacityError,
    DimensionError,
    DomainError,
    GameSpec,
    Hypothesis,
    ResourceLimitError,
    Verdict,
    adjudicate,
    lie_count,
    partial_complement,
    predicted_mask,
    surviving_hypotheses,
    transcribe,
)
from .montecarlo import (
    TrialReport,
    concentration_experiment,
    random_perfect_rate,
    simulate_random_player,
    trial_seed,
)
from .verifier import (
    Certificate,
    GameValue,
    UndecidedError,
    census_perfect,
    certify,
    game_value,
    lie_ball_volume,
    perfect_capacity,
    survivor_mass,
    survivor_mass_expected,
    theorem_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AttackResult",
    "BalanceGameError",
    "CapacityError",
    "Certificate",
    "DimensionError",
    "DomainError",
    "GameSpec",
    "GameValue",
    "Hypothesis",
    "LieThresholds",
    "RandomStrategyParams",
    "RateCurve",
    "ResourceLimitError",
    "TrialReport",
    "UndecidedError",
    "Verdict",
    "__version__",
    "adaptive_first_move_range",
    "adjudicate",
    "best_on_fraction",
    "best_response_exists",
    "binary_entropy",
    "binary_strategy",
    "census_perfect",
    "certify",
    "chernoff_tail_bound",
    "complement_free_strategy",
    "concentration_experiment",
    "constructive_attack",
    "entropy_round_bound",
    "expected_survivors",
    "find_winning_mask",
    "game_value",
    "golden_section_max",
    "hamming_ball_volume",
    "honest_threshold_rate",
    "lie_ball_volume",
    "lie_count",
    "lie_win_thresholds",
    "lying_survivor_bound",
    "lying_threshold_rate",
    "partial_complement",
    "perfect_capacity",
    "predicted_mask",
    "prob_considered_heavier",
    "prob_fewer_than_two_heavier",
    "random_perfect_rate",
    "random_strategy",
    "row_profile",
    "sample_curve",
    "simulate_random_player",
    "survivor_mass",
    "survivor_mass_expected",
    "surviving_hypotheses",
    "ternary_strategy",
    "theorem_sweep",
    "transcribe",
    "trial_seed",
    "two_heavy_threshold",
]
