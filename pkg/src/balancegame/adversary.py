"""The balance's side: find announcements that keep two hypotheses alive."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import engine
from .core import (
    DomainError,
    GameSpec,
    HEAVY,
    Hypothesis,
    UNKNOWN,
    adjudicate,
    partial_complement,
    predicted_mask,
    surviving_hypotheses,
    validate_strategy,
)

METHOD_EXHAUSTIVE = "exhaustive"
METHOD_DUPLICATE = "duplicate-rows"
METHOD_MIRROR = "mirror-pair"
METHOD_ALL_OFF = "all-off-row"


@dataclass(frozen=True)
class AttackResult:
    """A winning announcement plus the hypotheses it leaves alive."""

    mask: str
    survivors: frozenset[Hypothesis]
    method: str


def _checked(spec: GameSpec, strategy, mask: str, method: str) -> AttackResult:
    # Soundness gate: every attack we hand out must actually win the game.
    verdict = adjudicate(spec, strategy, mask)
    if verdict.winner != "balance":
        raise AssertionError(
            f"internal error: {method} attack {mask!r} does not win ({verdict.describe()})"
        )
    return AttackResult(mask, verdict.survivors, method)


def find_winning_mask(
    spec: GameSpec, strategy, cap: int = engine.DEFAULT_MASK_CAP
) -> AttackResult | None:
    """First announcement, in L < R < D lexicographic order, with >= 2
    survivors; ``None`` when the plan is perfect and no such mask exists."""
    rows = validate_strategy(spec, strategy)
    engine.check_mask_cap(spec.q, cap)
    for start, counts in engine.iter_survivor_blocks(spec, rows):
        hits = np.nonzero(counts >= 2)[0]
        if hits.size:
            mask = engine.decode_mask(start + int(hits[0]), spec.q)
            return _checked(spec, rows, mask, METHOD_EXHAUSTIVE)
    return None


def constructive_attack(spec: GameSpec, strategy) -> AttackResult | None:
    """Structural attack without scanning masks; zero lie budget only.

    Duplicate rows: announce either row's honest heavy sequence, both coins
    stay candidates.  Unknown prior adds two rules: a mirror pair (one row
    the pan-swap of another) confuses one coin's heavy reading with the
    other's light reading, and an all-off row followed by all-draws leaves
    both signs of that coin alive.  ``None`` when no rule applies.
    """
    if spec.k != 0:
        raise DomainError("constructive attacks cover only the zero-lie game (k=0)")
    rows = validate_strategy(spec, strategy)

    seen: dict[str, int] = {}
    for i, row in enumerate(rows):
        if row in seen:
            return _checked(spec, rows, predicted_mask(row, HEAVY), METHOD_DUPLICATE)
        seen[row] = i

    if spec.prior == UNKNOWN:
        for i, row in enumerate(rows):
            mirror = partial_complement(row)
            if mirror != row and mirror in seen:
                return _checked(spec, rows, predicted_mask(row, HEAVY), METHOD_MIRROR)
        for row in rows:
            if row == "O" * spec.q:
                return _checked(spec, rows, "D" * spec.q, METHOD_ALL_OFF)
    return None


def best_response_exists(spec: GameSpec, strategy, cap: int = engine.DEFAULT_MASK_CAP) -> bool:
    """Whether the balance has any winning announcement against this plan."""
    return find_winning_mask(spec, strategy, cap) is not None


__all__ = [
    "AttackResult",
    "METHOD_ALL_OFF",
    "METHOD_DUPLICATE",
    "METHOD_EXHAUSTIVE",
    "METHOD_MIRROR",
    "best_response_exists",
    "constructive_attack",
    "find_winning_mask",
]
