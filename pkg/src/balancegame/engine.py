"""Integer-coded bulk evaluation used by the verifier and the simulators.

Rows and masks share one base-3 code: most significant digit first, with
L = 0, R = 1 and O/D = 2.  Under that code the announcement an honest
balance makes for a heavy coin is the row's own code, and the one for a
light coin is the code with 0/1 digits swapped -- so survival checks reduce
to digit-wise Hamming distances between codes.

Everything here is re-derivable from :mod:`balancegame.core`; the test
suite holds the two implementations against each other.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from .core import GameSpec, HEAVY, OUTCOMES, PLACEMENTS, ResourceLimitError, validate_strategy

DEFAULT_MASK_CAP = 16  # max q an exhaustive mask scan will attempt
DEFAULT_MATRIX_CAP = 10**8  # max 3**(n*q) a full strategy census will attempt

_MASK_BLOCK = 3**10  # masks handled per chunk in streaming scans


def encode(word: str, alphabet: str) -> int:
    code = 0
    for ch in word:
        code = code * 3 + alphabet.index(ch)
    return code


def decode(code: int, q: int, alphabet: str) -> str:
    out = []
    for _ in range(q):
        code, d = divmod(code, 3)
        out.append(alphabet[d])
    return "".join(reversed(out))


def encode_row(row: str) -> int:
    return encode(row, PLACEMENTS)


def decode_row(code: int, q: int) -> str:
    return decode(code, q, PLACEMENTS)


def encode_mask(mask: str) -> int:
    return encode(mask, OUTCOMES)


def decode_mask(code: int, q: int) -> str:
    return decode(code, q, OUTCOMES)


@lru_cache(maxsize=None)
def digit_table(q: int) -> np.ndarray:
    """(3**q, q) array of base-3 digits, most significant first."""
    codes = np.arange(3**q, dtype=np.int64)
    powers = 3 ** np.arange(q - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] // powers[None, :]) % 3).astype(np.uint8)


@lru_cache(maxsize=None)
def complement_table(q: int) -> np.ndarray:
    """Code of the pan-swapped row for every code (digits 0 and 1 swap)."""
    digits = digit_table(q).astype(np.int64)
    swapped = np.where(digits == 2, 2, 1 - digits)
    powers = 3 ** np.arange(q - 1, -1, -1, dtype=np.int64)
    return (swapped * powers).sum(axis=1)


def check_mask_cap(q: int, cap: int = DEFAULT_MASK_CAP) -> None:
    if q > cap:
        raise ResourceLimitError(
            f"scanning 3**{q} masks exceeds the enumeration cap (q <= {cap}); "
            f"raise the cap explicitly to proceed"
        )


def predicted_codes(spec: GameSpec, strategy) -> np.ndarray:
    """Honest-announcement codes for every hypothesis, heavy block first."""
    rows = validate_strategy(spec, strategy)
    codes = np.array([encode_row(r) for r in rows], dtype=np.int64)
    if spec.prior == HEAVY:
        return codes
    return np.concatenate([codes, complement_table(spec.q)[codes]])


def iter_survivor_blocks(
    spec: GameSpec, strategy, block: int = _MASK_BLOCK
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (start, counts) with survivor counts for masks start..start+len."""
    preds = predicted_codes(spec, strategy)
    digits = digit_table(spec.q)
    pred_digits = digits[preds]  # (H, q)
    total = 3**spec.q
    for start in range(0, total, block):
        chunk = digits[start : start + block]  # (B, q)
        dist = (pred_digits[:, None, :] != chunk[None, :, :]).sum(axis=2)
        yield start, (dist <= spec.k).sum(axis=0)


def survivor_counts(spec: GameSpec, strategy) -> np.ndarray:
    """(3**q,) survivor count per mask, mask codes in lexicographic order."""
    parts = [counts for _, counts in iter_survivor_blocks(spec, strategy)]
    return np.concatenate(parts)


def batch_survivor_counts(spec: GameSpec, row_codes: np.ndarray) -> np.ndarray:
    """(T, 3**q) survivor counts for a batch of plans given as row codes."""
    q, k = spec.q, spec.k
    digits = digit_table(q)
    preds = row_codes
    if spec.prior != HEAVY:
        preds = np.concatenate([row_codes, complement_table(q)[row_codes]], axis=1)
    counts = np.zeros((preds.shape[0], 3**q), dtype=np.int16)
    for h in range(preds.shape[1]):
        dist = (digits[preds[:, h]][:, None, :] != digits[None, :, :]).sum(axis=2)
        counts += dist <= k
    return counts


def batch_balance_wins(spec: GameSpec, row_codes: np.ndarray) -> np.ndarray:
    """(T,) bools: does some mask leave >= 2 survivors against each plan?"""
    return (batch_survivor_counts(spec, row_codes) >= 2).any(axis=1)


def matrix_chunk_codes(spec: GameSpec, start: int, stop: int) -> np.ndarray:
    """Row codes for plan indices start..stop in the (3**q)**n enumeration.

    Plan index i decomposes big-endian: row 0 gets the most significant
    base-3**q digit.  This makes enumeration order the L < R < O
    lexicographic order on whole matrices.
    """
    base = 3**spec.q
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(idx), spec.n), dtype=np.int64)
    for r in range(spec.n - 1, -1, -1):
        idx, digit = np.divmod(idx, base)
        out[:, r] = digit
    return out


def check_matrix_cap(spec: GameSpec, cap: int = DEFAULT_MATRIX_CAP) -> int:
    total = (3**spec.q) ** spec.n
    if total > cap:
        raise ResourceLimitError(
            f"enumerating 3**{spec.n * spec.q} strategy matrices exceeds the census cap "
            f"({cap}); raise the cap explicitly to proceed"
        )
    return total
