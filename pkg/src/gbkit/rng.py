"""Seedable counter-based random signs.

Every randomized routine in the package draws from a keyed SplitMix64
stream: the k-th value depends only on (seed, k), never on how many values
were drawn before or on which worker drew them.  That keeps trials
replayable one at a time and bit-identical across platforms and parallel
schedules.
"""

from __future__ import annotations

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix(z: int) -> int:
    """SplitMix64 finalizer on a plain Python int."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def derive(seed: int, *path: int) -> int:
    """Derive a child seed from a root seed and an index path.

    derive(seed, t) is the per-trial seed convention; deeper paths
    (e.g. derive(seed, t, 1)) separate independent streams inside a trial.
    """
    z = seed & _MASK
    for step in path:
        z = _mix(z + _GOLDEN * (step + 1))
    return z


def sign_array(seed: int, count: int) -> np.ndarray:
    """Return `count` reproducible ±1 signs for the given seed (int8).

    Element k equals the sign bit of derive(seed, k), so scalar and
    vectorized consumers agree.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    ctr = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _MASK) + ctr * np.uint64(_GOLDEN)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        z ^= z >> np.uint64(31)
    return np.where(z >> np.uint64(63), -1, 1).astype(np.int8)
