"""Addressable deterministic randomness.

Every coin flip in the lab is a pure function of a base seed and a tuple of
integer indices (run index, stage tag, pair index, ...) pushed through a
SplitMix64-style mixer.  This makes any single pair decision reproducible in
isolation, which the exact-probability cross-checks rely on.
"""
from __future__ import annotations

import random

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

# stream tags, so different uses of the same (seed, run) never collide
STAGE1 = 1
STAGE2 = 2
MATCHING = 3
M3_SHUFFLE = 4
GENERATOR = 5
MONTE_CARLO = 6


def splitmix64(x: int) -> int:
    """One output step of SplitMix64 for 64-bit state ``x``."""
    x = (x + _GAMMA) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def mix(seed: int, *indices: int) -> int:
    """Hash ``(seed, *indices)`` to a 64-bit word; order- and length-sensitive."""
    acc = splitmix64(seed & MASK64)
    for w in indices:
        acc = splitmix64(acc ^ (w & MASK64))
    return acc


def coin(seed: int, *indices: int) -> int:
    """A fair bit addressed by ``(seed, *indices)``."""
    return mix(seed, *indices) & 1


def stream(seed: int, *indices: int) -> random.Random:
    """A ``random.Random`` whose state is derived from ``(seed, *indices)``.

    Used for bulk randomness (shuffles, Monte Carlo) where per-coin
    addressability is not needed.  Deterministic given the arguments.
    """
    return random.Random(mix(seed, *indices))
