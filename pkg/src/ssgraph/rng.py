"""Deterministic random number generation.

Every stochastic component in this package draws from SplitMix64 (Steele,
Lea & Flood 2014; the generator behind java.util.SplittableRandom). It was
chosen over the stdlib Mersenne Twister because the identical stream can be
reproduced inside the numba-compiled rewiring kernel: a single 64-bit state
word crosses the Python/JIT boundary and both sides advance it with the same
three-round mix. Same seed, same draws, same graphs.
"""

from __future__ import annotations

import hashlib

MASK64 = (1 << 64) - 1

# SplitMix64 constants
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB

# 2**-53, converts the top 53 bits of a draw to a float in [0, 1)
_INV_2_53 = 1.0 / 9007199254740992.0

RNG_NAME = "splitmix64"


class SplitMix64:
    """Seedable deterministic generator with a single 64-bit state word."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = s = (self.state + GOLDEN_GAMMA) & MASK64
        z = ((s ^ (s >> 30)) * MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_2) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) built from the top 53 bits of one draw."""
        return (self.next_u64() >> 11) * _INV_2_53

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        return int(self.random() * n)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        random = self.random
        for i in range(len(items) - 1, 0, -1):
            j = int(random() * (i + 1))
            items[i], items[j] = items[j], items[i]

    def getstate(self) -> int:
        return self.state

    def setstate(self, state: int) -> None:
        self.state = state & MASK64


def derive_seed(base_seed: int, label: str, index: int) -> int:
    """Per-run seed: base_seed XOR a stable 64-bit hash of (label, index).

    sha256 rather than hash() so the derivation survives interpreter
    restarts and PYTHONHASHSEED; adding runs or rows never perturbs the
    seeds of existing ones.
    """
    digest = hashlib.sha256(f"{label}:{index}".encode()).digest()
    return (base_seed ^ int.from_bytes(digest[:8], "little")) & MASK64
