"""Randomness source with a deterministic mode and an OS-entropy mode.

Deterministic mode is SplitMix64 so that two independent implementations of
the same protocols agree bit-for-bit given equal seeds. SplitMix64 is NOT
cryptographically secure; it exists for reproducibility. System mode draws
from the platform's cryptographic entropy pool and is the default everywhere
a seed is not given explicitly.

Bit order is normative: random_bits() emits each 64-bit word most significant
bit first.
"""

from __future__ import annotations

import secrets

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class RandomSource:
    """Single-owner stream of random words.

    ``RandomSource(seed)`` is the deterministic SplitMix64 stream for that
    64-bit seed; ``RandomSource()`` draws from OS entropy. Instances must not
    be shared between threads.
    """

    def __init__(self, seed: int | None = None):
        if seed is not None:
            if not 0 <= seed <= _MASK64:
                raise ValueError("seed must fit in 64 bits")
            self._state = seed
            self._system = False
        else:
            self._state = 0
            self._system = True

    @property
    def is_deterministic(self) -> bool:
        return not self._system

    def next_u64(self) -> int:
        if self._system:
            return secrets.randbits(64)
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def uniform_below(self, k: int) -> int:
        """Unbiased draw from [0, k) by rejection sampling."""
        if k < 1:
            raise ValueError("k must be positive")
        threshold = (2**64 // k) * k
        while True:
            v = self.next_u64()
            if v < threshold:
                return v % k

    def random_bits(self, count: int) -> list[int]:
        """``count`` bits, consuming ceil(count/64) words, MSB of each first."""
        if count < 1:
            raise ValueError("bit count must be positive")
        bits: list[int] = []
        for _ in range((count + 63) // 64):
            word = self.next_u64()
            bits.extend((word >> shift) & 1 for shift in range(63, -1, -1))
        return bits[:count]
