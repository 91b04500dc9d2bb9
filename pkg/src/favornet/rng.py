"""Deterministic 64-bit random stream used everywhere randomness is needed.

The generator is SplitMix64 (Steele, Lea & Flood's mixing function) with
Fisher-Yates shuffling on top.  It is ~15 lines, fully specified by this
file, and immune to interpreter-version drift, which is what makes traces
replayable bit for bit.  The identifier below is recorded in every game
trace so a replay can refuse a mismatched stream.
"""

from __future__ import annotations

ALGORITHM = "splitmix64/fisher-yates-v1"

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Seeded stream of 64-bit words with integer/shuffle helpers."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _mix(self.state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) via rejection sampling (no modulo bias)."""
        if n <= 0:
            raise ValueError("randbelow needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of resolution."""
        return (self.next_u64() >> 11) / (1 << 53)

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.randbelow(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def permutation(self, n: int) -> list[int]:
        xs = list(range(n))
        self.shuffle(xs)
        return xs


def derive_seed(master: int, index: int) -> int:
    """Per-run seed: master XOR run index pushed through the mixer."""
    return _mix((master ^ index) & _MASK)


def derive_stream(seed: int, *labels: int) -> SplitMix64:
    """Independent substream for (seed, labels), e.g. one per agent node."""
    state = seed & _MASK
    for label in labels:
        state = _mix((state ^ label) + _GAMMA & _MASK)
    return SplitMix64(state)
