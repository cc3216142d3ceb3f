"""SplitMix64: a fixed 64-bit mixing generator so seeded sweeps reproduce anywhere.

state <- state + 0x9E3779B97F4A7C15 (mod 2^64)
z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
output z ^ (z >> 31)

Bounded integers are drawn as ``lo + next() % (hi - lo + 1)``; the slight
modulo bias is irrelevant here and keeps the mapping trivially portable.
"""
from __future__ import annotations

from fractions import Fraction

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int, stream: int = 0):
        self.state = (seed ^ (stream * 0xD1B54A32D192ED03)) & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in the closed range [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def rational(self, lo: int, hi: int, max_den: int) -> Fraction:
        """Rational in [lo, hi] whose denominator divides a draw from 1..max_den."""
        den = self.randint(1, max_den)
        return Fraction(self.randint(lo * den, hi * den), den)
