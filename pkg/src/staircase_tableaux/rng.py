"""Deterministic, portable randomness for the samplers.

The generator is SplitMix64 (Steele, Lea & Flood's mix function): pure
64-bit integer arithmetic, identical output on every platform.  Batch
sharding derives one independent seed per sample index from (seed, index),
so batches are reproducible regardless of how work is split over workers.

Bernoulli draws with exact rational parameters are decided by comparing a
lazily extended binary expansion of a uniform against the probability, so
no rounding enters anywhere (a single 64-bit compare would carry a 2^-64
bias for non-dyadic probabilities).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["SplitMix64", "derive_seed", "bernoulli"]

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 stream; next_u64 yields uniform 64-bit integers."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Seed for shard/sample ``index`` of a batch rooted at ``seed``."""
    return SplitMix64((seed + (index + 1) * _GOLDEN) & _MASK).next_u64()


def bernoulli(rng: SplitMix64, p: Fraction) -> bool:
    """Exact Bernoulli(p) draw for rational p in [0, 1].

    Compares a uniform U in [0,1) against p chunk by chunk: with
    t = p * 2^64 and u the next chunk, u + 1 <= t decides True, u >= t
    decides False, otherwise recurse on the fractional remainder.
    Terminates after ~1 chunk in expectation.
    """
    num, den = p.numerator, p.denominator
    if num <= 0:
        if num < 0:
            raise ValueError(f"probability {p} < 0")
        return False
    if num >= den:
        if num > den:
            raise ValueError(f"probability {p} > 1")
        return True
    while True:
        u = rng.next_u64()
        num <<= 64
        lo = u * den
        if lo + den <= num:
            return True
        if lo >= num:
            return False
        num -= lo
