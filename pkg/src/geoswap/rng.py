"""Seeded splitmix-style PRNG.

All instance generation goes through this generator so that a spec file plus a
seed reproduces identical instances byte for byte, independent of Python's own
``random`` module.  The algorithm is the standard splitmix64 step:

    state += 0x9E3779B97F4A7C15            (mod 2^64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

``uniform`` maps the top 53 bits to [0, 1): (z >> 11) * 2^-53.
``randint(lo, hi)`` is lo + z % (hi - lo + 1), inclusive on both ends.
``derive(seed, *keys)`` folds integer keys into a seed with the same finalizer,
used to give every (problem kind, trial) its own independent stream.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def derive(seed: int, *keys: int) -> int:
    """Deterministically derive a child seed from a root seed and integer keys."""
    state = seed & _MASK64
    for k in keys:
        state = _mix((state + _GAMMA) & _MASK64 ^ (k & _MASK64))
    return state


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0**-53)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both ends inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        if not seq:
            raise ValueError("empty sequence")
        return seq[self.randint(0, len(seq) - 1)]
