"""Binary feature-mask solution representation.

A solution is a bit string over the dataset's feature columns: bit i is 1
when feature i is selected. Masks are immutable value objects; every edit
returns a new mask, so they can be shared freely between the local
searches and the fitness cache.
"""

from __future__ import annotations

import numpy as np


class FeatureMask:
    """Immutable 0/1 vector over ``n`` features, in dataset column order."""

    __slots__ = ("bits",)

    def __init__(self, bits) -> None:
        arr = np.array(bits, dtype=np.uint8)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("mask must be a non-empty 1-d bit vector")
        if not np.all((arr == 0) | (arr == 1)):
            raise ValueError("mask bits must be 0 or 1")
        arr.setflags(write=False)
        self.bits = arr

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "FeatureMask":
        """Draw each bit Bernoulli(0.5); an all-zero draw gets one bit set.

        A solution must select something, so the (probability 2**-n)
        all-zero draw is repaired by setting one uniformly chosen bit.
        """
        if n < 1:
            raise ValueError("need at least one feature")
        bits = rng.integers(0, 2, size=n, dtype=np.uint8)
        if not bits.any():
            bits[int(rng.integers(n))] = 1
        return cls(bits)

    @classmethod
    def zeros(cls, n: int) -> "FeatureMask":
        return cls(np.zeros(n, dtype=np.uint8))

    @classmethod
    def ones(cls, n: int) -> "FeatureMask":
        return cls(np.ones(n, dtype=np.uint8))

    @property
    def n(self) -> int:
        return self.bits.size

    def selected_count(self) -> int:
        """Number of selected features (the subset size m)."""
        return int(self.bits.sum())

    def selected_indices(self) -> np.ndarray:
        """Strictly increasing indices of the 1-bits; may be empty."""
        return np.flatnonzero(self.bits)

    def flip(self, i: int) -> "FeatureMask":
        """Return a copy with bit ``i`` inverted; the input is unchanged."""
        if not 0 <= i < self.n:
            raise IndexError(f"bit index {i} out of range for {self.n} features")
        bits = self.bits.copy()
        bits[i] ^= 1
        return FeatureMask(bits)

    def key(self) -> bytes:
        """Hashable identity of the bit pattern, used as cache key."""
        return self.bits.tobytes()

    def to01(self) -> str:
        """Serialize as a string of '0'/'1' characters."""
        return "".join("1" if b else "0" for b in self.bits)

    @classmethod
    def from01(cls, s: str) -> "FeatureMask":
        return cls(np.frombuffer(s.encode("ascii"), dtype=np.uint8) - ord("0"))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FeatureMask):
            return NotImplemented
        return self.n == other.n and bool(np.all(self.bits == other.bits))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"FeatureMask({self.to01()!r})"
