"""Counter-based random draws for reproducible law checks.

Draw ``i`` (0-based) for seed ``s`` is ``mix64((s + (i + 1) * G) mod 2^64)``
with ``G = 0x9E3779B97F4A7C15`` and ``mix64`` the SplitMix64 finaliser.
Every random case is built from consecutive draws, so any implementation
that follows the same recipe reproduces the same cases:

* GF(p) element: ``u mod p``
* rational: numerator ``(u mod 19) - 9``, denominator ``((u >> 32) mod 9) + 1``
"""
from __future__ import annotations

from fractions import Fraction

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK
    return z ^ (z >> 31)


class CounterRNG:
    __slots__ = ("seed", "counter")

    def __init__(self, seed: int):
        self.seed = seed & MASK
        self.counter = 0

    def draw(self) -> int:
        self.counter += 1
        return mix64((self.seed + self.counter * GOLDEN) & MASK)

    def below(self, k: int) -> int:
        return self.draw() % k

    def rational(self) -> Fraction:
        u = self.draw()
        return Fraction(u % 19 - 9, (u >> 32) % 9 + 1)

    def element(self, field):
        """A raw value of ``field`` (exact fields only)."""
        if field.kind == "prime":
            return self.draw() % field.modulus
        if field.kind == "rational":
            return self.rational()
        raise ValueError("random cases need an exact field")
