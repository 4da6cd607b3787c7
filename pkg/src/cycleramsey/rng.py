"""xorshift64* generator, so seeded instances reproduce in any language.

State update (all arithmetic mod 2**64)::

    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    output = x * 0x2545F4914F6CDD1D

The state is seeded by ``seed * 0x9E3779B97F4A7C15 + 1`` (never zero).
``below(n)`` uses rejection sampling on the top bits so it is unbiased.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_GOLDEN = 0x9E3779B97F4A7C15


class XorShift64Star:
    def __init__(self, seed: int = 0):
        self.state = ((seed * _GOLDEN) + 1) & MASK64 or 1

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & MASK64

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        bits = max(1, (n - 1).bit_length())
        while True:
            r = self.next_u64() >> (64 - bits)
            if r < n:
                return r

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, items, k: int) -> list:
        pool = list(items)
        if k > len(pool):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def choice(self, items):
        return items[self.below(len(items))]


def derive(seed: int, index: int) -> XorShift64Star:
    """Independent stream for trial ``index`` of a run seeded with ``seed``."""
    return XorShift64Star((seed << 32) ^ (index * 0x632BE59BD9B4E019) & MASK64)
