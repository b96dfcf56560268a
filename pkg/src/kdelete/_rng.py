"""Seeded splitmix64 stream used by every randomized routine in the package.

The generator is pinned here so results are reproducible from a single 64-bit
seed: state advances by the golden-ratio increment and each output is run
through the standard xor-shift-multiply finalizer.  Floats take the top 53
bits.  randrange uses plain modulo reduction; the bias is negligible at the
range sizes used here and keeping the reduction trivial makes the stream easy
to port.
"""

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *parts: int) -> int:
    """Stable per-task seed derived from a master seed and integer labels."""
    s = mix64(seed ^ 0x5851F42D4C957F2D)
    for p in parts:
        s = mix64(s ^ (p & _MASK64))
    return s


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        return mix64(self.state)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange requires n >= 1")
        return self.next_u64() % n

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
