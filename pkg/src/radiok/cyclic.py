"""Arithmetic on Z_n for radio-k-labelings of the cycle C_n.

Vertices are the residues 0..n-1; everything here is exact integer math.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

MAX_N = 10**6


class InstanceError(ValueError):
    """Raised for (n, k) outside the supported range (n >= 3, k >= floor(n/2))."""


class ParityClass(enum.Enum):
    SAME = "same"
    EVEN_ODD = "even-odd"  # n even, k odd
    ODD_EVEN = "odd-even"  # n odd, k even


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def check_instance(n: int, k: int) -> None:
    if not isinstance(n, int) or not isinstance(k, int):
        raise InstanceError(f"n and k must be integers, got {n!r}, {k!r}")
    if n < 3:
        raise InstanceError(f"n must be at least 3, got {n}")
    if n > MAX_N:
        raise InstanceError(f"n must be at most {MAX_N}, got {n}")
    if k < n // 2:
        raise InstanceError(f"k must be at least floor(n/2) = {n // 2}, got {k}")


def parity_class(n: int, k: int) -> ParityClass:
    if n % 2 == k % 2:
        return ParityClass.SAME
    return ParityClass.EVEN_ODD if n % 2 == 0 else ParityClass.ODD_EVEN


@dataclass(frozen=True)
class CycleInstance:
    n: int
    k: int
    d: int = field(init=False)
    parity_class: ParityClass = field(init=False)

    def __post_init__(self):
        check_instance(self.n, self.k)
        object.__setattr__(self, "d", self.n // 2)
        object.__setattr__(self, "parity_class", parity_class(self.n, self.k))

    @property
    def phi(self) -> int:
        return phi(self.n, self.k)

    @property
    def lb(self) -> int:
        return lb(self.n, self.k)


def cycle_distance(u: int, v: int, n: int) -> int:
    """Length of the shorter arc between u and v on C_n."""
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertices must lie in [0, {n}), got {u}, {v}")
    r = (u - v) % n
    return min(r, n - r)


def phi(n: int, k: int) -> int:
    """Minimum combined label gap over two consecutive steps: ceil((3k+3-n)/2)."""
    check_instance(n, k)
    return ceil_div(3 * k + 3 - n, 2)


def lb(n: int, k: int) -> int:
    f = phi(n, k)
    if n % 2 == 0:
        return f * (n - 2) // 2 + k - n // 2 + 1
    return f * (n - 1) // 2


@dataclass(frozen=True)
class Subgroup:
    """Cyclic subgroup <generator> of Z_n."""

    n: int
    generator: int
    elements: tuple[int, ...]
    _members: frozenset = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x % self.n in self._members

    def coset(self, a: int) -> frozenset:
        return frozenset((a + e) % self.n for e in self.elements)


def subgroup(n: int, g: int) -> Subgroup:
    if n < 1 or not 0 <= g < n:
        raise ValueError(f"generator must lie in [0, {n}), got {g}")
    order = n // gcd(n, g)
    elements = tuple(t * g % n for t in range(order))
    return Subgroup(n, g, elements, frozenset(elements))


class Halving(enum.Enum):
    HALF = "half"  # n/2 in <h*>, gcd(n, h*) = gcd(n/2, h*)
    DOUBLE = "double"  # n/2 not in <h*>, gcd(n, h*) = 2 gcd(n/2, h*)


@dataclass(frozen=True)
class HalvingResult:
    kind: Halving
    gcd_n: int
    gcd_half: int


def gcd_halving_classify(n: int, h_star: int) -> HalvingResult:
    if n % 2:
        raise ValueError(f"n must be even, got {n}")
    if not 0 < h_star < n:
        raise ValueError(f"h* must lie in (0, {n}), got {h_star}")
    kind = Halving.HALF if n // 2 in subgroup(n, h_star) else Halving.DOUBLE
    return HalvingResult(kind, gcd(n, h_star), gcd(n // 2, h_star))


@dataclass(frozen=True)
class MismatchGap:
    """Gap data for n and k of different parity with k < n - 3."""

    n: int
    k: int
    h: int
    p: int
    p_star: int
    d_in_H: bool


def mismatch_gap(n: int, k: int) -> MismatchGap:
    check_instance(n, k)
    if n % 2 == k % 2:
        raise InstanceError(f"n={n} and k={k} have the same parity")
    if k >= n - 3:
        raise InstanceError(f"k={k} must be below n-3={n - 3}")
    h = (n - k - 1) // 2
    d = n // 2
    return MismatchGap(n, k, h, gcd(n, h), gcd(d, h), d in subgroup(n, h % n))
