"""Jump sequences on Z_n and the vertex walks they generate."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .cyclic import subgroup

Schedule = Callable[[int], int] | Sequence[int]


class JumpError(ValueError):
    pass


@dataclass(frozen=True)
class JumpSequence:
    """Periodic jump list (j_0, ..., j_{t-1}), each entry in [1, floor(n/2)]."""

    jumps: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(self.jumps))
        if not self.jumps:
            raise JumpError("jump sequence is empty")
        _check_jumps(self.jumps, self.n)


@dataclass(frozen=True)
class GeneratedWalk:
    terms: tuple[int, ...]
    jumps: tuple[int, ...]

    @property
    def support(self) -> frozenset:
        return frozenset(self.terms)

    @property
    def is_permutation(self) -> bool:
        return len(self.support) == len(self.terms)


def _check_jumps(jumps: Sequence[int], n: int) -> None:
    half = n // 2
    for i, j in enumerate(jumps):
        if not 1 <= j <= half:
            raise JumpError(f"jump {j} at step {i} is outside [1, {half}] for n={n}")


def _walk(jumps: Sequence[int], n: int) -> tuple[int, ...]:
    terms = [0]
    for j in jumps:
        terms.append((terms[-1] + j) % n)
    return tuple(terms)


def generate(jumps: JumpSequence | Sequence[int], n: int) -> GeneratedWalk:
    """Walk of length n from 0, cycling through the periodic jump list."""
    if not isinstance(jumps, JumpSequence):
        jumps = JumpSequence(tuple(jumps), n)
    t = len(jumps.jumps)
    steps = tuple(jumps.jumps[i % t] for i in range(n - 1))
    return GeneratedWalk(_walk(steps, n), steps)


def materialize(schedule: Schedule, n: int) -> list[int]:
    """Expand a per-step rule into the explicit list of its n-1 jumps."""
    if callable(schedule):
        steps = [schedule(i) for i in range(n - 1)]
    else:
        steps = list(schedule)
        if len(steps) != n - 1:
            raise JumpError(f"schedule has {len(steps)} steps, expected {n - 1}")
    _check_jumps(steps, n)
    return steps


def explicit_order(schedule: Schedule, n: int) -> GeneratedWalk:
    steps = materialize(schedule, n)
    return GeneratedWalk(_walk(steps, n), tuple(steps))


def dump_schedule(jumps: Sequence[int]) -> str:
    return ",".join(str(j) for j in jumps)


def coset_bound_check(j0: int, j1: int, n: int) -> tuple[int, bool]:
    """Size bound on S_n((j0, j1)) from the cosets of <n - j0 - j1>.

    Returns the bound (|H| when j0 is in H, else 2|H|) and whether the
    generated set actually reaches it.
    """
    _check_jumps((j0, j1), n)
    H = subgroup(n, (n - j0 - j1) % n)
    bound = H.order if j0 in H else 2 * H.order
    size = len(generate((j0, j1), n).support)
    return bound, size == bound
