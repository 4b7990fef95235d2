"""Validity checks for radio-k-labelings of C_n.

A labeling is carried in ordered form: a vertex order x_0..x_{n-1} and the
labels f(x_0)..f(x_{n-1}) in that order.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .cyclic import check_instance, cycle_distance


class MalformedLabeling(ValueError):
    pass


@dataclass(frozen=True)
class Labeling:
    n: int
    k: int
    order: tuple[int, ...]
    labels: tuple[int, ...]
    provenance: str = "external"

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(x) for x in self.order))
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))

    @property
    def span(self) -> int:
        return max(self.labels) - min(self.labels)

    @property
    def gaps(self) -> list[int]:
        return [b - a for a, b in zip(self.labels, self.labels[1:])]

    def as_map(self) -> dict[int, int]:
        return dict(zip(self.order, self.labels))


@dataclass(frozen=True)
class Witness:
    u: int
    v: int
    required: int
    actual: int


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.valid


def from_map(n: int, k: int, mapping: dict[int, int], provenance: str = "external") -> Labeling:
    """Canonicalize a vertex -> label map by sorting labels ascending."""
    items = sorted(mapping.items(), key=lambda kv: (kv[1], kv[0]))
    return Labeling(n, k, [v for v, _ in items], [f for _, f in items], provenance)


def check_structure(lab: Labeling) -> None:
    check_instance(lab.n, lab.k)
    if len(lab.order) != lab.n or len(lab.labels) != lab.n:
        raise MalformedLabeling(
            f"expected {lab.n} vertices and labels, got {len(lab.order)} and {len(lab.labels)}"
        )
    seen = set()
    for x in lab.order:
        if not 0 <= x < lab.n:
            raise MalformedLabeling(f"vertex {x} is outside [0, {lab.n})")
        if x in seen:
            raise MalformedLabeling(f"vertex {x} appears twice")
        seen.add(x)
    if any(f < 0 for f in lab.labels):
        raise MalformedLabeling("labels must be non-negative")


def verify_full(lab: Labeling) -> Verdict:
    """Check |f(u) - f(v)| >= k + 1 - d(u, v) for every pair of vertices.

    The witness is the violating pair with the smallest (i, j) in order
    positions.
    """
    check_structure(lab)
    n, k = lab.n, lab.k
    x = np.asarray(lab.order, dtype=np.int64)
    f = np.asarray(lab.labels, dtype=np.int64)
    r = np.abs(x[:, None] - x[None, :])
    dist = np.minimum(r, n - r)
    gap = np.abs(f[:, None] - f[None, :])
    bad = np.triu(gap < k + 1 - dist, 1)
    if not bad.any():
        return Verdict(True)
    i, j = np.argwhere(bad)[0]
    return Verdict(False, Witness(int(x[i]), int(x[j]), int(k + 1 - dist[i, j]), int(gap[i, j])))


def _sorted_by_label(lab: Labeling) -> tuple[list[int], list[int]]:
    idx = sorted(range(lab.n), key=lambda i: lab.labels[i])
    return [lab.order[i] for i in idx], [lab.labels[i] for i in idx]


def _local_check(lab: Labeling, second: bool) -> Verdict:
    check_structure(lab)
    n, k = lab.n, lab.k
    xs, fs = _sorted_by_label(lab)
    for i in range(n - 1):
        need = k + 1 - cycle_distance(xs[i], xs[i + 1], n)
        if fs[i + 1] - fs[i] < need:
            return Verdict(False, Witness(xs[i], xs[i + 1], need, fs[i + 1] - fs[i]))
        if second and i >= 1:
            need = k + 1 - cycle_distance(xs[i - 1], xs[i + 1], n)
            if fs[i + 1] - fs[i - 1] < need:
                return Verdict(False, Witness(xs[i - 1], xs[i + 1], need, fs[i + 1] - fs[i - 1]))
    return Verdict(True)


def verify_reduced(lab: Labeling) -> Verdict:
    """Check only consecutive and distance-two pairs in label order.

    Equivalent to verify_full whenever k >= floor(n/2).
    """
    return _local_check(lab, second=True)


def verify_adjacent(lab: Labeling) -> Verdict:
    """Check only consecutive pairs in label order; complete when k >= n - 3."""
    return _local_check(lab, second=False)


def minimal_labels_for_order(
    order: Sequence[int], n: int, k: int, provenance: str = "external"
) -> Labeling:
    """Pointwise-smallest valid labels for a fixed vertex order, with f(x_0) = 0."""
    order = tuple(order)
    check_structure(Labeling(n, k, order, [0] * len(order)))
    labels = [0]
    for i in range(1, n):
        f = labels[i - 1] + k + 1 - cycle_distance(order[i - 1], order[i], n)
        if i >= 2:
            f = max(f, labels[i - 2] + k + 1 - cycle_distance(order[i - 2], order[i], n))
        labels.append(f)
    return Labeling(n, k, order, labels, provenance)
