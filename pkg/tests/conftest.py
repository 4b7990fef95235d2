import itertools
import random

import pytest

from radiok.verify import Labeling, minimal_labels_for_order


def brute_force_rn(n, k):
    """rn_k(C_n) by trying every order with x_0 = 0.

    Labels come from the full pairwise constraint (longest path over all
    earlier vertices), so this does not rely on any reduced check.
    """
    best = None
    for perm in itertools.permutations(range(1, n)):
        order = (0,) + perm
        f = [0] * n
        for j in range(1, n):
            f[j] = max(
                f[i] + k + 1 - min((order[i] - order[j]) % n, (order[j] - order[i]) % n)
                for i in range(j)
            )
        if best is None or f[-1] < best:
            best = f[-1]
    return best


def random_labeling(rng: random.Random, n: int, k: int) -> Labeling:
    """A labeling near the valid/invalid boundary, or fully random."""
    order = list(range(n))
    rng.shuffle(order)
    mode = rng.random()
    if mode < 0.15:
        top = rng.randint(n, n * (k + 1))
        labels = sorted(rng.sample(range(top + 1), n)) if rng.random() < 0.9 else [rng.randint(0, top) for _ in range(n)]
        return Labeling(n, k, order, labels)
    base = list(minimal_labels_for_order(order, n, k).labels)
    gaps = [b - a for a, b in zip(base, base[1:])]
    if mode < 0.55:
        for _ in range(rng.randint(0, 3)):
            gaps[rng.randrange(len(gaps))] += rng.randint(1, 3)
    else:
        for _ in range(rng.randint(1, 2)):
            i = rng.randrange(len(gaps))
            gaps[i] = max(0, gaps[i] - rng.randint(1, 2))
        if rng.random() < 0.5:
            gaps[rng.randrange(len(gaps))] += rng.randint(1, 3)
    labels = [0]
    for g in gaps:
        labels.append(labels[-1] + g)
    return Labeling(n, k, order, labels)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
