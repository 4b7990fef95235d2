"""Exact rn_k(C_n) for small n by branch-and-bound over vertex orders.

For k >= floor(n/2) the smallest labels for a fixed order are forced
step by step (each new label only has to clear the previous two), so the
search runs over orders with x_0 = 0 and x_1 <= floor(n/2), which covers
every order up to rotation and reflection of the cycle.
"""

from __future__ import annotations

import csv
import io
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .cyclic import check_instance, lb, mismatch_gap, phi
from .verify import Labeling

DEFAULT_NODES = 10**8
DEFAULT_SECONDS = 60.0


class BudgetExceeded(RuntimeError):
    """The search ran out of nodes or time before proving optimality."""

    def __init__(self, n, k, lower, upper, witness=None, nodes=0):
        self.n, self.k = n, k
        self.lower = lower
        self.upper = upper
        self.witness = witness
        self.nodes = nodes
        best = "none" if upper is None else str(upper)
        super().__init__(f"budget exceeded for n={n}, k={k}: lower {lower}, best found {best}")


def admissible_remaining_bound(
    placed: int, remaining: int, partial_span: int, n: int, k: int, pair_floor: int | None = None
) -> int:
    """Lower bound on the span of any completion of a partial order.

    Each further pair of steps costs at least Phi(n, k) and a leftover
    single step at least k + 1 - floor(n/2).  ``pair_floor`` replaces Phi
    with any other valid per-pair minimum.
    """
    if remaining < 0:
        raise ValueError("remaining must be non-negative")
    pair = phi(n, k) if pair_floor is None else pair_floor
    return partial_span + (remaining // 2) * pair + (remaining % 2) * (k + 1 - n // 2)


def _search_branch(n, k, first, incumbent, deadline, node_limit, stop_at):
    """Depth-first search below x_0 = 0, x_1 = first.

    Returns (best_value, best_order, nodes, exhausted).  Only orders that
    beat ``incumbent`` strictly are recorded.
    """
    d = n // 2
    dist = [[min((u - v) % n, (v - u) % n) for v in range(n)] for u in range(n)]
    need = [[k + 1 - dist[u][v] for v in range(n)] for u in range(n)]
    # Any two consecutive steps cost at least max(Phi, 2k + 3 - n).
    pair = max(phi(n, k), 2 * k + 3 - n)
    single = k + 1 - d

    order = [0, first]
    labels = [0, need[0][first]]
    used = [False] * n
    used[0] = used[first] = True
    best = incumbent
    best_order = None
    nodes = 1
    # stack of candidate iterators, one per depth >= 2
    stack = [iter(range(1, n))]
    ticks = 0
    while stack:
        ticks += 1
        if nodes >= node_limit or (ticks & 0xFFF == 0 and time.monotonic() > deadline):
            return best, best_order, nodes, False
        depth = len(order)
        placed_next = None
        for v in stack[-1]:
            if used[v]:
                continue
            f = labels[-1] + need[order[-1]][v]
            g = labels[-2] + need[order[-2]][v]
            if g > f:
                f = g
            rem = n - depth - 1
            bound = f + (rem // 2) * pair + (rem % 2) * single
            nodes += 1
            if bound >= best:
                continue
            placed_next = (v, f)
            break
        if placed_next is None:
            stack.pop()
            if len(order) > 2:
                used[order.pop()] = False
                labels.pop()
            continue
        v, f = placed_next
        order.append(v)
        labels.append(f)
        used[v] = True
        if len(order) == n:
            best, best_order = f, list(order)
            if best <= stop_at:
                return best, best_order, nodes, True
            used[order.pop()] = False
            labels.pop()
            continue
        stack.append(iter(range(1, n)))
    return best, best_order, nodes, True


def _branch_job(args):
    return _search_branch(*args)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RADIOK_THREADS", "1")))
    except ValueError:
        return 1


def exact_rn(
    n: int,
    k: int,
    max_nodes: int = DEFAULT_NODES,
    max_seconds: float = DEFAULT_SECONDS,
    threads: int | None = None,
) -> tuple[int, Labeling]:
    """Minimum span over all orders, with the lexicographically smallest optimal order.

    Raises BudgetExceeded when the node or time budget runs out first.
    """
    check_instance(n, k)
    from .verify import minimal_labels_for_order

    root = lb(n, k)
    # The k >= n-3 pair floor 2k+3-n also bounds every order from below.
    root = max(root, admissible_remaining_bound(1, n - 1, 0, n, k, max(phi(n, k), 2 * k + 3 - n)))
    deadline = time.monotonic() + max_seconds
    firsts = list(range(1, n // 2 + 1))
    threads = _threads() if threads is None else threads

    results = []
    if threads > 1 and len(firsts) > 1:
        # Branches run independently; merging by (value, order) keeps the
        # answer identical to the sequential run.
        jobs = [(n, k, x1, float("inf"), deadline, max_nodes, root) for x1 in firsts]
        with ProcessPoolExecutor(max_workers=min(threads, len(firsts))) as pool:
            results = list(pool.map(_branch_job, jobs))
    else:
        incumbent = float("inf")
        nodes_left = max_nodes
        for x1 in firsts:
            res = _search_branch(n, k, x1, incumbent, deadline, nodes_left, root)
            results.append(res)
            nodes_left -= res[2]
            if res[1] is not None:
                incumbent = res[0]
            if not res[3] or incumbent <= root:
                break

    best, best_order, total_nodes, exhausted = float("inf"), None, 0, True
    for value, order, nodes, done in results:
        total_nodes += nodes
        exhausted = exhausted and done
        if order is not None and (value, order) < (best, best_order or [n]):
            best, best_order = value, order
    if best_order is not None and best <= root:
        exhausted = True
    if not exhausted or best_order is None:
        witness = None if best_order is None else minimal_labels_for_order(best_order, n, k, "oracle")
        raise BudgetExceeded(n, k, root, None if best_order is None else best, witness, total_nodes)
    return best, minimal_labels_for_order(best_order, n, k, "oracle")


@dataclass(frozen=True)
class ScanRow:
    n: int
    k: int
    h: int
    p: int
    lb: int
    conjectured: int
    oracle_value: int | None
    verdict: str


SCAN_FIELDS = [f for f in ScanRow.__dataclass_fields__]


def scan_candidates(n_lo: int, n_hi: int) -> list[tuple[int, int]]:
    """Even n, odd k in [n/2, n - 4] with n/2 in <h>."""
    out = []
    for n in range(max(n_lo, 4), n_hi + 1):
        if n % 2:
            continue
        for k in range(n // 2, n - 3):
            if k % 2 == 1 and mismatch_gap(n, k).d_in_H:
                out.append((n, k))
    return out


def scan_conjecture(
    n_lo: int, n_hi: int, max_nodes: int = DEFAULT_NODES, max_seconds: float = DEFAULT_SECONDS
) -> list[ScanRow]:
    """Compare LB + gcd(n, h) - 1 with the oracle where n/2 is in <h>.

    Verdicts are Match, Mismatch or Inconclusive (budget ran out).
    """
    rows = []
    for n, k in scan_candidates(n_lo, n_hi):
        gap = mismatch_gap(n, k)
        base = lb(n, k)
        conj = base + gap.p - 1
        try:
            value, _ = exact_rn(n, k, max_nodes=max_nodes, max_seconds=max_seconds)
        except BudgetExceeded:
            rows.append(ScanRow(n, k, gap.h, gap.p, base, conj, None, "Inconclusive"))
            continue
        rows.append(ScanRow(n, k, gap.h, gap.p, base, conj, value, "Match" if value == conj else "Mismatch"))
    return rows


def rows_to_csv(rows: list[ScanRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SCAN_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if v is None else v) for k, v in asdict(r).items()})
    return buf.getvalue()


def rows_from_csv(text: str) -> list[ScanRow]:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        ints = {f: int(rec[f]) for f in SCAN_FIELDS if f not in ("oracle_value", "verdict")}
        ov = rec["oracle_value"]
        rows.append(ScanRow(**ints, oracle_value=int(ov) if ov else None, verdict=rec["verdict"]))
    return rows
