"""Explicit radio-k-labelings of C_n built from jump and label-gap rules.

Every builder materializes its jump schedule and label gaps, walks the
schedule from vertex 0, and refuses to return unless the result is a
permutation, passes the full pairwise check, and has the promised span.
"""

from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass
from math import gcd

from .cyclic import ceil_div, check_instance, lb, phi
from .jumps import JumpError, dump_schedule, explicit_order
from .verify import Labeling, verify_full


class CaseId(str, enum.Enum):
    T32_ODD = "T32_ODD"
    T32_EVEN = "T32_EVEN"
    T34_C1 = "T34_C1"
    T34_C21 = "T34_C21"
    T34_C221 = "T34_C221"
    T34_C222 = "T34_C222"
    T43 = "T43"
    T45 = "T45"
    T46 = "T46"


class ConstructionError(RuntimeError):
    """A builder produced something that is not the labeling it promised."""

    def __init__(self, message: str, schedule: list[int] | None = None):
        if schedule is not None:
            message = f"{message}\n  jumps: {dump_schedule(schedule)}"
        super().__init__(message)
        self.schedule = schedule


@dataclass(frozen=True)
class CaseParams:
    case_id: CaseId
    n: int
    k: int
    q: int | None = None
    m: int | None = None
    t: int | None = None
    h: int | None = None
    z: int | None = None
    s: int | None = None
    c: int | None = None
    p_star: int | None = None


def t32_span(n: int, k: int) -> int:
    if n % 2:
        return (n - 1) // 2 * (2 * k + 3 - n)
    return (n - 2) // 2 * (2 * k + 3 - n) + k - n // 2 + 1


def classify(n: int, k: int) -> CaseParams | None:
    """Pick the construction that applies to (n, k), or None if there is none."""
    check_instance(n, k)
    d = n // 2
    if k >= n - 3:
        return CaseParams(CaseId.T32_ODD if n % 2 else CaseId.T32_EVEN, n, k)
    q, t = divmod(n, 4)
    if n % 2 == 0 and k % 2 == 0:
        m = (k - 2 * q - t) // 2
        h = q - m - 1
        return CaseParams(CaseId.T34_C1, n, k, q=q, m=m, t=t, h=h, p_star=gcd(d, h))
    if n % 2 == 1 and k % 2 == 1:
        m = (k - 2 * q - 1) // 2
        f = phi(n, k)
        z = ceil_div(d + q + m + 1, 2)
        if f % 2 == 0:
            return CaseParams(CaseId.T34_C21, n, k, q=q, m=m, t=t, z=z, s=n // gcd(n, z))
        h = n - 2 * z
        c = gcd(n, h)
        case = CaseId.T34_C221 if c == 1 else CaseId.T34_C222
        return CaseParams(case, n, k, q=q, m=m, t=t, h=h, z=z, c=c)
    h = (n - k - 1) // 2
    if n % 2 == 1:
        if n % h == 0:
            return CaseParams(CaseId.T46, n, k, q=q, m=q - h, t=t, h=h, c=h)
        if gcd(n, h) == 1 and h % 2 == 1:
            return CaseParams(CaseId.T45, n, k, h=h, c=1)
        return None
    m = (k - 2 * q - 1) // 2
    return CaseParams(CaseId.T43, n, k, q=q, m=m, t=t, h=h, p_star=gcd(d, h))


# Piecewise rules: the first matching (predicate, value) pair wins.
Rule = list[tuple[Callable[[int], bool], int]]


def _apply(rule: Rule, i: int, what: str, n: int, k: int) -> int:
    for pred, value in rule:
        if pred(i):
            return value
    raise ConstructionError(f"no {what} rule covers step {i} for n={n}, k={k}")


def _finish(
    n: int, k: int, case: CaseId, jumps: list[int], gaps: list[int], expected_span: int
) -> Labeling:
    try:
        walk = explicit_order(jumps, n)
    except JumpError as exc:
        raise ConstructionError(f"{case.value} n={n} k={k}: {exc}", jumps) from exc
    if not walk.is_permutation:
        raise ConstructionError(f"{case.value} n={n} k={k}: jumps do not give a permutation", jumps)
    labels = [0]
    for g in gaps:
        labels.append(labels[-1] + g)
    lab = Labeling(n, k, walk.terms, labels, case.value)
    verdict = verify_full(lab)
    if not verdict.valid:
        raise ConstructionError(f"{case.value} n={n} k={k}: invalid labeling, {verdict.witness}", jumps)
    if lab.span != expected_span:
        raise ConstructionError(
            f"{case.value} n={n} k={k}: span {lab.span}, expected {expected_span}", jumps
        )
    return lab


def _build_rules(n: int, k: int, case: CaseId, jump_rule: Rule, gap_rule: Rule, span: int) -> Labeling:
    jumps = [_apply(jump_rule, i, "jump", n, k) for i in range(n - 1)]
    gaps = [_apply(gap_rule, i, "label", n, k) for i in range(n - 1)]
    return _finish(n, k, case, jumps, gaps, span)


def _require(params: CaseParams | None, n: int, k: int, *cases: CaseId) -> CaseParams:
    if params is None:
        params = classify(n, k)
    if params is None or params.case_id not in cases or (params.n, params.k) != (n, k):
        names = "/".join(c.value for c in cases)
        raise ValueError(f"(n={n}, k={k}) does not satisfy the {names} preconditions")
    return params


def build_t32(n: int, k: int) -> Labeling:
    """k >= n - 3: a single jump length (odd n) or alternating d, d-1 (even n)."""
    params = _require(None, n, k, CaseId.T32_ODD, CaseId.T32_EVEN)
    d = n // 2
    even = lambda i: i % 2 == 0
    always = lambda i: True
    if n % 2:
        return _build_rules(n, k, params.case_id, [(always, d)], [(always, k + 1 - d)], t32_span(n, k))
    return _build_rules(
        n, k, params.case_id,
        [(even, d), (always, d - 1)],
        [(even, k + 1 - d), (always, k + 2 - d)],
        t32_span(n, k),
    )


def build_t34(n: int, k: int, params: CaseParams | None = None) -> Labeling:
    """Same parity, floor(n/2) <= k <= n - 3; span equals LB(n, k)."""
    params = _require(params, n, k, CaseId.T34_C1, CaseId.T34_C21, CaseId.T34_C221, CaseId.T34_C222)
    d = n // 2
    f = phi(n, k)
    even = lambda i: i % 2 == 0
    odd = lambda i: i % 2 == 1
    always = lambda i: True
    case = params.case_id

    if case is CaseId.T34_C1:
        q, m, t, h, p = params.q, params.m, params.t, params.h, params.p_star
        period = n // p
        switch = lambda i: i % 2 == 1 and (i + 1) % period == 0
        jumps = [(even, d), (switch, d - h - 1), (odd, d - h)]
        gaps = [(even, 2 * m + 1 + t // 2), (odd, q + m + 1 + t // 2)]
    elif case is CaseId.T34_C21:
        z, s = params.z, params.s
        jumps = [(lambda i: (i + 1) % s == 0, z + 1), (always, z)]
        gaps = [(always, f // 2)]
    elif case is CaseId.T34_C221:
        jumps = [(always, params.z)]
        gaps = [(even, f // 2), (odd, ceil_div(f, 2))]
    else:
        h, c = params.h, params.c
        block = n // c
        switch = lambda i: i % 2 == 1 and (i + 1) % (2 * block) == 0
        jumps = [
            (lambda i: even(i) and i <= n - 2 - block, d),
            (lambda i: switch(i) and i <= n - 1 - block, d - h),
            (lambda i: odd(i) and i <= n - 1 - block, d - h + 1),
            (lambda i: n - block <= i <= n - 2, (n - h) // 2),
        ]
        gaps = [
            (lambda i: even(i) and i <= n - 2 - block, k + 1 - d),
            (lambda i: odd(i) and i <= n - 1 - block, f - (k + 1 - d)),
            (lambda i: even(i) and n - 1 - block < i <= n - 2, f // 2),
            (lambda i: odd(i) and n - block < i <= n - 2, ceil_div(f, 2)),
        ]
    return _build_rules(n, k, case, jumps, gaps, lb(n, k))


def build_t43(n: int, k: int, params: CaseParams | None = None) -> Labeling:
    """n even, k odd, k < n - 3; span LB(n, k) + gcd(d, h) - 1."""
    params = _require(params, n, k, CaseId.T43)
    d, h, ps = n // 2, params.h, params.p_star
    period = n // ps
    switch = lambda i: (i + 1) % period == 0 and 0 < (i + 1) // period < ps
    even = lambda i: i % 2 == 0
    always = lambda i: True
    return _build_rules(
        n, k, CaseId.T43,
        [(even, d), (switch, d - h - 1), (always, d - h)],
        [(even, k + 1 - d), (switch, d - h + 1), (always, d - h)],
        lb(n, k) + ps - 1,
    )


def build_t45(n: int, k: int) -> Labeling:
    """n odd, k even, gcd(n, h) = 1 with h odd; span LB(n, k)."""
    params = _require(None, n, k, CaseId.T45)
    always = lambda i: True
    return _build_rules(
        n, k, CaseId.T45,
        [(always, (n - params.h) // 2)],
        [(always, phi(n, k) // 2)],
        lb(n, k),
    )


def build_t46(n: int, k: int, params: CaseParams | None = None) -> Labeling:
    """n odd, k even, h | n; span LB(n, k) + (h - 1)/2."""
    params = _require(params, n, k, CaseId.T46)
    d, h = n // 2, params.h
    f = phi(n, k)
    block = n // h
    even = lambda i: i % 2 == 0
    odd = lambda i: i % 2 == 1
    switch = lambda i: odd(i) and (i + 1) % (2 * block) == 0 and i <= n - block
    final = lambda i: n - block <= i <= n - 2
    head = lambda i: i <= n - 2 - block
    jumps = [
        (lambda i: even(i) and head(i), d),
        (switch, d - h),
        (lambda i: odd(i) and head(i), d - h + 1),
        (final, (n - h) // 2),
    ]
    gaps = [
        (lambda i: even(i) and head(i), k + 1 - d),
        (switch, f - (k + 1 - d) + 1),
        (lambda i: odd(i) and head(i), f - (k + 1 - d)),
        (lambda i: final(i) and even(i), f // 2),
        (final, ceil_div(f, 2)),
    ]
    return _build_rules(n, k, CaseId.T46, jumps, gaps, lb(n, k) + (h - 1) // 2)


def build(n: int, k: int) -> Labeling | None:
    """Labeling from whichever construction covers (n, k), else None."""
    params = classify(n, k)
    if params is None:
        return None
    case = params.case_id
    if case in (CaseId.T32_ODD, CaseId.T32_EVEN):
        return build_t32(n, k)
    if case is CaseId.T43:
        return build_t43(n, k, params)
    if case is CaseId.T45:
        return build_t45(n, k)
    if case is CaseId.T46:
        return build_t46(n, k, params)
    return build_t34(n, k, params)


def schedule_for(n: int, k: int) -> list[int] | None:
    """The jump list of the covering construction, for tracing."""
    lab = build(n, k)
    if lab is None:
        return None
    return [(b - a) % n for a, b in zip(lab.order, lab.order[1:])]
