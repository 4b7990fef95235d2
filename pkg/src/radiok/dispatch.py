"""Best known value or bounds for rn_k(C_n).

Provenance tags name the rule that produced the answer:

    T32                      k >= n - 3 closed form
    T34_C1 ... T34_C222      same parity constructions (value LB)
    K_EQ_DIAM                k = floor(n/2), value LB for every n
    K_EQ_DIAM_PLUS_1         k = floor(n/2) + 1 piecewise value
    T43_COPRIME              n even, k odd, gcd(d, h) = 1: value LB
    T43_SHARP                n even, k odd, d not in <h>: lower bound is exact
    T43                      n even, k odd, d in <h>: two-sided bounds
    T45, T46                 n odd, k even exact values
    PARITY_LB                n odd, k even, lower bound only
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .constructions import ConstructionError, build, classify, t32_span
from .cyclic import ceil_div, check_instance, lb, mismatch_gap, parity_class


class Kind(str, enum.Enum):
    EXACT = "exact"
    BOUNDS = "bounds"


@dataclass(frozen=True)
class RnStatus:
    n: int
    k: int
    kind: Kind
    lower: int
    upper: int | None
    provenance: str
    construction_available: bool

    def __post_init__(self):
        if self.kind is Kind.EXACT and self.lower != self.upper:
            raise ValueError("an exact status needs lower == upper")
        if self.upper is not None and self.upper < self.lower:
            raise ValueError(f"upper {self.upper} below lower {self.lower}")

    @property
    def value(self) -> int | None:
        return self.lower if self.kind is Kind.EXACT else None

    def contains(self, x: int) -> bool:
        return self.lower <= x and (self.upper is None or x <= self.upper)


def _exact(n, k, value, provenance, construction):
    return RnStatus(n, k, Kind.EXACT, value, value, provenance, construction)


def rn_d_plus_1_reference(n: int) -> int:
    """Known rn_k(C_n) at k = floor(n/2) + 1, piecewise in n = 4q + r."""
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    q, r = divmod(n, 4)
    base = lb(n, n // 2 + 1)
    if r == 0:
        return base + (q % 2)
    if r in (1, 2):
        return base
    return base if (q != 2 and q % 3 != 0) else base + 1


def resolve(n: int, k: int) -> RnStatus:
    check_instance(n, k)
    d = n // 2
    params = classify(n, k)
    has_build = params is not None
    if k >= n - 3:
        return _exact(n, k, t32_span(n, k), "T32", True)
    base = lb(n, k)
    if n % 2 == k % 2:
        return _exact(n, k, base, params.case_id.value, True)
    if k == d:
        return _exact(n, k, base, "K_EQ_DIAM", has_build)
    if k == d + 1:
        return _exact(n, k, rn_d_plus_1_reference(n), "K_EQ_DIAM_PLUS_1", has_build)

    gap = mismatch_gap(n, k)
    low = base + ceil_div(gap.p, 2) - 1
    if n % 2 == 0:
        if gap.p_star == 1:
            return _exact(n, k, base, "T43_COPRIME", True)
        if not gap.d_in_H:
            return _exact(n, k, low, "T43_SHARP", True)
        return RnStatus(n, k, Kind.BOUNDS, low, base + gap.p - 1, "T43", True)
    if params is not None:
        value = base if params.case_id.value == "T45" else base + (gap.h - 1) // 2
        return _exact(n, k, value, params.case_id.value, True)
    return RnStatus(n, k, Kind.BOUNDS, low, None, "PARITY_LB", False)


@dataclass
class AuditReport:
    n_max: int
    checked: int = 0
    oracle_checked: int = 0
    contradictions: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.contradictions

    def add(self, n, k, rule, detail):
        self.contradictions.append({"n": n, "k": k, "rule": rule, "detail": detail})

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "checked": self.checked,
            "oracle_checked": self.oracle_checked,
            "contradictions": self.contradictions,
        }


def consistency_audit(n_max: int, oracle_n_max: int = 0, k_extra: int = 2, **oracle_kw) -> AuditReport:
    """Cross-check every rule against the others for 3 <= n <= n_max.

    Contradictions are collected, never raised.
    """
    from .oracle import BudgetExceeded, exact_rn

    report = AuditReport(n_max)
    for n in range(3, n_max + 1):
        for k in range(n // 2, n + k_extra + 1):
            report.checked += 1
            st = resolve(n, k)
            base = lb(n, k)
            if st.lower < base:
                report.add(n, k, "lower>=LB", f"lower {st.lower} < LB {base}")
            if k < n - 3 and parity_class(n, k).value != "same":
                gap = mismatch_gap(n, k)
                floor42 = base + ceil_div(gap.p, 2) - 1
                if st.upper is not None and st.upper < floor42:
                    report.add(n, k, "mismatch-lower", f"{st} below {floor42}")
                if n % 2 == 0 and st.kind is Kind.EXACT and not (
                    floor42 <= st.lower <= base + gap.p - 1
                ):
                    report.add(n, k, "T43-bounds", f"exact {st.lower} outside T43 bounds")
            if k == n // 2 + 1 and n >= 4:
                ref = rn_d_plus_1_reference(n)
                if st.kind is not Kind.EXACT or st.lower != ref:
                    report.add(n, k, "d+1-reference", f"{st} vs reference {ref}")
            try:
                lab = build(n, k)
            except ConstructionError as exc:
                report.add(n, k, "construction", str(exc))
                lab = None
            if lab is not None:
                if st.kind is Kind.EXACT and lab.span != st.lower:
                    report.add(n, k, "construction-span", f"span {lab.span} vs exact {st.lower}")
                if not st.contains(lab.span):
                    report.add(n, k, "construction-bounds", f"span {lab.span} outside {st}")
            elif st.construction_available:
                report.add(n, k, "construction-flag", "claimed construction missing")
            if n <= oracle_n_max:
                try:
                    value, _ = exact_rn(n, k, **oracle_kw)
                except BudgetExceeded as exc:
                    report.add(n, k, "oracle-budget", str(exc))
                    continue
                report.oracle_checked += 1
                if not st.contains(value):
                    report.add(n, k, "oracle", f"oracle {value} outside {st}")
    return report
