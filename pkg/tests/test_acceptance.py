"""Acceptance suite. Each test prints one PASS/FAIL line; the lines are
repeated in the terminal summary (see conftest.py)."""

import contextlib
import random
import time
from math import gcd

import pytest

from conftest import random_labeling
from radiok.constructions import build, build_t32, build_t34, build_t43, build_t45, build_t46
from radiok.cyclic import Halving, gcd_halving_classify, lb, phi
from radiok.dispatch import Kind, resolve, rn_d_plus_1_reference
from radiok.jumps import coset_bound_check
from radiok.oracle import exact_rn, rows_from_csv, rows_to_csv, scan_conjecture
from radiok.verify import verify_adjacent, verify_full, verify_reduced

RESULTS: list[str] = []


@contextlib.contextmanager
def criterion(num, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"[FAIL] criterion {num}: {title} ({time.perf_counter() - start:.2f}s) {type(exc).__name__}: {exc}"
        print(line)
        RESULTS.append(line)
        raise
    line = f"[PASS] criterion {num}: {title} ({time.perf_counter() - start:.2f}s)"
    print(line)
    RESULTS.append(line)


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def test_c01_worked_examples():
    with criterion(1, "worked examples (16,10)=66, (27,19)=221, (27,20)=235"):
        for n, k, ph, span, builder in [
            (16, 10, 9, 66, build_t34),
            (27, 19, 17, 221, build_t34),
            (27, 20, 18, 235, build_t46),
        ]:
            lab, elapsed = timed(builder, n, k)
            assert phi(n, k) == ph
            assert lab.span == span and verify_full(lab).valid
            assert resolve(n, k).value == span
            assert elapsed < 1.0, (n, k, elapsed)
        assert 235 == lb(27, 20) + 1


def test_c02_oracle_matches_exact():
    with criterion(2, "oracle equals every Exact value, 3 <= n <= 10"):
        start = time.perf_counter()
        checked = 0
        for n in range(3, 11):
            for k in range(n // 2, n + 3):
                st = resolve(n, k)
                if st.kind is Kind.EXACT:
                    value, witness = exact_rn(n, k)
                    assert value == st.value, (n, k, value, st)
                    assert verify_full(witness).valid
                    checked += 1
        assert checked > 50
        assert time.perf_counter() - start < 300


def test_c03_bounds_contain_oracle():
    # no Bounds instance exists for n <= 10, so the range runs to 16
    with criterion(3, "Bounds contain the oracle value, n <= 16"):
        seen = []
        for n in range(3, 17):
            for k in range(n // 2, n + 3):
                st = resolve(n, k)
                if st.kind is not Kind.BOUNDS:
                    continue
                value, _ = exact_rn(n, k)
                assert st.contains(value), (n, k, value, st)
                if n % 2 == 0:
                    p = gcd(n, (n - k - 1) // 2)
                    assert value >= lb(n, k) + (p + 1) // 2 - 1
                seen.append((n, k))
        assert seen == [(13, 8), (15, 10), (16, 11)]


def test_c04_t32_regime():
    with criterion(4, "k >= n-3 closed form, n <= 50, k <= n+5"):
        start = time.perf_counter()
        for n in range(3, 51):
            for k in range(max(n - 3, n // 2), n + 6):
                lab = build_t32(n, k)
                if n % 2:
                    expected = (n - 1) // 2 * (2 * k + 3 - n)
                else:
                    expected = (n - 2) // 2 * (2 * k + 3 - n) + k - n // 2 + 1
                assert verify_full(lab).valid and lab.span == expected, (n, k)
        assert time.perf_counter() - start < 10


@pytest.mark.slow
def test_c05_same_parity_regime():
    with criterion(5, "same parity builder hits LB, n <= 300"):
        start = time.perf_counter()
        count = 0
        for n in range(3, 301):
            for k in range(n // 2, n - 3):
                if (n - k) % 2:
                    continue
                lab = build_t34(n, k)
                assert sorted(lab.order) == list(range(n))
                assert verify_full(lab).valid and lab.span == lb(n, k), (n, k)
                count += 1
        assert count > 10000
        assert time.perf_counter() - start < 60


@pytest.mark.slow
def test_c06_parity_mismatch_constructions():
    with criterion(6, "mismatch builders: LB+p*-1, LB, LB+(h-1)/2, n <= 300"):
        counts = {"T43": 0, "T45": 0, "T46": 0, "cor": 0}
        for n in range(6, 301):
            d = n // 2
            for k in range(d, n - 3):
                if (n - k) % 2 == 0:
                    continue
                h = (n - k - 1) // 2
                if n % 2 == 0:
                    p_star = gcd(d, h)
                    lab = build_t43(n, k)
                    assert verify_full(lab).valid and lab.span == lb(n, k) + p_star - 1, (n, k)
                    counts["T43"] += 1
                    if p_star == 1:
                        st = resolve(n, k)
                        assert st.kind is Kind.EXACT and st.value == lb(n, k), (n, k, st)
                        counts["cor"] += 1
                    continue
                if gcd(n, h) == 1 and h % 2:
                    lab = build_t45(n, k)
                    assert verify_full(lab).valid and lab.span == lb(n, k), (n, k)
                    counts["T45"] += 1
                if n % h == 0:
                    lab = build_t46(n, k)
                    assert verify_full(lab).valid and lab.span == lb(n, k) + (h - 1) // 2, (n, k)
                    counts["T46"] += 1
        assert all(counts.values()), counts


def test_c07_d_plus_1_reference():
    with criterion(7, "k = d+1 reference vs dispatcher (n <= 60) and oracle (n <= 10)"):
        for n in range(4, 61):
            st = resolve(n, n // 2 + 1)
            assert st.kind is Kind.EXACT and st.value == rn_d_plus_1_reference(n), (n, st)
        for n in range(4, 11):
            assert exact_rn(n, n // 2 + 1)[0] == rn_d_plus_1_reference(n), n


def test_c08_coset_and_halving_identities():
    with criterion(8, "coset size bound (n <= 100) and gcd halving identity (even n <= 400)"):
        pairs = 0
        for n in range(2, 101):
            for j0 in range(1, n // 2 + 1):
                for j1 in range(1, n // 2 + 1):
                    # walk the alternating sequence by hand
                    x, seen = 0, {0}
                    for i in range(n - 1):
                        x = (x + (j0, j1)[i % 2]) % n
                        seen.add(x)
                    h = (n - j0 - j1) % n
                    g = gcd(n, h)
                    order = n // g
                    expected = order if j0 % g == 0 else 2 * order
                    bound, attained = coset_bound_check(j0, j1, n)
                    assert bound == expected and len(seen) <= bound, (n, j0, j1)
                    assert attained == (len(seen) == bound)
                    pairs += 1
        assert pairs > 80000
        for n in range(4, 401, 2):
            for hs in range(1, n):
                H = {t * hs % n for t in range(n)}
                res = gcd_halving_classify(n, hs)
                assert res.gcd_n == gcd(n, hs) and res.gcd_half == gcd(n // 2, hs)
                if n // 2 in H:
                    assert res.kind is Halving.HALF and res.gcd_n == res.gcd_half
                else:
                    assert res.kind is Halving.DOUBLE and res.gcd_n == 2 * res.gcd_half


@pytest.mark.slow
def test_c09_verifier_equivalence():
    with criterion(9, "reduced check equals full check, 10^4 labelings per n in 6..50"):
        rnd = random.Random(9)
        for n in range(6, 51):
            tally = [0, 0]
            for _ in range(10_000):
                lab = random_labeling(rnd, n, rnd.randint(n // 2, n + 3))
                full = verify_full(lab).valid
                assert verify_reduced(lab).valid == full, lab
                tally[full] += 1
            assert min(tally) > 1000, (n, tally)
            for k in range(max(n - 3, n // 2), n + 4):
                for _ in range(200):
                    lab = random_labeling(rnd, n, k)
                    assert verify_adjacent(lab).valid == verify_full(lab).valid, lab


def test_c10_conjecture_scanner():
    with criterion(10, "scanner over even n <= 12 is deterministic, round-trips, oracle-certified"):
        rows = scan_conjecture(4, 12)
        assert rows and rows == scan_conjecture(4, 12)
        assert rows_from_csv(rows_to_csv(rows)) == rows
        for r in rows:
            assert r.verdict in ("Match", "Mismatch")
            value, witness = exact_rn(r.n, r.k)
            assert r.oracle_value == value and verify_full(witness).valid
            assert r.verdict == ("Match" if value == r.conjectured else "Mismatch")
        # builder upper bound agrees where available
        for r in rows:
            lab = build(r.n, r.k)
            assert lab is None or lab.span >= r.oracle_value
