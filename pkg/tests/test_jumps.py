from math import gcd

import pytest
from hypothesis import given, strategies as st

from radiok.constructions import schedule_for
from radiok.jumps import (
    JumpError,
    JumpSequence,
    coset_bound_check,
    dump_schedule,
    explicit_order,
    generate,
    materialize,
)


def test_generate_alternating_walk():
    walk = generate((6, 4), 12)
    assert walk.terms == (0, 6, 10, 4, 8, 2, 6, 0, 4, 10, 2, 8)
    assert walk.support == {0, 2, 4, 6, 8, 10}
    assert not walk.is_permutation


def test_generate_single_jump():
    walk = generate(JumpSequence((2,), 5), 5)
    assert walk.terms == (0, 2, 4, 1, 3)
    assert walk.is_permutation


@pytest.mark.parametrize("jumps", [(), (0,), (7,), (3, 7)])
def test_generate_rejects_bad_jumps(jumps):
    with pytest.raises(JumpError):
        generate(jumps, 12)


def test_coset_bound_examples():
    assert coset_bound_check(6, 4, 12) == (6, True)
    bound, _ = coset_bound_check(13, 11, 27)
    assert bound == 18
    for q in range(1, 30):
        assert coset_bound_check(q, q, 2 * q + 1) == (2 * q + 1, True)


def test_explicit_order_constant_schedule():
    walk = explicit_order(lambda i: 2, 5)
    assert walk.terms == (0, 2, 4, 1, 3) and walk.is_permutation


def test_explicit_order_known_schedules():
    assert explicit_order(schedule_for(16, 10), 16).is_permutation
    assert explicit_order(schedule_for(27, 20), 27).is_permutation
    # the switch into the second coset of <2> jumps 5
    assert schedule_for(16, 10)[7] == 5
    assert schedule_for(27, 20)[17] == 10


def test_materialize_and_dump():
    steps = materialize(lambda i: 3 if i % 2 else 4, 9)
    assert dump_schedule(steps) == "4,3,4,3,4,3,4,3"
    with pytest.raises(JumpError):
        materialize([1, 2], 9)
    with pytest.raises(JumpError):
        materialize(lambda i: 5, 9)


@given(st.integers(3, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n // 2))))
def test_constant_schedule_permutation_iff_coprime(args):
    n, c = args
    walk = explicit_order(lambda i: c, n)
    assert len(walk.terms) == n and walk.terms[0] == 0
    assert walk.is_permutation == (gcd(n, c) == 1)


def test_generate_partial_sums():
    walk = generate((5, 3, 1), 17)
    s = 0
    for m, a in enumerate(walk.terms):
        assert a == s % 17
        s += (5, 3, 1)[m % 3]
