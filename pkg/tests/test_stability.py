from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import instances, subsets
from tiekernel.extend import NOTIONS, Instance
from tiekernel.kernel import is_kernel
from tiekernel.matroid import InputError, Uniform
from tiekernel.stability import (
    BRUTE_CAP_ENV,
    all_stable_sets,
    approx_solve,
    brute_cap,
    brute_force_max_stable,
    common_independent_sets,
    find_delta_blocker,
    is_stable,
    max_common_independent_size,
    ratio_check,
    weak_pair,
)

F = Fraction


def rank_one(p1, p2, delta):
    return Instance(2, Uniform(2, 1), Uniform(2, 1), p1, p2, delta)


def test_min_blocker_example():
    inst = rank_one((3, 1), (3, 1), 2)
    cert = find_delta_blocker(inst, "min", {1})
    assert cert.y == 0 and cert.improvements == (2, 2)
    assert find_delta_blocker(rank_one((3, 1), (3, 2), 2), "min", {1}) is None


def test_sum_example_below_threshold():
    assert find_delta_blocker(rank_one((2, 1), (2, 1), 3), "sum", {1}) is None


def test_max_example():
    cert = find_delta_blocker(rank_one((4, 1), (2, 1), 3), "max", {1})
    assert cert.y == 0 and cert.improvements == (3, 1)


def test_sum_needs_positive_exchange_gains():
    # gain 4 in one matroid cannot compensate for a loss in the other
    assert find_delta_blocker(rank_one((5, 1), (1, 1), 2), "sum", {1}) is None
    assert find_delta_blocker(rank_one((5, 1), (1, 1), 2), "max", {1}) is None


def test_notion_nesting_example():
    inst = rank_one((3, 1), (3, 1), 2)
    assert not is_stable(inst, "min", {1})
    assert not is_stable(inst, "sum", {1})
    assert not is_stable(inst, "max", {1})


def test_unknown_notion_rejected():
    with pytest.raises(InputError):
        find_delta_blocker(rank_one((1, 1), (1, 1), 1), "mean", set())


@settings(max_examples=150, deadline=None)
@given(instances())
def test_stability_notions_nest(inst):
    # a min-blocker gains at least delta on both sides, so it also blocks sum and max
    for s in common_independent_sets(inst):
        if is_stable(inst, "max", s) or is_stable(inst, "sum", s):
            assert is_stable(inst, "min", s)


@settings(max_examples=150, deadline=None)
@given(instances())
def test_approx_is_stable_and_within_bound(inst):
    for notion in NOTIONS:
        report = approx_solve(inst, notion)
        assert is_stable(inst, notion, report.solution)
        assert ratio_check(inst, notion) <= F(3, 2)


@settings(max_examples=80, deadline=None)
@given(instances(max_n=6))
def test_brute_force_is_max_over_stable_sets(inst):
    for notion in NOTIONS:
        stable = all_stable_sets(inst, notion)
        best = brute_force_max_stable(inst, notion)
        assert best in stable
        assert len(best) == max(len(s) for s in stable)


@settings(max_examples=80, deadline=None)
@given(instances(max_n=7))
def test_common_independent_enumeration(inst):
    direct = {s for s in subsets(inst.n) if inst.m1.independent(s) and inst.m2.independent(s)}
    listed = common_independent_sets(inst)
    assert set(listed) == direct and len(listed) == len(direct)
    assert max_common_independent_size(inst) == max(len(s) for s in direct)


def test_injective_values_give_kernels():
    inst = Instance(3, Uniform(3, 2), Uniform(3, 1), (3, 2, 1), (1, 3, 2), F(1, 2))
    report = approx_solve(inst, "min")
    assert is_kernel(weak_pair(inst), report.solution)


def test_brute_cap(monkeypatch):
    monkeypatch.delenv(BRUTE_CAP_ENV, raising=False)
    assert brute_cap() == 20
    monkeypatch.setenv(BRUTE_CAP_ENV, "3")
    with pytest.raises(InputError):
        common_independent_sets(Instance(4, Uniform(4, 1), Uniform(4, 1), (1,) * 4, (1,) * 4, 1))
    monkeypatch.setenv(BRUTE_CAP_ENV, "99")
    with pytest.raises(InputError):
        brute_cap()
    monkeypatch.setenv(BRUTE_CAP_ENV, "x")
    with pytest.raises(InputError):
        brute_cap()


def test_ratio_for_empty_instance():
    inst = Instance(0, Uniform(0, 0), Uniform(0, 0), (), (), 1)
    assert ratio_check(inst, "min") == 1
