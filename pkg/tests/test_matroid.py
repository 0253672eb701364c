import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import subsets
from tiekernel.generate import FAMILIES, random_matroid
from tiekernel.matroid import (
    ContractViolation,
    Explicit,
    Graphic,
    InputError,
    Laminar,
    Partition,
    Uniform,
    all_matroids,
    circuits,
    closure,
    fundamental_circuit,
    is_circuit,
    is_independent,
    rank_of,
    verify_matroid_axioms,
)


def brute_rank(m, x):
    return max(len(s) for s in subsets(m.n) if s <= frozenset(x) and m.independent(s))


def has_cycle(edges):
    # reachability check, deliberately not union-find
    adj = {}
    for a, b in edges:
        if a == b or b in _reach(adj, a):
            return True
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return False


def _reach(adj, start):
    seen, stack = {start}, [start]
    while stack:
        for w in adj.get(stack.pop(), ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


TRIANGLE = Graphic(((0, 1), (1, 2), (2, 0)))
SMALL_PARTITION = Partition(({0, 1}, {2}), (1, 1))


def test_uniform_independence():
    m = Uniform(3, 2)
    assert is_independent(m, {0, 1})
    assert not is_independent(m, {0, 1, 2})


def test_graphic_triangle_dependent():
    assert has_cycle([TRIANGLE.edges[e] for e in range(3)])
    assert not is_independent(TRIANGLE, {0, 1, 2})
    assert is_independent(TRIANGLE, {0, 2})


def test_out_of_range_is_input_error():
    with pytest.raises(InputError):
        is_independent(Uniform(3, 2), {3})
    with pytest.raises(InputError):
        rank_of(Uniform(3, 2), {-1})


def test_rank_examples():
    assert rank_of(Uniform(3, 2), {0, 1, 2}) == 2
    assert brute_rank(SMALL_PARTITION, {0, 1, 2}) == 2
    assert rank_of(SMALL_PARTITION, {0, 1, 2}) == 2
    for m in (Uniform(3, 2), SMALL_PARTITION, TRIANGLE):
        assert rank_of(m, set()) == 0


def test_fundamental_circuit_examples():
    assert fundamental_circuit(Uniform(3, 2), {0, 1}, 2) == {0, 1, 2}
    assert fundamental_circuit(SMALL_PARTITION, {0}, 1) == {0, 1}
    assert fundamental_circuit(SMALL_PARTITION, {0}, 2) is None


def test_fundamental_circuit_needs_independent_set():
    with pytest.raises(ContractViolation):
        fundamental_circuit(Uniform(3, 1), {0, 1}, 2)


def test_axiom_examples():
    assert verify_matroid_axioms(Explicit(2, {frozenset(), frozenset({0}), frozenset({1})}))
    bad = Explicit(3, {frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1}), frozenset({2})})
    # exchange fails for A={2}, B={0,1}
    assert not any(frozenset({2, v}) in bad.independent_sets for v in (0, 1))
    assert not verify_matroid_axioms(bad)
    assert not verify_matroid_axioms(Explicit(1, {frozenset({0})}))


def test_axiom_check_refuses_large_ground_set():
    with pytest.raises(InputError):
        verify_matroid_axioms(Explicit(17, {frozenset()}))


def test_spec_validation():
    with pytest.raises(InputError):
        Partition(({0, 1}, {1}), (1, 1))
    with pytest.raises(InputError):
        Laminar(3, ({0, 1}, {1, 2}), (1, 1))
    with pytest.raises(InputError):
        Uniform(2, -1)


@pytest.mark.parametrize("n, labeled, unlabeled", [
    (0, 1, 1), (1, 2, 2), (2, 5, 4), (3, 16, 8), (4, 68, 17), (5, 406, 38),
])
def test_matroid_enumeration_counts(n, labeled, unlabeled):
    assert len(all_matroids(n)) == labeled
    assert len(all_matroids(n, labeled=False)) == unlabeled


@pytest.mark.parametrize("n", range(5))
def test_enumerated_families_are_matroids(n):
    assert all(verify_matroid_axioms(m) for m in all_matroids(n))


@st.composite
def spec_and_sets(draw):
    family = draw(st.sampled_from(FAMILIES))
    n = draw(st.integers(0, 6 if family == "explicit" else 9))
    rng = random.Random(draw(st.integers(0, 10**6)))
    m = random_matroid(rng, family, n)
    a = frozenset(draw(st.sets(st.integers(0, max(n - 1, 0)), max_size=n))) if n else frozenset()
    b = frozenset(draw(st.sets(st.integers(0, max(n - 1, 0)), max_size=n))) if n else frozenset()
    return m, a, b


@settings(max_examples=300, deadline=None)
@given(spec_and_sets())
def test_downward_closure(case):
    m, a, b = case
    union = a | b
    if m.independent(union):
        assert m.independent(a)
        assert m.independent(b)


@settings(max_examples=300, deadline=None)
@given(spec_and_sets())
def test_exchange_axiom(case):
    m, a, b = case
    a = frozenset(sorted(a)[: rank_of(m, a)]) if not m.independent(a) else a
    from tiekernel.matroid import greedy_independent

    a = greedy_independent(m, sorted(a))
    b = greedy_independent(m, sorted(b))
    if len(a) < len(b):
        assert any(m.independent(a | {v}) for v in b - a)


@pytest.mark.parametrize("family", FAMILIES)
def test_rank_monotone_and_submodular(family):
    rng = random.Random(7)
    for _ in range(5):
        m = random_matroid(rng, family, rng.randint(0, 6))
        r = {s: rank_of(m, s) for s in subsets(m.n)}
        for s, t in itertools.product(r, repeat=2):
            if s <= t:
                assert r[s] <= r[t]
            assert r[s | t] + r[s & t] <= r[s] + r[t]


@settings(max_examples=200, deadline=None)
@given(spec_and_sets())
def test_fundamental_circuit_minimal(case):
    m, a, _ = case
    from tiekernel.matroid import greedy_independent

    base = greedy_independent(m, sorted(a))
    for x in range(m.n):
        if x in base:
            continue
        c = fundamental_circuit(m, base, x)
        if c is not None:
            assert x in c
            assert not m.independent(c)
            assert all(m.independent(c - {e}) for e in c)
            assert is_circuit(m, c)


def test_circuits_of_uniform():
    assert circuits(Uniform(4, 2)) == [frozenset(c) for c in itertools.combinations(range(4), 3)]


def test_closure_of_parallel_class():
    m = Partition(({0, 1, 2}, {3}), (1, 1))
    assert closure(m, {0}) == {0, 1, 2}
