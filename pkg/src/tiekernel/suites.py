"""Randomised and exhaustive checks of the exchange theorem and the worst-circuit-element lemma."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .generate import random_matroid
from .matroid import all_matroids, bases, circuits, fundamental_circuit
from .ordered import (
    StrictOrder,
    check_exchange_matching,
    check_worst_circuit_element,
    complementary_base,
    exchange_graph,
    hall_condition_holds,
    optimal_base,
    perfect_exchange_matching,
)


@dataclass
class SuiteStats:
    exchange_checks: int = 0
    exchange_failures: int = 0
    hall_checks: int = 0
    hall_failures: int = 0
    lemma_checks: int = 0
    lemma_failures: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.exchange_failures or self.hall_failures or self.lemma_failures)

    def merge(self, other: "SuiteStats") -> None:
        for name in ("exchange_checks", "exchange_failures", "hall_checks", "hall_failures",
                     "lemma_checks", "lemma_failures", "skipped"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.failures.extend(other.failures)


def _check_pair(stats: SuiteStats, m, order: StrictOrder, a, b) -> None:
    stats.exchange_checks += 1
    try:
        matching = perfect_exchange_matching(m, order, a, b)
        good = check_exchange_matching(m, order, a, b, matching)
    except RuntimeError:
        good = False
    if not good:
        stats.exchange_failures += 1
        stats.failures.append(("exchange", m, order.sequence(), sorted(a), sorted(b)))
    if len(a) <= 10:
        stats.hall_checks += 1
        if not hall_condition_holds(exchange_graph(m, order, a, b), a):
            stats.hall_failures += 1
            stats.failures.append(("hall", m, order.sequence(), sorted(a), sorted(b)))


def _check_circuit(stats: SuiteStats, m, order: StrictOrder, a, c) -> None:
    stats.lemma_checks += 1
    if not check_worst_circuit_element(m, order, a, c):
        stats.lemma_failures += 1
        stats.failures.append(("lemma", m, order.sequence(), sorted(a), sorted(c)))


def random_exchange_suite(seed: int, count: int, families=("partition", "uniform", "graphic", "laminar"),
                          max_n: int = 10, max_attempts_factor: int = 50) -> SuiteStats:
    """``count`` random (matroid, order) trials where a base disjoint from the optimal one exists.

    The disjoint base is the greedy base of the complement under a second random
    order. Each trial also checks the lemma on fundamental circuits of a random base.
    """
    rng = random.Random(seed)
    stats = SuiteStats()
    attempts = 0
    while stats.exchange_checks < count and attempts < max_attempts_factor * max(count, 1):
        attempts += 1
        n = rng.randint(1, max_n)
        m = random_matroid(rng, rng.choice(families), n)
        order = StrictOrder.from_sequence(rng.sample(range(n), n))
        a = optimal_base(m, order, range(n))
        other = StrictOrder.from_sequence(rng.sample(range(n), n))
        b = complementary_base(m, other, a)
        if b is None:
            stats.skipped += 1
            continue
        _check_pair(stats, m, order, a, b)
        probe = optimal_base(m, StrictOrder.from_sequence(rng.sample(range(n), n)), range(n))
        for x in range(n):
            if x in probe:
                continue
            c = fundamental_circuit(m, probe, x)
            if c is not None:
                _check_circuit(stats, m, order, a, c)
    return stats


def exhaustive_explicit_suite(max_n: int = 6) -> SuiteStats:
    """Every labeled matroid on up to ``max_n`` elements under the identity order.

    Labeled enumeration with a fixed order covers every (matroid, order) pair up to isomorphism.
    """
    stats = SuiteStats()
    for n in range(max_n + 1):
        order = StrictOrder.from_sequence(range(n))
        for m in all_matroids(n):
            a = optimal_base(m, order, range(n))
            for b in bases(m):
                if not (a & b):
                    _check_pair(stats, m, order, a, b)
            for c in circuits(m):
                _check_circuit(stats, m, order, a, c)
    return stats
