"""Ordered matroids: greedy optimal bases and the perfect exchange matching.

For an optimal base ``A`` and a base ``B`` disjoint from it, the pairs
``(a, b)`` with ``a`` better than ``b`` and ``B + a - b`` independent always
contain a perfect matching between ``A`` and ``B``. This module builds that
matching explicitly so the property can be checked instance by instance.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Mapping, Sequence

from .matroid import (
    ContractViolation,
    InputError,
    InvariantViolation,
    Matroid,
    fundamental_circuit,
    is_circuit,
    rank_of,
)


@dataclass(frozen=True)
class StrictOrder:
    """Total order on a carrier; smaller ``key`` value means more preferred."""

    key: Mapping[int, int]

    def __post_init__(self):
        key = dict(self.key)
        if len(set(key.values())) != len(key):
            raise InputError("strict order keys must be distinct")
        object.__setattr__(self, "key", key)

    @classmethod
    def from_sequence(cls, best_first: Sequence[int]) -> "StrictOrder":
        return cls({e: pos for pos, e in enumerate(best_first)})

    def __hash__(self):
        return hash(tuple(sorted(self.key.items())))

    @property
    def carrier(self) -> frozenset[int]:
        return frozenset(self.key)

    def better(self, a: int, b: int) -> bool:
        return self.key[a] < self.key[b]

    def ranked(self, elements: Iterable[int]) -> list[int]:
        return sorted(elements, key=self.key.__getitem__)

    def worst(self, elements: Iterable[int]) -> int:
        return max(elements, key=self.key.__getitem__)

    def sequence(self) -> list[int]:
        return self.ranked(self.key)


@dataclass(frozen=True)
class ExchangeMatching:
    pairs: tuple[tuple[int, int], ...]


def optimal_base(m: Matroid, order: StrictOrder, restrict: AbstractSet[int]) -> frozenset[int]:
    missing = set(restrict) - order.carrier
    if missing:
        raise InputError(f"elements {sorted(missing)} are not ordered")
    current: frozenset[int] = frozenset()
    for e in order.ranked(restrict):
        candidate = current | {e}
        if m.independent(candidate):
            current = candidate
    return current


def is_base(m: Matroid, x: AbstractSet[int]) -> bool:
    x = frozenset(x)
    return m.independent(x) and len(x) == rank_of(m, range(m.n))


def _require_exchange_setup(m: Matroid, order: StrictOrder,
                            a: AbstractSet[int], b: AbstractSet[int]) -> None:
    if frozenset(a) != optimal_base(m, order, range(m.n)):
        raise ContractViolation("A is not the optimal base")
    if not is_base(m, b):
        raise ContractViolation("B is not a base")
    if set(a) & set(b):
        raise ContractViolation("A and B are not disjoint")


def exchange_graph(m: Matroid, order: StrictOrder, a: AbstractSet[int],
                   b: AbstractSet[int]) -> list[tuple[int, int]]:
    """Edges ``(x, y)`` with ``x`` in ``A`` beating ``y`` in ``B`` and ``y`` on ``C_B(x)``."""
    _require_exchange_setup(m, order, a, b)
    b = frozenset(b)
    edges = []
    for x in sorted(a):
        circuit = fundamental_circuit(m, b, x) or frozenset()
        edges.extend((x, y) for y in sorted(circuit - {x}) if order.better(x, y))
    return edges


def _max_bipartite_matching(left: Sequence[int], adj: Mapping[int, Sequence[int]]) -> dict[int, int]:
    # Kuhn's augmenting paths, scanning in ascending id for determinism.
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj.get(u, ()):
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in left:
        augment(u, set())
    return {u: v for v, u in match_right.items()}


def perfect_exchange_matching(m: Matroid, order: StrictOrder, a: AbstractSet[int],
                              b: AbstractSet[int]) -> ExchangeMatching:
    edges = exchange_graph(m, order, a, b)
    adj: dict[int, list[int]] = {}
    for x, y in edges:
        adj.setdefault(x, []).append(y)
    matched = _max_bipartite_matching(sorted(a), adj)
    if len(matched) != len(a):
        raise InvariantViolation(
            "no perfect exchange matching between optimal base and disjoint base",
            payload={"matroid": m, "order": order.sequence(), "A": sorted(a), "B": sorted(b)},
        )
    return ExchangeMatching(tuple(sorted(matched.items())))


def check_exchange_matching(m: Matroid, order: StrictOrder, a: AbstractSet[int],
                            b: AbstractSet[int], matching: ExchangeMatching) -> bool:
    a, b = frozenset(a), frozenset(b)
    xs = [x for x, _ in matching.pairs]
    ys = [y for _, y in matching.pairs]
    if sorted(xs) != sorted(a) or sorted(ys) != sorted(b):
        return False
    return all(order.better(x, y) and m.independent((b - {y}) | {x}) for x, y in matching.pairs)


def hall_condition_holds(edges: Iterable[tuple[int, int]], a: AbstractSet[int], max_size: int = 10) -> bool:
    """Exhaustive Hall check: every ``X`` in ``A`` has at least ``|X|`` neighbours."""
    if len(a) > max_size:
        raise InputError(f"Hall check refused for |A| = {len(a)} > {max_size}")
    nbrs: dict[int, set[int]] = {x: set() for x in a}
    for x, y in edges:
        nbrs[x].add(y)
    side = sorted(a)
    for r in range(1, len(side) + 1):
        for xs in itertools.combinations(side, r):
            if len(set().union(*(nbrs[x] for x in xs))) < r:
                return False
    return True


def check_worst_circuit_element(m: Matroid, order: StrictOrder, a: AbstractSet[int],
                                c: AbstractSet[int]) -> bool:
    if frozenset(a) != optimal_base(m, order, range(m.n)):
        raise ContractViolation("A is not the optimal base")
    if not is_circuit(m, c):
        raise ContractViolation(f"{sorted(c)} is not a circuit")
    return order.worst(c) not in a


def complementary_base(m: Matroid, order: StrictOrder, a: AbstractSet[int]) -> frozenset[int] | None:
    """Greedy base inside ``S - A`` under ``order``; ``None`` if ``S - A`` spans less than a base."""
    rest = frozenset(range(m.n)) - frozenset(a)
    b = optimal_base(m, order, rest)
    return b if is_base(m, b) else None
