"""Fleiner's deferred-acceptance algorithm for matroid kernels, and the kernel verifier."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Callable, Iterator, Sequence

from .matroid import ContractViolation, InvariantViolation, Matroid, fundamental_circuit
from .ordered import StrictOrder, optimal_base


@dataclass(frozen=True)
class OrderedPair:
    m1: Matroid
    m2: Matroid
    order1: StrictOrder
    order2: StrictOrder

    def __post_init__(self):
        ground = frozenset(range(self.m1.n))
        if self.m2.n != self.m1.n:
            raise ContractViolation("both matroids must share a ground set")
        if self.order1.carrier != ground or self.order2.carrier != ground:
            raise ContractViolation("orders must be total on the ground set")

    @property
    def n(self) -> int:
        return self.m1.n


@dataclass(frozen=True)
class WeakPair:
    m1: Matroid
    m2: Matroid
    p1: tuple[Fraction, ...]
    p2: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return self.m1.n


@dataclass(frozen=True)
class BlockingCertificate:
    """Element ``y`` outside ``X`` plus its exchange partners; ``None`` means ``X + y`` fits."""

    y: int
    v1: int | None
    v2: int | None
    improvements: tuple[Fraction, Fraction]


def order_values(order: StrictOrder) -> tuple[Fraction, ...]:
    """Injective positive values realising a strict order (best gets the largest)."""
    seq = order.sequence()
    values = [Fraction(0)] * len(seq)
    for pos, e in enumerate(seq):
        values[e] = Fraction(len(seq) - pos)
    return tuple(values)


def as_weak(pair: OrderedPair | WeakPair) -> WeakPair:
    if isinstance(pair, WeakPair):
        return pair
    return WeakPair(pair.m1, pair.m2, order_values(pair.order1), order_values(pair.order2))


def strict_from_values(values: Sequence[Fraction], tiebreak: Callable[[int], object] = lambda e: e) -> StrictOrder:
    """Order by descending value, ties resolved by ascending ``tiebreak(e)``."""
    return StrictOrder.from_sequence(sorted(range(len(values)), key=lambda e: (-values[e], tiebreak(e))))


def best_exchange(m: Matroid, x: frozenset[int], y: int,
                  p: Sequence[Fraction]) -> tuple[int | None, Fraction] | None:
    """Partner for ``y`` minimising ``p`` on ``C_X(y)``, and the resulting improvement.

    The partner is ``None`` when ``X + y`` is independent (improvement ``p(y)``).
    Returns ``None`` outright for a loop, which admits no exchange at all.
    """
    circuit = fundamental_circuit(m, x, y)
    if circuit is None:
        return None, p[y]
    partners = sorted(circuit - {y})
    if not partners:
        return None
    v = min(partners, key=lambda e: p[e])
    return v, p[y] - p[v]


def common_independent(pair: OrderedPair | WeakPair, x: AbstractSet[int]) -> bool:
    x = frozenset(x)
    return pair.m1.independent(x) and pair.m2.independent(x)


def exchange_candidates(pair: WeakPair, x: frozenset[int]) -> Iterator[BlockingCertificate]:
    """Best-improvement certificate for every ``y`` outside ``X``, ascending ``y``.

    Loops of either matroid are skipped: they can never enter any common independent set.
    """
    if not common_independent(pair, x):
        raise ContractViolation(f"{sorted(x)} is not a common independent set")
    for y in range(pair.n):
        if y in x:
            continue
        first = best_exchange(pair.m1, x, y, pair.p1)
        second = best_exchange(pair.m2, x, y, pair.p2)
        if first is None or second is None:
            continue
        (v1, g1), (v2, g2) = first, second
        yield BlockingCertificate(y, v1, v2, (g1, g2))


def _kernel_blocks(cert: BlockingCertificate) -> bool:
    g1, g2 = cert.improvements
    return (cert.v1 is None or g1 > 0) and (cert.v2 is None or g2 > 0)


def iter_kernel_blockers(pair: OrderedPair | WeakPair, x: AbstractSet[int]) -> Iterator[BlockingCertificate]:
    return (c for c in exchange_candidates(as_weak(pair), frozenset(x)) if _kernel_blocks(c))


def find_kernel_blocker(pair: OrderedPair | WeakPair, x: AbstractSet[int]) -> BlockingCertificate | None:
    return next(iter_kernel_blockers(pair, x), None)


def is_kernel(pair: OrderedPair | WeakPair, x: AbstractSet[int]) -> bool:
    return common_independent(pair, x) and find_kernel_blocker(pair, x) is None


@dataclass
class FleinerTrace:
    iterations: int = 0
    rejected: frozenset[int] = frozenset()


def fleiner_kernel(pair: OrderedPair, trace: FleinerTrace | None = None) -> frozenset[int]:
    """Alternate optimal bases of the two ordered matroids until they agree.

    ``X`` is the best base of ``m1`` avoiding the rejected set ``R``, ``Y`` the
    best base of ``m2`` inside ``X``; whatever ``m2`` drops joins ``R``.
    """
    n = pair.n
    ground = frozenset(range(n))
    rejected: frozenset[int] = frozenset()
    for iteration in range(1, n + 2):
        x = optimal_base(pair.m1, pair.order1, ground - rejected)
        y = optimal_base(pair.m2, pair.order2, x)
        if trace is not None:
            trace.iterations = iteration
            trace.rejected = rejected
        if y == x:
            return y
        rejected = rejected | (x - y)
    raise InvariantViolation("Fleiner loop exceeded |S| + 1 iterations", payload=pair)
