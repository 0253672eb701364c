"""Parallel-copy extensions that turn weak preferences into strict orders.

Each original element ``u`` becomes a block of copies, at most one of which may
be chosen. Copies carry boosted preference values so that running Fleiner's
algorithm on the strict extension and projecting back yields a near-stable set:

* ``min``: copies ``x, y, z`` (ids 0, 1, 2),
* ``sum``: copies ``x_0 .. x_{k+1}`` where ``k`` is the number of d-levels,
* ``max``: copies ``x_0 .. x_3``.

In the ``sum`` construction the second-matroid value of ``x_{k+1}`` uses
``d_{k-(k+1)+1} = d_0 = 0``; ``d_0 = 0`` is read the same way at both ends.
When no d-level exists the single level ``delta/2`` is used, so ``k >= 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import AbstractSet, Sequence

from .kernel import OrderedPair
from .matroid import (
    ContractViolation,
    Explicit,
    Graphic,
    InputError,
    Laminar,
    Matroid,
    Partition,
    Uniform,
)
from .ordered import StrictOrder

NOTIONS = ("min", "sum", "max")
MIN_COPY_NAMES = ("x", "y", "z")


@dataclass(frozen=True)
class Instance:
    n: int
    m1: Matroid
    m2: Matroid
    p1: tuple[Fraction, ...]
    p2: tuple[Fraction, ...]
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p1", tuple(Fraction(v) for v in self.p1))
        object.__setattr__(self, "p2", tuple(Fraction(v) for v in self.p2))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.m1.n != self.n or self.m2.n != self.n:
            raise InputError(f"matroid ground sets ({self.m1.n}, {self.m2.n}) differ from n={self.n}")
        if len(self.p1) != self.n or len(self.p2) != self.n:
            raise InputError("need one preference value per element in both P1 and P2")
        if any(v < 0 for v in self.p1 + self.p2):
            raise InputError("preference values must be nonnegative")
        if self.delta <= 0:
            raise InputError("delta must be positive")


@dataclass(frozen=True)
class ExtendedMatroid:
    """``base`` with every element replaced by ``copies`` parallel copies.

    Element ``e`` is copy ``e % copies`` of origin ``e // copies``.
    """

    base: Matroid
    copies: int

    @property
    def n(self) -> int:
        return self.base.n * self.copies

    def independent(self, members: frozenset[int]) -> bool:
        origins = {e // self.copies for e in members}
        if len(origins) != len(members):
            return False
        return self.base.independent(frozenset(origins))

    def to_spec(self):
        """An equivalent matroid from the standard families, for serialisation."""
        c, base = self.copies, self.base

        def expand(s):
            return frozenset(u * c + j for u in s for j in range(c))

        groups = [expand({u}) for u in range(base.n)]
        if isinstance(base, Graphic):
            return Graphic(tuple(edge for edge in base.edges for _ in range(c)))
        if isinstance(base, Uniform):
            return Laminar(self.n, (frozenset(range(self.n)), *groups), (base.rank, *[1] * base.n))
        if isinstance(base, (Partition, Laminar)):
            family = base.classes if isinstance(base, Partition) else base.family
            return Laminar(self.n, (*map(expand, family), *groups),
                           (*base.capacities, *[1] * base.n))
        if isinstance(base, Explicit):
            sets = set()
            for s in base.independent_sets:
                choices = [frozenset()]
                for u in s:
                    choices = [ch | {u * c + j} for ch in choices for j in range(c)]
                sets.update(choices)
            return Explicit(self.n, frozenset(sets))
        raise InputError(f"cannot serialise extension of {type(base).__name__}")


@dataclass(frozen=True)
class ExtendedElement:
    origin: int
    copy: int


@dataclass(frozen=True)
class ExtendedInstance:
    base: Instance
    notion: str
    copies: int
    pair: OrderedPair
    values1: tuple[Fraction, ...]
    values2: tuple[Fraction, ...]
    K: Fraction
    d_levels: tuple[Fraction, ...] = ()
    elements: tuple[ExtendedElement, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(
            ExtendedElement(e // self.copies, e % self.copies) for e in range(self.base.n * self.copies)))

    @property
    def n(self) -> int:
        return self.base.n * self.copies

    def element_id(self, origin: int, copy: int) -> int:
        return origin * self.copies + copy

    def label(self, e: int) -> str:
        el = self.elements[e]
        tag = MIN_COPY_NAMES[el.copy] if self.notion == "min" else str(el.copy)
        return f"{tag}({el.origin})"


def big_k(inst: Instance) -> Fraction:
    return max(inst.p1 + inst.p2, default=Fraction(0)) + 1


def compute_d_levels(inst: Instance) -> list[Fraction]:
    levels: set[Fraction] = set()
    for p in (inst.p1, inst.p2):
        vals = set(p) | {Fraction(0)}
        for a in vals:
            for b in vals:
                levels.update((a - b, inst.delta - (a - b)))
    return sorted(d for d in levels if 0 < d < inst.delta)


def _strict_order(values: Sequence[Fraction], copies: int, copy_rank: Sequence[int]) -> StrictOrder:
    # Ties on value are broken by copy rank, then by ascending origin.
    return StrictOrder.from_sequence(sorted(
        range(len(values)),
        key=lambda e: (-values[e], copy_rank[e % copies], e // copies)))


def _build(inst: Instance, notion: str, copies: int, bonus1, bonus2,
           rank1: Sequence[int], rank2: Sequence[int], K: Fraction,
           d_levels: Sequence[Fraction] = ()) -> ExtendedInstance:
    values1 = tuple(inst.p1[u] + bonus1[j] for u in range(inst.n) for j in range(copies))
    values2 = tuple(inst.p2[u] + bonus2[j] for u in range(inst.n) for j in range(copies))
    pair = OrderedPair(
        ExtendedMatroid(inst.m1, copies),
        ExtendedMatroid(inst.m2, copies),
        _strict_order(values1, copies, rank1),
        _strict_order(values2, copies, rank2),
    )
    return ExtendedInstance(inst, notion, copies, pair, values1, values2, K, tuple(d_levels))


def extend_min(inst: Instance) -> ExtendedInstance:
    K, delta = big_k(inst), inst.delta
    # copies x, y, z; y wins value ties against x in m1 and against z in m2
    return _build(inst, "min", 3,
                  bonus1=(K + delta, K, Fraction(0)),
                  bonus2=(Fraction(0), K, K + delta),
                  rank1=(1, 0, 2), rank2=(2, 0, 1), K=K)


def extend_sum(inst: Instance) -> ExtendedInstance:
    K, delta = big_k(inst), inst.delta
    # With no levels there is no copy in the top tier of both orders and a
    # single improvement >= delta goes unnoticed; delta/2 is a symmetric level
    # below every positive gap, which is all the construction needs.
    levels = compute_d_levels(inst) or [delta / 2]
    k = len(levels)
    d = [Fraction(0), *levels]  # d[0] = 0
    bonus1 = [K + delta - d[j] for j in range(k + 1)] + [Fraction(0)]
    bonus2 = [Fraction(0)] + [K + delta - d[k - j + 1] for j in range(1, k + 2)]
    return _build(inst, "sum", k + 2, bonus1, bonus2,
                  rank1=[k + 1 - j for j in range(k + 2)], rank2=list(range(k + 2)),
                  K=K, d_levels=levels)


def extend_max(inst: Instance) -> ExtendedInstance:
    K, delta = big_k(inst), inst.delta
    zero = Fraction(0)
    # m1 ties: higher copy wins except x_0 beats x_1 -> 3, 2, 0, 1
    # m2 ties: lower copy wins except x_3 beats x_2 -> 0, 1, 3, 2
    return _build(inst, "max", 4,
                  bonus1=(K + delta, K + delta, K, zero),
                  bonus2=(zero, K, K + delta, K + delta),
                  rank1=(2, 3, 1, 0), rank2=(0, 1, 3, 2), K=K)


def extend(inst: Instance, notion: str) -> ExtendedInstance:
    try:
        builder = {"min": extend_min, "sum": extend_sum, "max": extend_max}[notion]
    except KeyError:
        raise InputError(f"unknown notion {notion!r}; expected one of {NOTIONS}") from None
    return builder(inst)


def project(ext: ExtendedInstance, astar: AbstractSet[int]) -> frozenset[int]:
    origins = [ext.elements[e].origin for e in astar]
    if len(set(origins)) != len(origins):
        raise ContractViolation("extended set holds two copies of one origin")
    return frozenset(origins)
