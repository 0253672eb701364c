"""Stable marriage with ties as a pair of partition matroids."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet

from .extend import Instance
from .matroid import InputError, Partition


@dataclass(frozen=True)
class SmtiInstance:
    """Bipartite graph with cardinal values; ``man_values[e]`` is how edge ``e``'s man rates it.

    Equal values at a vertex are ties.
    """

    men: int
    women: int
    edges: tuple[tuple[int, int], ...]
    man_values: tuple[Fraction, ...]
    woman_values: tuple[Fraction, ...]

    def __post_init__(self):
        edges = tuple((int(m), int(w)) for m, w in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "man_values", tuple(Fraction(v) for v in self.man_values))
        object.__setattr__(self, "woman_values", tuple(Fraction(v) for v in self.woman_values))
        if self.men < 0 or self.women < 0:
            raise InputError("vertex counts must be nonnegative")
        if len(set(edges)) != len(edges):
            raise InputError("SMTI graph must be simple (duplicate edge)")
        for m, w in edges:
            if not (0 <= m < self.men and 0 <= w < self.women):
                raise InputError(f"edge ({m}, {w}) has an endpoint out of range")
        if len(self.man_values) != len(edges) or len(self.woman_values) != len(edges):
            raise InputError("every edge needs a value on both sides")
        if any(v < 0 for v in self.man_values + self.woman_values):
            raise InputError("preference values must be nonnegative")


def _incidence(count: int, ends: list[int]) -> tuple[tuple[frozenset[int], ...], tuple[int, ...]]:
    # isolated vertices give empty classes, which are harmless
    classes = [set() for _ in range(count)]
    for e, v in enumerate(ends):
        classes[v].add(e)
    return tuple(frozenset(c) for c in classes), (1,) * count


def smti_to_instance(smti: SmtiInstance, delta: Fraction | int = 1) -> Instance:
    n = len(smti.edges)
    m1 = Partition(*_incidence(smti.men, [m for m, _ in smti.edges]))
    m2 = Partition(*_incidence(smti.women, [w for _, w in smti.edges]))
    return Instance(n, m1, m2, smti.man_values, smti.woman_values, Fraction(delta))


def is_matching(smti: SmtiInstance, chosen: AbstractSet[int]) -> bool:
    men = [smti.edges[e][0] for e in chosen]
    women = [smti.edges[e][1] for e in chosen]
    return len(set(men)) == len(men) and len(set(women)) == len(women)


def smti_blocking_edges(smti: SmtiInstance, matching: AbstractSet[int]) -> list[int]:
    """Edges ``uw`` outside the matching that both ends strictly prefer (or that find them free)."""
    partner_of_man = {smti.edges[e][0]: e for e in matching}
    partner_of_woman = {smti.edges[e][1]: e for e in matching}
    out = []
    for e, (m, w) in enumerate(smti.edges):
        if e in matching:
            continue
        man_ok = m not in partner_of_man or smti.man_values[e] > smti.man_values[partner_of_man[m]]
        woman_ok = w not in partner_of_woman or smti.woman_values[e] > smti.woman_values[partner_of_woman[w]]
        if man_ok and woman_ok:
            out.append(e)
    return out


def gen_tight_family(k: int) -> SmtiInstance:
    """``k`` disjoint copies of the gadget u1-w1, u2-w1, u2-w2 with every value tied at 1.

    Copy ``j`` has edges ``3j`` (u1w1), ``3j+1`` (u2w1), ``3j+2`` (u2w2).
    """
    if k < 1:
        raise InputError("gen_tight_family needs k >= 1")
    edges = []
    for j in range(k):
        u1, u2, w1, w2 = 2 * j, 2 * j + 1, 2 * j, 2 * j + 1
        edges += [(u1, w1), (u2, w1), (u2, w2)]
    ones = (Fraction(1),) * (3 * k)
    return SmtiInstance(2 * k, 2 * k, tuple(edges), ones, ones)
