"""Seeded random instances.

Values come from a small grid so that ties are common. Families:

* ``partition``: 1..ceil(n/2) classes, capacities 1..2,
* ``uniform``: rank uniform in 0..n,
* ``graphic``: multigraph (parallel edges allowed, no loops) on 2..n/2+2 vertices,
* ``laminar``: recursive random splits of a shuffled ground set, capacities 1..|set|,
* ``explicit``: a uniformly drawn labeled matroid, n <= 6 only.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .extend import Instance
from .matroid import Explicit, Graphic, InputError, Laminar, Partition, Uniform, all_matroids

FAMILIES = ("partition", "uniform", "graphic", "laminar", "explicit")
RANDOM_FAMILIES = ("partition", "uniform", "graphic", "laminar")
MAX_GEN_N = 64


def _random_partition(rng: random.Random, n: int) -> Partition:
    k = rng.randint(1, max(1, (n + 1) // 2))
    classes: list[set[int]] = [set() for _ in range(k)]
    for e in range(n):
        classes[rng.randrange(k)].add(e)
    return Partition(tuple(map(frozenset, classes)), tuple(rng.randint(1, 2) for _ in range(k)))


def _random_graphic(rng: random.Random, n: int) -> Graphic:
    vertices = rng.randint(2, n // 2 + 2)
    return Graphic(tuple(tuple(rng.sample(range(vertices), 2)) for _ in range(n)))


def _random_laminar(rng: random.Random, n: int) -> Laminar:
    perm = list(range(n))
    rng.shuffle(perm)
    family: list[frozenset[int]] = []

    def split(lo: int, hi: int) -> None:
        family.append(frozenset(perm[lo:hi]))
        if hi - lo < 2 or rng.random() < 0.3:
            return
        cuts = sorted(rng.sample(range(lo + 1, hi), rng.randint(1, min(2, hi - lo - 1))))
        for a, b in zip([lo, *cuts], [*cuts, hi]):
            if rng.random() < 0.7:
                split(a, b)

    if n:
        split(0, n)
    return Laminar(n, tuple(family), tuple(rng.randint(1, len(s)) for s in family))


def random_matroid(rng: random.Random, family: str, n: int):
    if family == "partition":
        return _random_partition(rng, n) if n else Partition((), ())
    if family == "uniform":
        return Uniform(n, rng.randint(0, n))
    if family == "graphic":
        return _random_graphic(rng, n)
    if family == "laminar":
        return _random_laminar(rng, n)
    if family == "explicit":
        if n > 6:
            raise InputError("explicit family generation is limited to n <= 6")
        return rng.choice(all_matroids(n))
    raise InputError(f"unsupported family {family!r}; expected one of {FAMILIES}")


def gen_random(seed: int, n: int, family1: str, family2: str,
               value_levels: Sequence[Fraction | int] = (0, 1, 2, 3, 4),
               delta: Fraction | int = 1) -> Instance:
    if not 0 <= n <= MAX_GEN_N:
        raise InputError(f"n must lie in 0..{MAX_GEN_N}")
    levels = [Fraction(v) for v in value_levels]
    if not levels:
        raise InputError("value_levels must be nonempty")
    rng = random.Random(seed)
    m1 = random_matroid(rng, family1, n)
    m2 = random_matroid(rng, family2, n)
    p1 = tuple(rng.choice(levels) for _ in range(n))
    p2 = tuple(rng.choice(levels) for _ in range(n))
    return Instance(n, m1, m2, p1, p2, Fraction(delta))


def gen_random_smti(seed: int, men: int, women: int, edge_prob: float = 0.5,
                    value_levels: Sequence[Fraction | int] = (1, 2), max_edges: int | None = None):
    """Random SMTI graph; few value levels so ties dominate."""
    from .smti import SmtiInstance

    rng = random.Random(seed)
    edges = [(m, w) for m in range(men) for w in range(women) if rng.random() < edge_prob]
    if max_edges is not None and len(edges) > max_edges:
        edges = sorted(rng.sample(edges, max_edges))
    levels = [Fraction(v) for v in value_levels]
    return SmtiInstance(men, women, tuple(edges),
                        tuple(rng.choice(levels) for _ in edges),
                        tuple(rng.choice(levels) for _ in edges))
