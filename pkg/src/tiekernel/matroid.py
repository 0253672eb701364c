"""Matroids given by declarative specs, queried through an independence oracle.

Every family implements ``independent(members)`` on a ``frozenset`` of element
ids; rank, circuits and closure are derived from that predicate alone.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import AbstractSet, Iterable, Iterator, Protocol, Sequence


class InputError(ValueError):
    """Malformed user input (bad ids, invalid specs, unsupported options)."""


class ContractViolation(ValueError):
    """A documented precondition of an operation does not hold."""


class InvariantViolation(RuntimeError):
    """Something a theorem guarantees did not happen; the payload aids triage."""

    def __init__(self, message: str, payload: object = None):
        super().__init__(message)
        self.payload = payload


class Matroid(Protocol):
    n: int

    def independent(self, members: frozenset[int]) -> bool: ...


class _DisjointSets:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


@dataclass(frozen=True)
class Uniform:
    n: int
    rank: int

    def __post_init__(self):
        if self.n < 0 or self.rank < 0:
            raise InputError("uniform matroid needs n >= 0 and rank >= 0")

    def independent(self, members: frozenset[int]) -> bool:
        return len(members) <= self.rank


@dataclass(frozen=True)
class Partition:
    classes: tuple[frozenset[int], ...]
    capacities: tuple[int, ...]
    _class_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.classes)
        capacities = tuple(int(c) for c in self.capacities)
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "capacities", capacities)
        if len(classes) != len(capacities):
            raise InputError("partition needs one capacity per class")
        if any(c < 0 for c in capacities):
            raise InputError("partition capacities must be nonnegative")
        n = sum(len(c) for c in classes)
        class_of = [-1] * n
        for idx, cls in enumerate(classes):
            for e in cls:
                if not 0 <= e < n or class_of[e] != -1:
                    raise InputError("partition classes must be disjoint and cover 0..n-1")
                class_of[e] = idx
        object.__setattr__(self, "_class_of", tuple(class_of))

    @property
    def n(self) -> int:
        return len(self._class_of)

    def independent(self, members: frozenset[int]) -> bool:
        counts = [0] * len(self.classes)
        for e in members:
            c = self._class_of[e]
            counts[c] += 1
            if counts[c] > self.capacities[c]:
                return False
        return True


@dataclass(frozen=True)
class Graphic:
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))

    @property
    def n(self) -> int:
        return len(self.edges)

    def independent(self, members: frozenset[int]) -> bool:
        dsu = _DisjointSets()
        for e in members:
            a, b = self.edges[e]
            if not dsu.union(a, b):
                return False
        return True


@dataclass(frozen=True)
class Laminar:
    n: int
    family: tuple[frozenset[int], ...]
    capacities: tuple[int, ...]

    def __post_init__(self):
        family = tuple(frozenset(s) for s in self.family)
        capacities = tuple(int(c) for c in self.capacities)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "capacities", capacities)
        if len(family) != len(capacities):
            raise InputError("laminar needs one capacity per set")
        if any(c < 0 for c in capacities):
            raise InputError("laminar capacities must be nonnegative")
        for s in family:
            if any(not 0 <= e < self.n for e in s):
                raise InputError("laminar set has an element outside 0..n-1")
        for s, t in itertools.combinations(family, 2):
            if s & t and not (s <= t or t <= s):
                raise InputError("family is not laminar")

    def independent(self, members: frozenset[int]) -> bool:
        return all(len(members & s) <= c for s, c in zip(self.family, self.capacities))


@dataclass(frozen=True)
class Explicit:
    n: int
    independent_sets: frozenset[frozenset[int]]

    def __post_init__(self):
        sets = frozenset(frozenset(s) for s in self.independent_sets)
        object.__setattr__(self, "independent_sets", sets)
        for s in sets:
            if any(not 0 <= e < self.n for e in s):
                raise InputError("explicit family has an element outside 0..n-1")

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[Iterable[int]]) -> "Explicit":
        family: set[frozenset[int]] = set()
        for b in bases:
            b = tuple(b)
            for r in range(len(b) + 1):
                family.update(frozenset(c) for c in itertools.combinations(b, r))
        return cls(n, frozenset(family))

    def independent(self, members: frozenset[int]) -> bool:
        return members in self.independent_sets

    def bases(self) -> list[frozenset[int]]:
        r = max((len(s) for s in self.independent_sets), default=0)
        return sorted((s for s in self.independent_sets if len(s) == r), key=sorted)


MatroidSpec = Uniform | Partition | Graphic | Laminar | Explicit


class CountingMatroid:
    """Wraps an oracle and counts how often it is consulted."""

    def __init__(self, inner: Matroid):
        self.inner = inner
        self.n = inner.n
        self.calls = 0

    def independent(self, members: frozenset[int]) -> bool:
        self.calls += 1
        return self.inner.independent(members)


def _checked(m: Matroid, x: AbstractSet[int]) -> frozenset[int]:
    x = frozenset(x)
    for e in x:
        if not (isinstance(e, int) and 0 <= e < m.n):
            raise InputError(f"element id {e!r} out of range for ground set of size {m.n}")
    return x


def is_independent(m: Matroid, x: AbstractSet[int]) -> bool:
    return m.independent(_checked(m, x))


def rank_of(m: Matroid, x: AbstractSet[int]) -> int:
    """Size of a greedily grown maximal independent subset of ``x``."""
    return len(greedy_independent(m, sorted(_checked(m, x))))


def greedy_independent(m: Matroid, scan: Iterable[int],
                       start: frozenset[int] = frozenset()) -> frozenset[int]:
    current = start
    for e in scan:
        if e in current:
            continue
        candidate = current | {e}
        if m.independent(candidate):
            current = candidate
    return current


def fundamental_circuit(m: Matroid, indep: AbstractSet[int], x: int) -> frozenset[int] | None:
    """The unique circuit in ``indep + x``, or ``None`` if ``indep + x`` is independent."""
    indep = _checked(m, indep)
    _checked(m, {x})
    if x in indep:
        raise ContractViolation(f"element {x} already belongs to the independent set")
    if not m.independent(indep):
        raise ContractViolation("fundamental_circuit needs an independent set")
    extended = indep | {x}
    if m.independent(extended):
        return None
    return frozenset({x} | {y for y in indep if m.independent(extended - {y})})


def closure(m: Matroid, x: AbstractSet[int]) -> frozenset[int]:
    x = _checked(m, x)
    r = rank_of(m, x)
    return frozenset(e for e in range(m.n) if e in x or rank_of(m, x | {e}) == r)


def is_circuit(m: Matroid, c: AbstractSet[int]) -> bool:
    c = _checked(m, c)
    if not c or m.independent(c):
        return False
    return all(m.independent(c - {e}) for e in c)


def iter_subsets(n: int) -> Iterator[frozenset[int]]:
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            yield frozenset(combo)


def circuits(m: Matroid, max_n: int = 16) -> list[frozenset[int]]:
    """All circuits by exhaustive subset scan."""
    if m.n > max_n:
        raise InputError(f"circuit enumeration refused for ground set of size {m.n} > {max_n}")
    return [c for c in iter_subsets(m.n) if is_circuit(m, c)]


def bases(m: Matroid) -> list[frozenset[int]]:
    """All bases; exponential, for small ground sets only."""
    r = rank_of(m, range(m.n))
    return [frozenset(c) for c in itertools.combinations(range(m.n), r)
            if m.independent(frozenset(c))]


MAX_AXIOM_CHECK = 16


def verify_matroid_axioms(family: Explicit) -> bool:
    if family.n > MAX_AXIOM_CHECK:
        raise InputError(f"axiom check refused: ground set of size {family.n} exceeds {MAX_AXIOM_CHECK}")
    sets = family.independent_sets
    if not sets:
        return False
    for s in sets:
        if any(s - {e} not in sets for e in s):
            return False
    for a in sets:
        for b in sets:
            if len(a) < len(b) and not any(a | {v} in sets for v in b - a):
                return False
    return True


def _is_basis_family(n: int, bases_: Sequence[frozenset[int]]) -> bool:
    family = set(bases_)
    for b1 in bases_:
        for b2 in bases_:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in family for y in b2 - b1):
                    return False
    return True


def _canonical(n: int, bases_: Iterable[frozenset[int]]) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted(perm[e] for e in b)) for b in bases_))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def _matroid_classes(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # Isomorphism classes as base families, grown by single-element extension:
    # M on n elements is either M\e plus a coloop, or has the bases of M\e plus
    # {B'+e} for some family of independent (r-1)-subsets B' of M\e.
    if n == 0:
        return (((),),)
    found: dict[tuple, tuple] = {}
    for cls in _matroid_classes(n - 1):
        old = [frozenset(b) for b in cls]
        candidates = [[b | {n - 1} for b in old]]
        r = len(old[0])
        if r > 0:
            smaller = sorted({frozenset(c) for b in old for c in itertools.combinations(sorted(b), r - 1)}, key=sorted)
            for mask in range(1 << len(smaller)):
                candidates.append(old + [smaller[i] | {n - 1} for i in range(len(smaller)) if mask >> i & 1])
        else:
            candidates.append(old)
        for cand in candidates:
            if _is_basis_family(n, cand):
                key = _canonical(n, cand)
                found.setdefault(key, key)
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def _labeled_base_families(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    labeled = set()
    for cls in _matroid_classes(n):
        for perm in itertools.permutations(range(n)):
            labeled.add(tuple(sorted(tuple(sorted(perm[e] for e in b)) for b in cls)))
    return tuple(sorted(labeled))


def all_matroids(n: int, labeled: bool = True) -> list[Explicit]:
    """Every matroid on ``range(n)`` (``n <= 6``), labeled or up to isomorphism."""
    if n > 6:
        raise InputError("matroid enumeration is limited to n <= 6")
    families = _labeled_base_families(n) if labeled else _matroid_classes(n)
    return [Explicit.from_bases(n, fam) for fam in families]
