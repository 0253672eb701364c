"""Near-stability checks, the approximation pipeline and exact brute-force oracles."""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Iterator

from .extend import NOTIONS, Instance, extend, project
from .kernel import (
    BlockingCertificate,
    FleinerTrace,
    OrderedPair,
    WeakPair,
    common_independent,
    exchange_candidates,
    fleiner_kernel,
)
from .matroid import CountingMatroid, InputError, InvariantViolation

STABILITY_NOTIONS = NOTIONS + ("kernel",)
BRUTE_CAP_ENV = "TIEKERNEL_BRUTE_CAP"
DEFAULT_BRUTE_CAP = 20
HARD_BRUTE_CAP = 24
RATIO_BOUND = Fraction(3, 2)


class TheoremViolation(InvariantViolation):
    """An instance on which the 3/2 bound fails; carries the instance for triage."""


@dataclass(frozen=True)
class SolveReport:
    solution: frozenset[int]
    size: int
    oracle_calls: int
    extended_size: int
    iterations: int
    certificate: BlockingCertificate | None = None


def weak_pair(inst: Instance) -> WeakPair:
    return WeakPair(inst.m1, inst.m2, inst.p1, inst.p2)


def blocks(notion: str, cert: BlockingCertificate, delta: Fraction) -> bool:
    """Whether the best-improvement certificate witnesses blocking under ``notion``.

    Improvement is ``p(y)`` when ``X + y`` stays independent (``p(none) = 0``).
    For sum/max only exchanges need strict improvement; additions need none.
    """
    g1, g2 = cert.improvements
    positive = (cert.v1 is None or g1 > 0) and (cert.v2 is None or g2 > 0)
    if notion == "kernel":
        return positive
    if notion == "min":
        return min(g1, g2) >= delta
    if notion == "sum":
        return positive and g1 + g2 >= delta
    if notion == "max":
        return positive and max(g1, g2) >= delta
    raise InputError(f"unknown notion {notion!r}; expected one of {STABILITY_NOTIONS}")


def iter_delta_blockers(inst: Instance, notion: str, x: AbstractSet[int]) -> Iterator[BlockingCertificate]:
    if notion not in STABILITY_NOTIONS:
        raise InputError(f"unknown notion {notion!r}; expected one of {STABILITY_NOTIONS}")
    for cert in exchange_candidates(weak_pair(inst), frozenset(x)):
        if blocks(notion, cert, inst.delta):
            yield cert


def find_delta_blocker(inst: Instance, notion: str, x: AbstractSet[int]) -> BlockingCertificate | None:
    return next(iter_delta_blockers(inst, notion, x), None)


def is_stable(inst: Instance, notion: str, x: AbstractSet[int]) -> bool:
    return common_independent(weak_pair(inst), x) and find_delta_blocker(inst, notion, x) is None


def approx_solve(inst: Instance, notion: str) -> SolveReport:
    """Extend, run Fleiner on the strict extension, project, then self-verify."""
    ext = extend(inst, notion)
    m1, m2 = CountingMatroid(ext.pair.m1), CountingMatroid(ext.pair.m2)
    counted = OrderedPair(m1, m2, ext.pair.order1, ext.pair.order2)
    trace = FleinerTrace()
    astar = fleiner_kernel(counted, trace)
    solution = project(ext, astar)
    calls = m1.calls + m2.calls
    cert = find_delta_blocker(inst, notion, solution)
    if cert is not None:
        raise InvariantViolation(f"approx_solve output is not {notion}-stable",
                                 payload={"instance": inst, "solution": sorted(solution), "certificate": cert})
    return SolveReport(solution, len(solution), calls, ext.n, trace.iterations)


def brute_cap() -> int:
    raw = os.environ.get(BRUTE_CAP_ENV)
    if raw is None:
        return DEFAULT_BRUTE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{BRUTE_CAP_ENV} must be an integer, got {raw!r}") from None
    if not 0 <= cap <= HARD_BRUTE_CAP:
        raise InputError(f"{BRUTE_CAP_ENV} must lie in 0..{HARD_BRUTE_CAP}")
    return cap


def common_independent_sets(inst: Instance) -> list[frozenset[int]]:
    """All common independent sets, grown from smaller ones (downward closure prunes)."""
    if inst.n > brute_cap():
        raise InputError(f"brute force refused: n={inst.n} exceeds cap {brute_cap()}")
    level = [frozenset()]
    found = list(level)
    while level:
        nxt = set()
        for s in level:
            for e in range(max(s, default=-1) + 1, inst.n):
                t = s | {e}
                if inst.m1.independent(t) and inst.m2.independent(t):
                    nxt.add(t)
        level = sorted(nxt, key=sorted)
        found.extend(level)
    return found


def brute_force_max_stable(inst: Instance, notion: str) -> frozenset[int]:
    candidates = common_independent_sets(inst)
    for s in sorted(candidates, key=lambda s: (-len(s), sorted(s))):
        if find_delta_blocker(inst, notion, s) is None:
            return s
    raise InvariantViolation(f"no {notion}-stable common independent set found", payload=inst)


def all_stable_sets(inst: Instance, notion: str) -> list[frozenset[int]]:
    return [s for s in common_independent_sets(inst) if find_delta_blocker(inst, notion, s) is None]


def ratio_check(inst: Instance, notion: str) -> Fraction:
    """Exact ratio of the brute-force optimum to the approximate solution size."""
    if notion not in NOTIONS:
        raise InputError(f"ratio_check needs one of {NOTIONS}, got {notion!r}")
    best = len(brute_force_max_stable(inst, notion))
    got = approx_solve(inst, notion).size
    if got == 0:
        if best == 0:
            return Fraction(1)
        raise TheoremViolation("approximate solution is empty while the optimum is not",
                               payload={"instance": inst, "notion": notion, "optimum": best})
    ratio = Fraction(best, got)
    if ratio > RATIO_BOUND:
        raise TheoremViolation(f"ratio {ratio} exceeds 3/2",
                               payload={"instance": inst, "notion": notion, "optimum": best, "approx": got})
    return ratio


def max_common_independent_size(inst: Instance) -> int:
    """Matroid-intersection optimum by plain subset enumeration (no pruning shared with the solver)."""
    for r in range(inst.n, 0, -1):
        for combo in itertools.combinations(range(inst.n), r):
            s = frozenset(combo)
            if inst.m1.independent(s) and inst.m2.independent(s):
                return r
    return 0
