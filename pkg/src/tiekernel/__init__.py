"""Near-stable common independent sets of weakly ordered matroids.

Deferred acceptance on parallel-copy extensions gives a 3/2-approximation for
the maximum-size Delta-min/sum/max-stable set; brute-force oracles certify it
on small instances.
"""
from .extend import (
    ExtendedInstance,
    Instance,
    compute_d_levels,
    extend,
    extend_max,
    extend_min,
    extend_sum,
    project,
)
from .kernel import BlockingCertificate, OrderedPair, WeakPair, find_kernel_blocker, fleiner_kernel
from .matroid import (
    ContractViolation,
    Explicit,
    Graphic,
    InputError,
    InvariantViolation,
    Laminar,
    Partition,
    Uniform,
    fundamental_circuit,
    is_independent,
    rank_of,
    verify_matroid_axioms,
)
from .ordered import (
    ExchangeMatching,
    StrictOrder,
    check_worst_circuit_element,
    exchange_graph,
    optimal_base,
    perfect_exchange_matching,
)
from .stability import (
    SolveReport,
    TheoremViolation,
    approx_solve,
    brute_force_max_stable,
    find_delta_blocker,
    ratio_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
