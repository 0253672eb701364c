import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import instances
from tiekernel.extend import (
    NOTIONS,
    ExtendedMatroid,
    Instance,
    big_k,
    compute_d_levels,
    extend,
    extend_min,
    project,
)
from tiekernel.kernel import common_independent, fleiner_kernel
from tiekernel.matroid import ContractViolation, InputError, Uniform

F = Fraction


def two_element(p1, p2, delta):
    return Instance(2, Uniform(2, 1), Uniform(2, 1), p1, p2, delta)


def test_min_extension_values():
    inst = two_element((2, 1), (5, 0), 1)
    ext = extend_min(inst)
    assert ext.K == big_k(inst) == 6
    x_u, y_u, z_u = (ext.element_id(0, j) for j in range(3))
    x_v, y_v, z_v = (ext.element_id(1, j) for j in range(3))
    assert [ext.values1[e] for e in (x_u, y_u, z_u, x_v, y_v, z_v)] == [9, 8, 2, 8, 7, 1]
    # value tie between y_u and x_v goes to the y copy in the first order
    assert ext.pair.order1.better(y_u, x_v)
    assert ext.label(y_u) == "y(0)"


def test_d_levels_example():
    inst = two_element((0, 1), (0, 0), 2)
    assert compute_d_levels(inst) == [F(1)]


def brute_d_levels(inst):
    out = set()
    for p in (inst.p1, inst.p2):
        vals = list(p) + [F(0)]
        for a, b in itertools.product(vals, repeat=2):
            for d in (a - b, inst.delta - (a - b)):
                if 0 < d < inst.delta:
                    out.add(d)
    return sorted(out)


@settings(max_examples=150, deadline=None)
@given(instances())
def test_d_levels_symmetric_and_exhaustive(inst):
    levels = compute_d_levels(inst)
    assert levels == brute_d_levels(inst)
    assert all(inst.delta - d in levels for d in levels)


@settings(max_examples=150, deadline=None)
@given(instances())
def test_extension_invariants(inst):
    for notion in NOTIONS:
        ext = extend(inst, notion)
        assert ext.n == inst.n * ext.copies
        assert extend(inst, notion) == ext
        for order, values in ((ext.pair.order1, ext.values1), (ext.pair.order2, ext.values2)):
            seq = order.sequence()
            assert sorted(seq) == list(range(ext.n))
            assert all(values[a] >= values[b] for a, b in zip(seq, seq[1:]))
        kernel = fleiner_kernel(ext.pair)
        assert common_independent(inst_pair(inst), project(ext, kernel))


def inst_pair(inst):
    from tiekernel.stability import weak_pair

    return weak_pair(inst)


def test_copy_cap():
    m = ExtendedMatroid(Uniform(2, 2), 3)
    assert m.independent(frozenset({0, 3}))
    assert not m.independent(frozenset({0, 1}))


def test_project_rejects_duplicate_origins():
    ext = extend_min(two_element((1, 1), (1, 1), 1))
    with pytest.raises(ContractViolation):
        project(ext, {0, 1})
    assert project(ext, {1, 5}) == {0, 1}


def test_unknown_notion():
    with pytest.raises(InputError):
        extend(two_element((1, 1), (1, 1), 1), "median")


def test_instance_validation():
    with pytest.raises(InputError):
        two_element((1, -1), (1, 1), 1)
    with pytest.raises(InputError):
        two_element((1, 1), (1, 1), 0)
    with pytest.raises(InputError):
        Instance(2, Uniform(2, 1), Uniform(3, 1), (1, 1), (1, 1), 1)
