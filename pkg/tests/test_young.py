from math import factorial

import pytest
from hypothesis import given, strategies as st

import oracles
from easytraces.young import (
    EMPTY,
    cycle_type,
    cycles,
    dim_young,
    enumerate_level,
    make_diagram,
    predecessors,
    successors,
)


def D(*parts):
    return make_diagram(parts)


def test_make_diagram_basics():
    assert make_diagram([]) == EMPTY and EMPTY.size == 0 and str(EMPTY) == "∅"
    lam = make_diagram([2, 1])
    assert lam.size == 3 and str(lam) == "(2,1)"


@pytest.mark.parametrize("bad", [[1, 2], [0], [2, -1], [1.5]])
def test_make_diagram_rejects(bad):
    with pytest.raises(ValueError):
        make_diagram(bad)


def test_successors_examples():
    assert successors(EMPTY) == [D(1)]
    assert successors(D(1)) == [D(2), D(1, 1)]
    assert successors(D(2, 1)) == [D(3, 1), D(2, 2), D(2, 1, 1)]


def test_predecessors_examples():
    assert predecessors(EMPTY) == []
    assert predecessors(D(1)) == [EMPTY]
    assert predecessors(D(2, 1)) == [D(1, 1), D(2)]


def test_dim_examples():
    assert dim_young(EMPTY) == 1
    assert dim_young(D(2, 1)) == 2
    assert sum(dim_young(l) ** 2 for l in enumerate_level(5)) == 120


def test_enumerate_level_examples():
    assert enumerate_level(0) == [EMPTY]
    assert enumerate_level(4) == [D(4), D(3, 1), D(2, 2), D(2, 1, 1), D(1, 1, 1, 1)]
    assert len(enumerate_level(10)) == 42


@pytest.mark.parametrize("n", range(13))
def test_level_sizes_match_partition_count(n):
    assert len(enumerate_level(n)) == oracles.partition_count(n)
    assert [tuple(l) for l in enumerate_level(n)] == oracles.all_partitions(n)


@pytest.mark.parametrize("n", range(9))
def test_dimension_three_ways(n):
    for lam in enumerate_level(n):
        assert dim_young(lam, "hook") == dim_young(lam, "dp") == oracles.syt(tuple(lam))


@pytest.mark.parametrize("n", range(9))
def test_plancherel_identity(n):
    assert sum(dim_young(l) ** 2 for l in enumerate_level(n)) == factorial(n)


@pytest.mark.parametrize("n", range(9))
def test_successor_predecessor_duality(n):
    for lam in enumerate_level(n):
        for mu in successors(lam):
            assert lam in predecessors(mu)
        for eta in predecessors(lam):
            assert lam in successors(eta)
        assert len(successors(lam)) == len(set(lam)) + 1
        assert sum(dim_young(e) for e in predecessors(lam)) == dim_young(lam) or n == 0
        assert sum(dim_young(m) for m in successors(lam)) == (n + 1) * dim_young(lam)


def test_successors_match_oracle():
    for n in range(7):
        for lam in enumerate_level(n):
            assert sorted(tuple(m) for m in successors(lam)) == sorted(oracles.add_box(tuple(lam)))
            assert sorted(tuple(m) for m in predecessors(lam)) == sorted(oracles.remove_box(tuple(lam)))


def test_cycle_type_examples():
    assert cycle_type([1, 2, 3]) == D(1, 1, 1)
    assert cycle_type([2, 1, 3]) == D(2, 1)
    assert cycle_type([2, 3, 1, 5, 4]) == D(3, 2)


@pytest.mark.parametrize("bad", [[1, 1], [0, 1], [2, 3]])
def test_cycle_type_rejects_non_bijection(bad):
    with pytest.raises(ValueError):
        cycle_type(bad)


@given(st.permutations(list(range(1, 8))))
def test_cycle_type_properties(sigma):
    ct = cycle_type(sigma)
    assert ct.size == len(sigma)
    assert list(ct) == oracles.cycle_lengths(tuple(sigma))
    assert sorted(x for c in cycles(sigma) for x in c) == list(range(1, 8))
