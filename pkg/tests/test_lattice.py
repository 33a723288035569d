from collections import Counter

import pytest

from conftest import CORPUS, gens, grp
from sigmafact.config import limits
from sigmafact.errors import GroupError, NotNormalError, ThresholdExceeded
from sigmafact.group import build_group, is_normal, is_subgroup
from sigmafact.lattice import (
    ChiefFactor, centralizer_of_chief_factor, chief_series, enumerate_subgroups,
    minimal_normal_subgroups, normal_subgroups, quotient,
)
from sigmafact.oracles import subgroups_by_pairwise_closure

LATTICE_GROUPS = [e.name for e in CORPUS]
V4_IN_S4 = "(1 2)(3 4); (1 3)(2 4)"


def orders(groups):
    return sorted(H.order for H in groups)


@pytest.mark.parametrize("name, count", [("C6", 4), ("S4", 30), ("A4", 10), ("D8", 10),
                                         ("Q8", 6), ("S3", 6), ("V4", 5)])
def test_counts_against_pairwise_closure(name, count):
    G = grp(name)
    lat = enumerate_subgroups(G)
    oracle = subgroups_by_pairwise_closure(G)
    assert len(lat) == len(oracle) == count
    assert {H.element_set for H in lat.subgroups} == oracle


@pytest.mark.parametrize("name, count", [("A5", 59), ("S5", 156), ("PSL(2,7)", 179),
                                         ("SL(2,3)", 15), ("GL(2,3)", 55)])
def test_larger_lattice_counts(name, count):
    # frozen from the pairwise-closure oracle
    assert len(enumerate_subgroups(grp(name))) == count


@pytest.mark.parametrize("name", LATTICE_GROUPS)
def test_lattice_invariants(name):
    G = grp(name)
    lat = enumerate_subgroups(G)
    assert sum(len(c) for c in lat.conjugacy_classes) == len(lat)
    for H in lat.subgroups:
        assert G.order % H.order == 0
    keys = [(H.order, tuple(sorted(H.elements))) for H in lat.subgroups]
    assert len(set(keys)) == len(keys)


def test_threshold():
    limits.lattice = 100
    with pytest.raises(ThresholdExceeded) as info:
        enumerate_subgroups(gens("(1 2); (1 2 3 4 5)"))
    assert info.value.bound == 100


def test_normal_subgroups():
    assert orders(normal_subgroups(grp("A5"))) == [1, 60]
    assert orders(normal_subgroups(grp("S4"))) == [1, 4, 12, 24]
    assert len(normal_subgroups(grp("V4"))) == 5
    assert orders(normal_subgroups(grp("PSL(2,7)"))) == [1, 168]


@pytest.mark.parametrize("name", LATTICE_GROUPS)
def test_normal_subgroups_filter_oracle(name):
    G = grp(name)
    flagged = {H.element_set for H in normal_subgroups(G)}
    oracle = {H.element_set for H in enumerate_subgroups(G).subgroups if is_normal(G, H)}
    assert flagged == oracle


def test_minimal_normal_subgroups():
    assert orders(minimal_normal_subgroups(grp("A5"))) == [60]
    assert [H.element_set for H in minimal_normal_subgroups(grp("S4"))] == [gens(V4_IN_S4).element_set]
    assert orders(minimal_normal_subgroups(grp("V4"))) == [2, 2, 2]
    with pytest.raises(GroupError):
        minimal_normal_subgroups(build_group([], 3))


def test_chief_series_examples():
    A5 = grp("A5")
    (f,) = chief_series(A5)
    assert f.below.order == 1 and f.above == A5 and f.factor_order == 60
    assert [f.factor_order for f in chief_series(grp("S4"))] == [4, 3, 2]
    assert [f.factor_order for f in chief_series(grp("C6"))] == [2, 3]
    assert [f.factor_order for f in chief_series(grp("C6"), "largest")] == [3, 2]


@pytest.mark.parametrize("name", LATTICE_GROUPS)
def test_chief_series_betweenness_and_jordan_holder(name):
    G = grp(name)
    normals = normal_subgroups(G)
    series = chief_series(G)
    for f in series:
        assert is_normal(G, f.below) and is_normal(G, f.above)
        assert is_subgroup(f.above, f.below) and f.below.order < f.above.order
        between = [N for N in normals
                   if f.below.order < N.order < f.above.order
                   and is_subgroup(N, f.below) and is_subgroup(f.above, N)]
        assert not between
    assert series[0].below.order == 1 and series[-1].above.order == G.order
    rev = chief_series(G, "largest")
    assert Counter(f.factor_order for f in series) == Counter(f.factor_order for f in rev)


@pytest.mark.parametrize("name", LATTICE_GROUPS)
def test_chief_factor_centralizer(name):
    G = grp(name)
    for f in chief_series(G) + chief_series(G, "largest"):
        C = centralizer_of_chief_factor(G, f)
        assert is_subgroup(C, f.below)
        assert is_normal(G, C)
        # element filter oracle: [g, h] in K for every h in H
        K = f.below.element_set
        oracle = {g for g in G.elements
                  if all(g.inverse() * h.inverse() * g * h in K for h in f.above.generators)}
        assert C.element_set == oracle


def test_chief_factor_centralizer_examples():
    S4, A4 = grp("S4"), grp("A4")
    V4 = gens(V4_IN_S4)
    triv = build_group([], 4)
    assert centralizer_of_chief_factor(S4, ChiefFactor(triv, V4)) == V4
    assert centralizer_of_chief_factor(A4, ChiefFactor(triv, V4)) == V4
    C = grp("C12")
    assert centralizer_of_chief_factor(C, ChiefFactor(build_group([], 12), C)) == C


def test_quotients():
    S4 = grp("S4")
    assert quotient(S4, S4).order == 1
    Q = quotient(S4, gens(V4_IN_S4))
    assert Q.order == 6
    assert sorted(g.order() for g in Q.elements) == [1, 2, 2, 2, 3, 3]
    C6 = grp("C6")
    C2 = build_group([C6.generators[0] ** 3])
    Q = quotient(C6, C2)
    assert Q.order == 3 and Q.is_abelian()
    with pytest.raises(NotNormalError):
        quotient(S4, gens("(1 2 3 4); (1 3)"))
