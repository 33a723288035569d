import random

import pytest

from conftest import CORPUS, gens, grp
from sigmafact.errors import NotSubgroupError
from sigmafact.factor import (
    find_factorizations, find_triple_factorizations, is_factorization, literal_product_covers,
    product_hall_check,
)
from sigmafact.group import build_group, conjugate, core, is_subgroup
from sigmafact.lattice import enumerate_subgroups, normal_subgroups
from sigmafact.oracles import is_nilpotent_by_sylow_counts
from sigmafact.sigma import SigmaPartition, is_sigma_nilpotent

NAMES = [e.name for e in CORPUS if e.expected_order <= 60]
A5_SIGMA = SigmaPartition.parse("2,3|5|rest")
D8 = "(1 2 3 4); (1 3)"
V4 = "(1 2)(3 4); (1 3)(2 4)"


def test_examples():
    A5, S4 = grp("A5"), grp("S4")
    A4 = gens("(1 2 3); (2 3 4)", 5)
    C5 = gens("(1 2 3 4 5)")
    assert is_factorization(A5, A4, C5)
    assert is_factorization(S4, S4, build_group([], 4))
    d8, c3 = gens(D8), gens("(1 2 3)", 4)
    assert is_factorization(S4, d8, c3)
    assert literal_product_covers(S4, d8, c3)
    assert not is_factorization(S4, d8, gens("(1 3)", 4))
    with pytest.raises(NotSubgroupError):
        is_factorization(grp("A4"), gens(V4), d8)


def test_find_factorizations_examples():
    A5 = grp("A5")
    nil = lambda A, B: is_sigma_nilpotent(A, A5_SIGMA) and is_sigma_nilpotent(B, A5_SIGMA)  # noqa: E731
    found = {(f.A.order, f.B.order) for f in find_factorizations(A5, nil)}
    assert (12, 5) in found
    assert find_factorizations(grp("C7"), proper=True) == []
    S4 = grp("S4")
    both = lambda A, B: is_nilpotent_by_sylow_counts(A) and is_nilpotent_by_sylow_counts(B)  # noqa: E731
    pairs = [(f.A, f.B) for f in find_factorizations(S4, both)]
    assert any({A.order, B.order} == {8, 3} for A, B in pairs)


def test_triple_examples():
    S3 = grp("S3")
    assert any(f.A == f.B == f.C == S3 for f in find_triple_factorizations(S3))
    C6 = grp("C6")
    trip = [tuple(sorted(H.order for H in f.factors())) for f in find_triple_factorizations(C6)]
    assert (2, 3, 6) in trip
    S4 = grp("S4")
    nil = lambda H: is_nilpotent_by_sylow_counts(H)  # noqa: E731
    assert find_triple_factorizations(S4, nil, proper=True) == []


@pytest.mark.parametrize("name", NAMES)
def test_symmetry_and_literal_product(name):
    G = grp(name)
    subs = enumerate_subgroups(G).subgroups
    for f in find_factorizations(G):
        assert is_factorization(G, f.B, f.A)
        assert literal_product_covers(G, f.A, f.B)
    rng = random.Random(name)
    for _ in range(60):
        A, B = rng.choice(subs), rng.choice(subs)
        assert is_factorization(G, A, B) == is_factorization(G, B, A) == literal_product_covers(G, A, B)


@pytest.mark.parametrize("name", NAMES)
def test_conjugation_invariance(name):
    G = grp(name)
    rng = random.Random(name)
    for f in find_factorizations(G, proper=True)[:15]:
        for x in rng.choices(G.elements, k=20):
            assert is_factorization(G, conjugate(f.A, x), f.B)


@pytest.mark.parametrize("name", NAMES)
def test_normal_subgroup_of_factor_lies_in_core(name):
    G = grp(name)
    for f in find_factorizations(G, proper=True):
        BG = core(G, f.B)
        for L in normal_subgroups(f.A):
            if is_subgroup(f.B, L):
                assert is_subgroup(BG, L)


def test_product_hall_examples():
    S4 = grp("S4")
    r = product_hall_check(S4, gens(D8), gens("(1 2 3)", 4), {2})
    assert r.applicable and r.holds
    assert r.witnesses["|A_pi|"] == 8 and r.witnesses["|B_pi|"] == 1
    assert r.witnesses["|[A_pi,B_pi]|"] == 1 and r.witnesses["|O_pi(G)|"] == 4
    r = product_hall_check(S4, gens(D8), gens("(1 2 3)", 4), {11})
    assert r.applicable and r.holds
    A5 = grp("A5")
    r = product_hall_check(A5, gens("(1 2 3); (2 3 4)", 5), gens("(1 2 3 4 5)"), {2, 3})
    # A5 fails D_{2,3} (an S3 moving all five points lies in no A4), so the
    # report is inapplicable, but the clauses are still evaluated
    assert not r.applicable and "D_{2,3}" in r.reason and r.holds is None
    assert r.is_hall and r.witnesses["|A_pi B_pi|"] == 12
    r = product_hall_check(S4, gens(D8), gens(D8), {2})
    assert not r.applicable and r.holds is None
