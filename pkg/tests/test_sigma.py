import pytest
from hypothesis import given, settings, strategies as st

from conftest import CORPUS, gens, grp
from sigmafact.errors import ParseError, PartitionError
from sigmafact.group import build_group, is_normal, is_subgroup
from sigmafact.lattice import ChiefFactor, chief_series, enumerate_subgroups, normal_subgroups
from sigmafact.oracles import is_nilpotent_by_sylow_counts, is_soluble
from sigmafact.sigma import (
    O_pi, SigmaPartition, is_sigma_central, is_sigma_nilpotent, is_sigma_nilpotent_hall,
    is_sigma_primary, is_sigma_soluble, prime_set, sigma_fitting, sigma_of, sigma_radical,
)

P235 = SigmaPartition.parse("2,3|5|rest")
NAMES = [e.name for e in CORPUS]
V4 = "(1 2)(3 4); (1 3)(2 4)"


def pw(G):
    return SigmaPartition.prime_wise(prime_set(G.order))


def test_prime_set():
    assert prime_set(168) == {2, 3, 7}
    assert prime_set(1) == frozenset()
    assert prime_set(60) == {2, 3, 5}


def test_parse_grammar():
    s = SigmaPartition.parse(" 2, 3 | 5 | rest ")
    assert s == P235 and str(s) == "2,3|5|rest"
    assert s.class_of(7) == s.residual_id == 3
    assert SigmaPartition.parse("2|3,7|rest").class_of(7) == 2
    assert not SigmaPartition.parse("2|3").has_residual
    for bad in ["2,3|rest|5", "2,4|rest", "2|2,3", "2||3", "x|rest"]:
        with pytest.raises(ParseError):
            SigmaPartition.parse(bad)
    with pytest.raises(PartitionError):
        SigmaPartition.parse("2|3").class_of(5)


def test_sigma_of():
    assert sigma_of(60, P235) == {1, 2}
    assert sigma_of(12, P235) == {1}
    assert sigma_of(1, P235) == frozenset()


def test_sigma_primary():
    assert is_sigma_primary(build_group([], 3), P235)
    assert is_sigma_primary(grp("A4"), P235)
    assert not is_sigma_primary(grp("A5"), P235)


def test_sigma_central_examples():
    A4, S4 = grp("A4"), grp("S4")
    v = gens(V4)
    f = ChiefFactor(build_group([], 4), v)
    assert is_sigma_central(A4, f, P235)
    assert not is_sigma_central(S4, f, pw(S4))
    C = grp("C12")
    for g in chief_series(C):
        assert is_sigma_central(C, g, pw(C))


def test_nilpotent_examples():
    A4, S4 = grp("A4"), grp("S4")
    assert is_sigma_nilpotent(A4, P235) and is_sigma_nilpotent_hall(A4, P235)
    assert not is_sigma_nilpotent(S4, pw(S4)) and not is_sigma_nilpotent_hall(S4, pw(S4))
    C6 = grp("C6")
    assert is_sigma_nilpotent_hall(C6, pw(C6))
    for p_group in ("D8", "Q8", "C2xC2xC2", "C9"):
        G = grp(p_group)
        for s in (pw(G), P235, SigmaPartition.single_class()):
            assert is_sigma_nilpotent(G, s)


def test_soluble_examples():
    A5 = grp("A5")
    assert not is_sigma_soluble(A5, P235)
    assert is_sigma_soluble(A5, SigmaPartition.parse("2,3,5|rest"))
    S4 = grp("S4")
    for s in (pw(S4), P235, SigmaPartition.parse("2|3,7|rest")):
        assert is_sigma_soluble(S4, s)


def test_O_pi():
    S4 = grp("S4")
    assert O_pi(S4, {2}) == gens(V4)
    assert O_pi(S4, {3}).order == 1
    assert O_pi(grp("D8"), {2}) == grp("D8")


def test_fitting_and_radical_examples():
    A4, S4, A5 = grp("A4"), grp("S4"), grp("A5")
    assert sigma_fitting(A4, P235) == A4
    assert sigma_fitting(S4, pw(S4)) == gens(V4)
    assert sigma_fitting(A5, pw(A5)).order == 1
    for s in (pw(S4), P235):
        assert sigma_radical(S4, s) == S4
    assert sigma_radical(A5, P235).order == 1
    assert sigma_radical(A4, P235) == A4


@pytest.mark.parametrize("name", NAMES)
def test_finest_and_coarsest_reductions(name):
    G = grp(name)
    assert is_sigma_nilpotent(G, pw(G)) == is_nilpotent_by_sylow_counts(G)
    assert is_sigma_soluble(G, pw(G)) == is_soluble(G)
    one = SigmaPartition.single_class()
    assert is_sigma_nilpotent(G, one) and is_sigma_soluble(G, one)


@pytest.mark.parametrize("name", NAMES)
def test_fitting_and_radical_are_largest(name):
    G = grp(name)
    for s in (pw(G), P235, SigmaPartition.parse("2|3,7|rest")):
        F, R = sigma_fitting(G, s), sigma_radical(G, s)
        assert is_normal(G, F) and is_sigma_nilpotent(F, s)
        assert is_normal(G, R) and is_sigma_soluble(R, s)
        for N in normal_subgroups(G):
            if is_sigma_nilpotent(N, s):
                assert is_subgroup(F, N)
            if is_sigma_soluble(N, s):
                assert is_subgroup(R, N)


def set_partitions(primes):
    """Random set partitions of ``primes`` as lists of blocks."""
    primes = sorted(primes)
    return st.lists(st.integers(0, len(primes) - 1), min_size=len(primes),
                    max_size=len(primes)).map(
        lambda labels: [frozenset(p for p, l in zip(primes, labels) if l == k)
                        for k in sorted(set(labels))])


@st.composite
def group_and_refinement(draw):
    G = grp(draw(st.sampled_from(NAMES)))
    blocks = draw(set_partitions(prime_set(G.order) or {2}))
    merge = draw(st.lists(st.integers(0, len(blocks) - 1), min_size=len(blocks),
                          max_size=len(blocks)))
    coarse = {}
    for b, m in zip(blocks, merge):
        coarse.setdefault(m, frozenset())
        coarse[m] |= b
    fine = SigmaPartition(tuple(blocks), True)
    return G, fine, SigmaPartition(tuple(coarse.values()), True)


@settings(max_examples=150, deadline=None)
@given(group_and_refinement())
def test_refinement_is_monotone(case):
    G, fine, coarse = case
    assert fine.refines(coarse, prime_set(G.order))
    if is_sigma_nilpotent(G, fine):
        assert is_sigma_nilpotent(G, coarse)
    if is_sigma_soluble(G, fine):
        assert is_sigma_soluble(G, coarse)


@settings(max_examples=150, deadline=None)
@given(group_and_refinement())
def test_predicates_agree_and_nest(case):
    G, fine, _ = case
    nil = is_sigma_nilpotent(G, fine)
    assert nil == is_sigma_nilpotent_hall(G, fine)
    if nil:
        assert is_sigma_soluble(G, fine)
    small = chief_series(G) if G.order > 1 else []
    large = chief_series(G, "largest") if G.order > 1 else []
    key = lambda fs: sorted((f.factor_order, is_sigma_central(G, f, fine)) for f in fs)  # noqa: E731
    assert key(small) == key(large)


@pytest.mark.parametrize("name", ["S4", "A5", "GL(2,3)"])
def test_subgroups_of_soluble_are_soluble(name):
    G = grp(name)
    for s in (pw(G), P235):
        if is_sigma_soluble(G, s):
            assert all(is_sigma_soluble(H, s) for H in enumerate_subgroups(G).subgroups)
