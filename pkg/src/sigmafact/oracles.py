"""Classical cross-checks that bypass the Cayley-table engine entirely.

They work on :class:`Perm` objects and the stabilizer chain only, so they can
arbitrate the lattice/sigma code paths.
"""
from __future__ import annotations

from .group import Group, build_group, normal_closure
from .sigma import pi_part, prime_set

__all__ = ["derived_series", "is_soluble", "is_nilpotent_by_sylow_counts", "brute_closure",
           "subgroups_by_pairwise_closure"]


def derived_series(G: Group):
    series = [G]
    while True:
        H = series[-1]
        gens = H.generators
        comms = [a.inverse() * b.inverse() * a * b for a in gens for b in gens]
        D = normal_closure(H, build_group(comms, H.degree))
        if D.order == H.order:
            return series
        series.append(D)


def is_soluble(G: Group) -> bool:
    return derived_series(G)[-1].order == 1


def is_nilpotent_by_sylow_counts(G: Group) -> bool:
    """Each Sylow subgroup is normal iff the p-elements number exactly |G|_p."""
    counts = {p: 0 for p in prime_set(G.order)}
    for g in G.elements:
        o = g.order()
        ps = prime_set(o)
        if len(ps) == 1:
            counts[next(iter(ps))] += 1
        elif o == 1:
            for p in counts:
                counts[p] += 1
    return all(counts[p] == pi_part(G.order, {p}) for p in counts)


def brute_closure(gens, degree):
    """Element set generated by ``gens``, by repeated multiplication."""
    from .perm import Perm

    idn = Perm.identity(degree)
    seen = {idn}
    frontier = [idn]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def subgroups_by_pairwise_closure(G: Group):
    """All subgroups as element sets: close ``<x>`` under pairwise joins to a fixpoint."""
    elements = G.elements
    found = {brute_closure([x], G.degree) for x in elements}
    while True:
        current = list(found)
        new = set()
        for i, A in enumerate(current):
            ga = sorted(A)
            for B in current[i + 1:]:
                if A <= B or B <= A:
                    continue
                J = brute_closure(ga + sorted(B), G.degree)
                if J not in found:
                    new.add(J)
        if not new:
            return found
        found |= new
