"""Sylow and Hall subgroups, read off the subgroup lattice."""
from __future__ import annotations

from dataclasses import dataclass, field

from .ambient import locate
from .group import Group
from .lattice import subgroup_classes, subgroup_masks
from .sigma import SigmaPartition, is_pi_number, pi_part, prime_set, sigma_of

__all__ = [
    "HallReport", "HallSigmaSet", "sylow", "hall_analysis", "satisfies_D_class",
    "complete_hall_sigma_set",
]


@dataclass
class HallReport:
    """``exists``/``conjugate``/``dominated`` are the E/C/D properties for ``pi``."""

    pi: frozenset
    exists: bool
    conjugate: bool
    dominated: bool
    hall_subgroups: list = field(default_factory=list, repr=False)


@dataclass
class HallSigmaSet:
    members: dict | None
    missing: int | None = None

    def __bool__(self):
        return self.members is not None


def hall_masks(amb, top, pi):
    target = pi_part(top.bit_count(), pi)
    return [m for m in subgroup_masks(amb, top) if m.bit_count() == target]


def hall_flags(amb, top, pi):
    """``(exists, conjugate, dominated, hall masks)``, memoised per (top, pi)."""
    pi = frozenset(pi) & prime_set(top.bit_count())
    key = ("hall", top, pi)
    if key in amb.memo:
        return amb.memo[key]
    masks = subgroup_masks(amb, top)
    target = pi_part(top.bit_count(), pi)
    idx = [i for i, m in enumerate(masks) if m.bit_count() == target]
    halls = [masks[i] for i in idx]
    exists = bool(halls)
    conjugate = False
    if exists:
        cls = next(c for c in subgroup_classes(amb, top) if idx[0] in c)
        conjugate = all(i in cls for i in idx)
    dominated = conjugate and all(
        any(K & H == K for H in halls)
        for K in masks if is_pi_number(K.bit_count(), pi)
    )
    amb.memo[key] = out = (exists, conjugate, dominated, halls)
    return out


def sylow(G: Group, p: int) -> Group:
    """The canonically first Sylow ``p``-subgroup (trivial when ``p`` does not divide |G|)."""
    amb, top = locate(G)
    return amb.group(hall_masks(amb, top, {p})[0])


def hall_analysis(G: Group, pi) -> HallReport:
    amb, top = locate(G)
    exists, conjugate, dominated, halls = hall_flags(amb, top, pi)
    return HallReport(frozenset(pi), exists, conjugate, dominated, [amb.group(m) for m in halls])


def d_class_mask(amb, top, sigma, i):
    return hall_flags(amb, top, sigma.primes_in(i, prime_set(top.bit_count())))[2]


def satisfies_D_class(G: Group, sigma: SigmaPartition, i: int) -> bool:
    sigma.check_id(i)
    amb, top = locate(G)
    return d_class_mask(amb, top, sigma, i)


def complete_hall_sigma_set(G: Group, sigma: SigmaPartition) -> HallSigmaSet:
    """One Hall ``sigma_i``-subgroup for each class meeting |G|, or the first class lacking one."""
    amb, top = locate(G)
    primes = prime_set(G.order)
    members = {}
    for i in sorted(sigma_of(G.order, sigma)):
        halls = hall_masks(amb, top, sigma.primes_in(i, primes))
        if not halls:
            return HallSigmaSet(None, i)
        members[i] = amb.group(halls[0])
    return HallSigmaSet(members)
