"""Subgroup lattices, normal subgroups, chief series and quotients.

All work happens on bitmasks inside an :class:`~sigmafact.ambient.Ambient`;
the public functions take and return :class:`~sigmafact.group.Group`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ambient import Ambient, locate, locate_in
from .config import limits
from .errors import GroupError, NotNormalError, ThresholdExceeded
from .group import Group
from .perm import Perm

__all__ = [
    "SubgroupLattice", "ChiefFactor", "enumerate_subgroups", "normal_subgroups",
    "minimal_normal_subgroups", "chief_series", "centralizer_of_chief_factor",
    "quotient", "subgroup_masks", "normal_masks", "chief_masks", "chief_data",
]


# --- mask layer ---------------------------------------------------------------

def _cyclic_subgroups(amb, top):
    cyclic = {}
    for x in amb.members(top).tolist()[1:]:
        c = amb.closure((x,))
        if c not in cyclic:
            cyclic[c] = x
            amb.remember_gens(c, (x,))
    return sorted(cyclic.items(), key=lambda kv: amb.key(kv[0]))


def _extend_to_fixpoint(amb, generators_of_pieces):
    """Close {1} under joining with the given pieces (mask, gens)."""
    found = {1: ()}
    queue = [1]
    while queue:
        H = queue.pop()
        gh = amb.gens_of(H)
        for C, cg in generators_of_pieces:
            if C & H == C:
                continue
            K = amb.closure(gh + cg, H, len(gh))
            if K not in found:
                found[K] = gh + cg
                amb.remember_gens(K, gh + cg)
                queue.append(K)
    return sorted(found, key=amb.key)


def subgroup_masks(amb: Ambient, top: int):
    """All subgroups of ``top`` as canonically sorted masks."""
    memo = amb.memo.setdefault("lattice", {})
    if top in memo:
        return memo[top][0]
    order = top.bit_count()
    if order > limits.lattice:
        raise ThresholdExceeded("subgroup lattice", order, limits.lattice)
    if amb.full in memo and top != amb.full:
        masks = [m for m in memo[amb.full][0] if m & top == m]
    else:
        pieces = [(c, (x,)) for c, x in _cyclic_subgroups(amb, top)]
        masks = _extend_to_fixpoint(amb, pieces)
    classes = _conjugacy_classes(amb, top, masks)
    memo[top] = (masks, classes)
    return masks


def subgroup_classes(amb, top):
    subgroup_masks(amb, top)
    return amb.memo["lattice"][top][1]


def _conjugacy_classes(amb, top, masks):
    where = {m: i for i, m in enumerate(masks)}
    gens = amb.gens_of(top)
    cls = [-1] * len(masks)
    classes = []
    for i, m in enumerate(masks):
        if cls[i] >= 0:
            continue
        cid = len(classes)
        cls[i] = cid
        orbit = [i]
        for j in orbit:
            for g in gens:
                k = where[amb.conj(masks[j], g)]
                if cls[k] < 0:
                    cls[k] = cid
                    orbit.append(k)
        classes.append(tuple(sorted(orbit)))
    return classes


def _normal_closure_mask(amb, seed, by):
    N = seed
    queue = list(amb.gens_of(N))
    while queue:
        k = queue.pop()
        for g in by:
            c = int(amb.table[amb.table[g, k], amb.inv[g]])
            if not (N >> c) & 1:
                gn = amb.gens_of(N)
                N = amb.closure(gn + (c,), N, len(gn))
                amb.remember_gens(N, gn + (c,))
                queue.append(c)
    return N


def normal_masks(amb: Ambient, top: int):
    """Normal subgroups of ``top``, canonically sorted.

    Read off a cached lattice when one exists; otherwise built as joins of
    normal closures of single elements, which never needs the full lattice.
    """
    memo = amb.memo.setdefault("normal", {})
    if top in memo:
        return memo[top]
    lat = amb.memo.get("lattice", {})
    if top in lat:
        masks, classes = lat[top]
        out = [masks[c[0]] for c in classes if len(c) == 1]
        out.sort(key=amb.key)
    elif amb.full in lat:
        out = [m for m in lat[amb.full][0] if m & top == m and amb.is_normal(m, top)]
    else:
        out = normal_masks_by_closure(amb, top)
    memo[top] = out
    return out


def normal_masks_by_closure(amb, top):
    by = amb.gens_of(top)
    pieces = {}
    done = 1
    for x in amb.members(top).tolist():
        if (done >> x) & 1:
            continue
        # one normal closure per conjugacy class of elements
        cls = [x]
        for y in cls:
            for g in by:
                c = int(amb.table[amb.table[g, y], amb.inv[g]])
                if not (done >> c) & 1:
                    done |= 1 << c
                    cls.append(c)
        done |= 1 << x
        N = _normal_closure_mask(amb, amb.closure((x,)), by)
        pieces.setdefault(N, x)
    return _extend_to_fixpoint(amb, [(N, amb.gens_of(N)) for N in sorted(pieces, key=amb.key)])


def minimal_normal_masks(amb, top):
    normals = normal_masks(amb, top)[1:]
    return [N for N in normals if not any(M != N and M & N == M for M in normals)]


def chief_masks(amb, top, tie_break="smallest"):
    """``[N0=1, N1, ..., Nk=top]``; each step takes a minimal candidate.

    ``tie_break="smallest"`` picks the smallest order, then the smallest
    canonical element list; ``"largest"`` the reverse (used to test series
    independence).
    """
    key = ("chief", top, tie_break)
    if key in amb.memo:
        return amb.memo[key]
    normals = normal_masks(amb, top)
    cur = 1
    series = [1]
    while cur != top:
        above = [N for N in normals if N != cur and N & cur == cur]
        minimal = [N for N in above if not any(M != N and M & N == M for M in above)]
        cur = minimal[0] if tie_break == "smallest" else minimal[-1]
        series.append(cur)
    amb.memo[key] = series
    return series


def factor_centralizer_mask(amb, top, below, above):
    g = amb.members(top)
    inside = amb.flags(below)
    ok = np.ones(len(g), dtype=bool)
    t, inv = amb.table, amb.inv
    for h in amb.gens_of(above):
        comm = t[t[inv[g], inv[h]], t[g, h]]
        ok &= inside[comm]
    return amb.mask_of_indices(g[ok])


def chief_data(amb, top, tie_break="smallest"):
    """``[(|H/K|, |G : C_G(H/K)|), ...]`` along the chief series; partition-free."""
    key = ("chiefdata", top, tie_break)
    if key not in amb.memo:
        series = chief_masks(amb, top, tie_break)
        order = top.bit_count()
        out = []
        for K, H in zip(series, series[1:]):
            C = factor_centralizer_mask(amb, top, K, H)
            out.append((H.bit_count() // K.bit_count(), order // C.bit_count()))
        amb.memo[key] = out
    return amb.memo[key]


# --- public API -----------------------------------------------------------------

class SubgroupLattice:
    """All subgroups of ``parent`` in canonical order: by order, then element list."""

    def __init__(self, parent, ambient, top):
        self.parent = parent
        self.ambient = ambient
        self.top = top
        self.masks = subgroup_masks(ambient, top)
        self.conjugacy_classes = subgroup_classes(ambient, top)
        flags = [False] * len(self.masks)
        for c in self.conjugacy_classes:
            if len(c) == 1:
                flags[c[0]] = True
        self.normal_flags = flags
        self._index = {m: i for i, m in enumerate(self.masks)}

    @property
    def subgroups(self):
        return [self.ambient.group(m) for m in self.masks]

    def __len__(self):
        return len(self.masks)

    def __getitem__(self, i):
        return self.ambient.group(self.masks[i])

    def index(self, H: Group):
        return self._index[self.ambient.mask_of(H)]

    def class_of(self, i):
        return next(c for c in self.conjugacy_classes if i in c)

    def normal(self):
        return [self[i] for i, f in enumerate(self.normal_flags) if f]


def enumerate_subgroups(G: Group) -> SubgroupLattice:
    amb, top = locate(G)
    return SubgroupLattice(G, amb, top)


def normal_subgroups(G: Group):
    amb, top = locate(G)
    return [amb.group(m) for m in normal_masks(amb, top)]


def minimal_normal_subgroups(G: Group):
    if G.order == 1:
        raise GroupError("the trivial group has no minimal normal subgroups")
    amb, top = locate(G)
    return [amb.group(m) for m in minimal_normal_masks(amb, top)]


@dataclass(frozen=True, eq=False)
class ChiefFactor:
    below: Group
    above: Group

    @property
    def factor_order(self):
        return self.above.order // self.below.order

    def __repr__(self):
        return f"ChiefFactor({self.below.order} < {self.above.order}, order {self.factor_order})"


def chief_series(G: Group, tie_break="smallest"):
    if tie_break not in ("smallest", "largest"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    amb, top = locate(G)
    series = chief_masks(amb, top, tie_break)
    return [ChiefFactor(amb.group(K), amb.group(H)) for K, H in zip(series, series[1:])]


def centralizer_of_chief_factor(G: Group, f: ChiefFactor) -> Group:
    """``{g in G : [g, h] in K for all h in H}`` for the factor ``H/K``."""
    amb, top = locate(G)
    K = locate_in(amb, top, f.below, "factor bottom")
    H = locate_in(amb, top, f.above, "factor top")
    return amb.group(factor_centralizer_mask(amb, top, K, H))


def quotient(G: Group, N: Group) -> Group:
    """``G/N`` as a permutation group: the action on right cosets ``Ng``."""
    amb, top = locate(G)
    n = locate_in(amb, top, N, "N")
    if not amb.is_normal(n, top):
        raise NotNormalError("quotient by a non-normal subgroup")
    coset_of = np.full(amb.n, -1, dtype=np.int64)
    reps = []
    remaining = top
    while remaining:
        g = (remaining & -remaining).bit_length() - 1
        coset = amb.product(n, 1 << g)
        coset_of[amb.members(coset)] = len(reps)
        reps.append(g)
        remaining &= ~coset
    degree = len(reps)
    gens = []
    for x in amb.gens_of(top):
        images = coset_of[amb.table[reps, x]] + 1
        p = Perm(images.tolist())
        if not p.is_identity():
            gens.append(p)
    return Group(gens, degree)
