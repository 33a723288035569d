"""Permutation groups backed by a deterministic Schreier-Sims stabilizer chain.

The chain gives exact order and membership; the full element list is
produced on demand (gated by ``config.limits.elements``) in lexicographic
order of image sequences, which fixes a canonical order for everything
downstream.
"""
from __future__ import annotations

import itertools
import math

from .config import limits
from .errors import DegreeMismatch, NotSubgroupError, ThresholdExceeded
from .perm import Perm

__all__ = [
    "Group", "build_group", "contains", "all_elements", "normal_closure",
    "centralizer", "core", "intersect", "join", "conjugate", "is_normal",
    "is_subgroup", "direct_product",
]


def _mul(a, b):
    return tuple(a[x] for x in b)


def _inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


class _Chain:
    """Base points and, per level, ``{point: (u, u^-1)}`` with ``u(base) = point``."""

    __slots__ = ("degree", "base", "strong", "levels")

    def __init__(self, gens, degree):
        self.degree = degree
        idn = tuple(range(degree))
        self.base = []
        self.strong = []
        self.levels = []
        for g in gens:
            if g == idn:
                continue
            self.strong.append(g)
            if all(g[b] == b for b in self.base):
                self.base.append(next(x for x in range(degree) if g[x] != x))
        self.levels = [self._orbit(i) for i in range(len(self.base))]
        self._complete(idn)

    def _level_gens(self, i):
        prefix = self.base[:i]
        return [s for s in self.strong if all(s[b] == b for b in prefix)]

    def _orbit(self, i):
        b = self.base[i]
        idn = tuple(range(self.degree))
        orbit = {b: (idn, idn)}
        queue = [b]
        gens = self._level_gens(i)
        for p in queue:
            u = orbit[p][0]
            for s in gens:
                q = s[p]
                if q not in orbit:
                    v = _mul(s, u)
                    orbit[q] = (v, _inv(v))
                    queue.append(q)
        return orbit

    def sift(self, h, start=0):
        for j in range(start, len(self.base)):
            entry = self.levels[j].get(h[self.base[j]])
            if entry is None:
                return h, j
            h = _mul(entry[1], h)
        return h, len(self.base)

    def _complete(self, idn):
        i = len(self.base) - 1
        while i >= 0:
            grew = False
            gens = self._level_gens(i)
            orbit = self.levels[i]
            for p, (u, _) in list(orbit.items()):
                for s in gens:
                    g = _mul(orbit[s[p]][1], _mul(s, u))
                    h, j = self.sift(g, i + 1)
                    if j < len(self.base) or h != idn:
                        if j == len(self.base):
                            self.base.append(next(x for x in range(self.degree) if h[x] != x))
                            self.levels.append(None)
                        self.strong.append(h)
                        for level in range(i + 1, j + 1):
                            self.levels[level] = self._orbit(level)
                        i = j
                        grew = True
                        break
                if grew:
                    break
            if not grew:
                i -= 1

    def order(self):
        return math.prod(len(level) for level in self.levels)

    def elements(self):
        idn = tuple(range(self.degree))
        if not self.levels:
            return [idn]
        out = []
        for combo in itertools.product(*(list(level.values()) for level in self.levels)):
            g = idn
            for u, _ in combo:
                g = _mul(g, u)
            out.append(g)
        return out


class Group:
    """A permutation group given by generators.

    Immutable: the chain and element caches are filled once on first use.
    Equality is equality of element sets (same degree).
    """

    def __init__(self, generators=(), degree=None):
        gens = tuple(generators)
        if degree is None:
            degree = gens[0].degree if gens else 1
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = gens
        self._chain = None
        self._order = None
        self._elements = None
        self._set = None
        # (Ambient, mask) when this group was produced inside a Cayley table
        self._home = None
        self._ambient = None

    @property
    def chain(self):
        if self._chain is None:
            self._chain = _Chain([g.array for g in self.generators], self.degree)
        return self._chain

    @property
    def order(self):
        if self._order is None:
            self._order = self.chain.order()
        return self._order

    @property
    def base(self):
        return [b + 1 for b in self.chain.base]

    def transversal_sizes(self):
        return [len(level) for level in self.chain.levels]

    def contains(self, p):
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} element tested against degree {self.degree} group")
        chain = self.chain
        h, j = chain.sift(p.array)
        return j == len(chain.base) and h == tuple(range(self.degree))

    __contains__ = contains

    @property
    def elements(self):
        if self._elements is None:
            if self.order > limits.elements:
                raise ThresholdExceeded("element enumeration", self.order, limits.elements)
            self._elements = tuple(sorted(Perm._raw(a) for a in self.chain.elements()))
        return self._elements

    @property
    def element_set(self):
        if self._set is None:
            self._set = frozenset(self.elements)
        return self._set

    def identity(self):
        return Perm.identity(self.degree)

    def is_trivial(self):
        return self.order == 1

    def is_abelian(self):
        gens = self.generators
        return all(a * b == b * a for a, b in itertools.combinations(gens, 2))

    def __le__(self, other):
        return is_subgroup(other, self)

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        if self is other:
            return True
        if self.degree != other.degree or self.order != other.order:
            return False
        return all(other.contains(g) for g in self.generators)

    def __hash__(self):
        return hash((self.degree, self.element_set))

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"<Group order={self.order} degree={self.degree} gens=[{gens}]>"


def build_group(gens, degree=None) -> Group:
    gens = list(gens)
    if degree is None and gens:
        degree = gens[0].degree
    return Group(gens, degree)


def contains(G: Group, p: Perm) -> bool:
    return G.contains(p)


def all_elements(G: Group) -> frozenset:
    """Element set of ``G``; ``G.elements`` gives the canonically ordered tuple."""
    return G.element_set


def is_subgroup(G: Group, H: Group) -> bool:
    if G.degree != H.degree:
        raise DegreeMismatch("subgroup test across degrees")
    return all(G.contains(h) for h in H.generators)


def _require_subgroup(G, H, what):
    if not is_subgroup(G, H):
        raise NotSubgroupError(f"{what} is not contained in the parent group")


def is_normal(G: Group, N: Group) -> bool:
    """``N`` is normalized by every generator of ``G`` (``N <= G`` assumed)."""
    return all(N.contains(g * n * g.inverse()) for g in G.generators for n in N.generators)


def conjugate(H: Group, g: Perm) -> Group:
    """``g H g^-1``."""
    gi = g.inverse()
    return Group([g * h * gi for h in H.generators], H.degree)


def _from_elements(elements, degree):
    """A group on a known element set, with a greedy small generating set."""
    elements = sorted(elements)
    idn = Perm.identity(degree)
    gens = []
    current = Group([], degree)
    for x in elements:
        if x != idn and not current.contains(x):
            gens.append(x)
            current = Group(gens, degree)
    current._elements = tuple(elements)
    return current


def normal_closure(G: Group, S: Group) -> Group:
    _require_subgroup(G, S, "S")
    gens = [s for s in S.generators if not s.is_identity()]
    N = Group(gens, G.degree)
    queue = list(gens)
    while queue:
        n = queue.pop()
        for g in G.generators:
            c = g * n * g.inverse()
            if not N.contains(c):
                gens.append(c)
                N = Group(gens, G.degree)
                queue.append(c)
    return N


def centralizer(G: Group, H: Group) -> Group:
    """Elements of ``G`` commuting with every generator of ``H``."""
    if G.degree != H.degree:
        raise DegreeMismatch("centralizer across degrees")
    keep = [g for g in G.elements if all(g * h == h * g for h in H.generators)]
    return _from_elements(keep, G.degree)


def intersect(A: Group, B: Group) -> Group:
    if A.degree != B.degree:
        raise DegreeMismatch("intersection across degrees")
    small, big = (A, B) if A.order <= B.order else (B, A)
    return _from_elements([x for x in small.elements if big.contains(x)], A.degree)


def join(G: Group, A: Group, B: Group) -> Group:
    """``<A, B>`` inside ``G``."""
    _require_subgroup(G, A, "A")
    _require_subgroup(G, B, "B")
    return build_group(list(A.generators) + list(B.generators), G.degree)


def core(G: Group, B: Group) -> Group:
    """Largest normal subgroup of ``G`` inside ``B``: the intersection of all conjugates."""
    _require_subgroup(G, B, "B")
    C = B
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            D = intersect(C, conjugate(C, g))
            if D.order < C.order:
                C = D
                changed = True
    return C


def direct_product(A: Group, B: Group) -> Group:
    """``A x B`` acting on the disjoint union of the two point sets."""
    n, m = A.degree, B.degree
    gens = [Perm._raw(a.array + tuple(range(n, n + m))) for a in A.generators]
    gens += [Perm._raw(tuple(range(n)) + tuple(x + n for x in b.array)) for b in B.generators]
    return Group(gens, n + m)
