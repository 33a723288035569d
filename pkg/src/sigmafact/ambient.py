"""Cayley-table representation of a finite permutation group.

Elements are numbered 0..n-1 in canonical (lexicographic) order, so index 0
is the identity and comparing sorted index tuples is the same as comparing
sorted element lists.  A subgroup is an ``int`` bitmask over those indices;
intersection is ``&``, order is ``bit_count()``.

Every subgroup handed out as a :class:`Group` remembers ``(ambient, mask)``
so later queries never have to map elements back to indices.
"""
from __future__ import annotations

import numpy as np

from . import kernels
from .errors import DegreeMismatch, NotSubgroupError, ThresholdExceeded
from .group import Group

# Cayley tables are n*n int32; keep them in memory-friendly territory.
TABLE_LIMIT = 5000


def _cayley_table(arr):
    n, d = arr.shape
    table = np.empty((n, n), dtype=np.int32)
    if d > 15:
        # d**d overflows int64 keys; look rows up by their bytes instead
        lookup = {row.tobytes(): i for i, row in enumerate(arr)}
        for a in range(n):
            table[a] = [lookup[r.tobytes()] for r in arr[a][arr]]
        return table
    weights = np.array([d ** k for k in range(d - 1, -1, -1)], dtype=np.int64)
    keys = arr @ weights
    step = max(1, 2_000_000 // max(1, n * d))
    for lo in range(0, n, step):
        # rows a: (a∘b)[x] = a[b[x]]
        comp = arr[lo:lo + step][:, arr]
        table[lo:lo + step] = np.searchsorted(keys, comp @ weights)
    return table


class Ambient:
    def __init__(self, group: Group, backend=None):
        if group.order > TABLE_LIMIT:
            raise ThresholdExceeded("Cayley table", group.order, TABLE_LIMIT)
        self.top = group
        self.degree = group.degree
        self.elements = group.elements
        self.n = n = len(self.elements)
        self.index = {p: i for i, p in enumerate(self.elements)}
        arr = np.array([p.array for p in self.elements], dtype=np.int64).reshape(n, self.degree)
        self.table = _cayley_table(arr)
        self.inv = np.argmin(self.table, axis=1).astype(np.int32)
        self.kernel = backend or kernels.backend
        self.tab = self.kernel.prepare(self.table)
        self.full = (1 << n) - 1
        self._nbytes = (n + 7) // 8
        self._gens = {}
        self._groups = {}
        self._keys = {}
        # free-form memo used by the lattice/sigma/hall layers
        self.memo = {}

    @classmethod
    def of(cls, G: Group):
        """The ambient a group lives in: its home table, else a table on itself."""
        if G._home is not None:
            return G._home[0]
        if G._ambient is None:
            G._ambient = amb = cls(G)
            amb._groups[amb.full] = G
            G._home = (amb, amb.full)
        return G._ambient

    # --- masks -----------------------------------------------------------
    def members(self, mask):
        raw = np.frombuffer(mask.to_bytes(self._nbytes, "little"), dtype=np.uint8)
        return np.flatnonzero(np.unpackbits(raw, bitorder="little")[: self.n])

    def flags(self, mask):
        raw = np.frombuffer(mask.to_bytes(self._nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.n].astype(bool)

    def mask_of_indices(self, idx):
        flags = np.zeros(self.n, dtype=bool)
        flags[np.asarray(idx, dtype=np.intp)] = True
        return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")

    def key(self, mask):
        """Canonical sort key: (order, sorted element indices)."""
        k = self._keys.get(mask)
        if k is None:
            k = self._keys[mask] = (mask.bit_count(), tuple(self.members(mask).tolist()))
        return k

    def mask_of(self, H: Group):
        if H._home is not None and H._home[0] is self:
            return H._home[1]
        if H.degree != self.degree:
            raise DegreeMismatch("group of another degree")
        try:
            idx = [self.index[p] for p in H.elements]
        except KeyError:
            raise NotSubgroupError("group is not contained in the ambient group") from None
        return self.mask_of_indices(idx)

    # --- group structure ---------------------------------------------------
    def closure(self, gens, seed=1, start=0):
        return self.kernel.closure(self.tab, seed, list(gens), start)

    def product(self, left_mask, right_mask):
        return self.kernel.set_product(self.tab, self.members(left_mask), self.members(right_mask))

    def gens_of(self, mask):
        gens = self._gens.get(mask)
        if gens is None:
            if mask == self.full and self.top.generators:
                gens = tuple(sorted({self.index[g] for g in self.top.generators} - {0}))
            else:
                found = []
                cur = 1
                for x in self.members(mask).tolist():
                    if not (cur >> x) & 1:
                        found.append(x)
                        cur = self.closure(found, cur, len(found) - 1)
                        if cur == mask:
                            break
                gens = tuple(found)
            self._gens[mask] = gens
        return gens

    def remember_gens(self, mask, gens):
        self._gens.setdefault(mask, tuple(gens))

    def conj(self, mask, g):
        """``g H g^-1`` as a mask."""
        idx = self.members(mask)
        return self.mask_of_indices(self.table[self.table[g, idx], self.inv[g]])

    def normalizes(self, g, mask):
        gi = self.inv[g]
        row = self.table[g]
        for k in self.gens_of(mask):
            if not (mask >> int(self.table[row[k], gi])) & 1:
                return False
        return True

    def is_normal(self, mask, top):
        return all(self.normalizes(g, mask) for g in self.gens_of(top))

    def join(self, a, b):
        if a & b == b:
            return a
        if a & b == a:
            return b
        gens = self.gens_of(a) + self.gens_of(b)
        return self.closure(gens, a, len(self.gens_of(a)))

    def commutator(self, x, y):
        t, inv = self.table, self.inv
        return int(t[t[inv[x], inv[y]], t[x, y]])

    def perm(self, i):
        return self.elements[i]

    def group(self, mask):
        G = self._groups.get(mask)
        if G is None:
            gens = [self.elements[i] for i in self.gens_of(mask)]
            G = Group(gens, self.degree)
            G._order = mask.bit_count()
            G._elements = tuple(self.elements[i] for i in self.members(mask).tolist())
            G._home = (self, mask)
            self._groups[mask] = G
        return G


def locate(G: Group):
    """``(ambient, mask)`` for ``G``."""
    amb = Ambient.of(G)
    return amb, G._home[1]


def locate_in(amb: Ambient, top: int, H: Group, what="subgroup"):
    mask = amb.mask_of(H)
    if mask & top != mask:
        raise NotSubgroupError(f"{what} is not contained in the parent group")
    return mask
