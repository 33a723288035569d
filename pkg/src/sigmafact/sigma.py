"""Partitions of the primes and the sigma-predicates built on them.

A :class:`SigmaPartition` lists finitely many explicit prime classes plus an
optional residual class holding every other prime.  Classes are identified by
1-based position; the residual, when present, is last.

Chief-factor predicates only need orders: the semidirect product
``(H/K) x| (G/C_G(H/K))`` has order ``|H/K| * |G : C_G(H/K)|`` and whether it
lies in one class depends on nothing else, so it is never built.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ambient import locate, locate_in
from .errors import ParseError, PartitionError
from .group import Group
from .lattice import (
    ChiefFactor, chief_data, factor_centralizer_mask, normal_masks, subgroup_masks,
)

__all__ = [
    "SigmaPartition", "prime_set", "sigma_of", "pi_part", "is_pi_number",
    "is_sigma_primary", "is_sigma_central", "is_sigma_nilpotent",
    "is_sigma_nilpotent_hall", "is_sigma_soluble", "O_pi", "sigma_fitting",
    "sigma_radical",
]


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def prime_set(n: int) -> frozenset:
    """Primes dividing ``n`` (trial division); empty for 1."""
    if n < 1:
        raise ValueError("n must be positive")
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return frozenset(out)


def pi_part(n: int, pi) -> int:
    """Largest divisor of ``n`` whose primes all lie in ``pi``."""
    out = 1
    for p in pi:
        while n % p == 0:
            out *= p
            n //= p
    return out


def is_pi_number(n: int, pi) -> bool:
    return prime_set(n) <= frozenset(pi)


@dataclass(frozen=True)
class SigmaPartition:
    explicit_classes: tuple
    has_residual: bool = True

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.explicit_classes)
        object.__setattr__(self, "explicit_classes", classes)
        seen = set()
        for c in classes:
            if not c:
                raise PartitionError("empty prime class")
            bad = [p for p in c if not _is_prime(p)]
            if bad:
                raise PartitionError(f"not prime: {sorted(bad)}")
            if seen & c:
                raise PartitionError(f"classes overlap in {sorted(seen & c)}")
            seen |= c
        if not classes and not self.has_residual:
            raise PartitionError("a partition needs at least one class")

    @classmethod
    def parse(cls, text: str) -> "SigmaPartition":
        """``"2,3|5|rest"``: classes split by ``|``, primes by ``,``; ``rest`` last."""
        parts = [t.strip() for t in text.split("|")]
        residual = False
        classes = []
        col = 1
        for k, part in enumerate(parts):
            if part == "rest":
                if k != len(parts) - 1:
                    raise ParseError("'rest' must be the last class", text, column=col)
                residual = True
            else:
                primes = []
                for tok in part.split(","):
                    tok = tok.strip()
                    if not tok.isdigit():
                        raise ParseError(f"bad prime {tok!r}", text, column=col)
                    primes.append(int(tok))
                classes.append(primes)
            col += len(part) + 1
        try:
            return cls(tuple(classes), residual)
        except PartitionError as exc:
            raise ParseError(str(exc), text) from None

    @classmethod
    def prime_wise(cls, primes) -> "SigmaPartition":
        """Singleton classes for ``primes`` plus the residual (finest on those primes)."""
        return cls(tuple(frozenset([p]) for p in sorted(primes)), True)

    @classmethod
    def single_class(cls) -> "SigmaPartition":
        return cls((), True)

    @property
    def class_ids(self):
        return tuple(range(1, len(self.explicit_classes) + 1 + self.has_residual))

    @property
    def residual_id(self):
        return len(self.explicit_classes) + 1 if self.has_residual else None

    def class_of(self, p: int) -> int:
        for i, c in enumerate(self.explicit_classes, 1):
            if p in c:
                return i
        if self.has_residual:
            return self.residual_id
        raise PartitionError(f"prime {p} lies in no class of {self}")

    def check_id(self, i):
        if i not in self.class_ids:
            raise PartitionError(f"unknown class id {i!r} for {self}")

    def primes_in(self, i, among) -> frozenset:
        """``sigma_i`` restricted to the primes ``among``."""
        self.check_id(i)
        return frozenset(p for p in among if self.class_of(p) == i)

    def label(self, i):
        self.check_id(i)
        if i == self.residual_id:
            return "rest"
        return ",".join(map(str, sorted(self.explicit_classes[i - 1])))

    def refines(self, other: "SigmaPartition", primes) -> bool:
        """Every class of ``self`` (restricted to ``primes``) sits inside a class of ``other``."""
        by_class = {}
        for p in primes:
            by_class.setdefault(self.class_of(p), set()).add(other.class_of(p))
        return all(len(v) == 1 for v in by_class.values())

    def __str__(self):
        parts = [",".join(map(str, sorted(c))) for c in self.explicit_classes]
        if self.has_residual:
            parts.append("rest")
        return "|".join(parts)


def sigma_of(n: int, sigma: SigmaPartition) -> frozenset:
    """Ids of the classes meeting ``prime_set(n)``."""
    return frozenset(sigma.class_of(p) for p in prime_set(n))


def _one_class(n, sigma):
    return len(sigma_of(n, sigma)) <= 1


def is_sigma_primary(G: Group, sigma: SigmaPartition) -> bool:
    return _one_class(G.order, sigma)


# --- mask layer (shared with hall/factor/theorems) -------------------------------

def nilpotent_mask(amb, mask, sigma) -> bool:
    return all(_one_class(fo * idx, sigma) for fo, idx in chief_data(amb, mask))


def soluble_mask(amb, mask, sigma) -> bool:
    return all(_one_class(fo, sigma) for fo, _ in chief_data(amb, mask))


def normal_hall_mask(amb, top, pi):
    """The normal Hall ``pi``-subgroup of ``top`` if it has one, else None."""
    target = pi_part(top.bit_count(), pi)
    for N in normal_masks(amb, top):
        if N.bit_count() == target:
            return N
    return None


def nilpotent_hall_mask(amb, top, sigma) -> bool:
    order = top.bit_count()
    members = []
    for i in sorted(sigma_of(order, sigma)):
        target = pi_part(order, sigma.primes_in(i, prime_set(order)))
        found = None
        for H in subgroup_masks(amb, top):
            if H.bit_count() == target and amb.is_normal(H, top):
                found = H
                break
        if found is None:
            return False
        members.append(found)
    size = 1
    t = amb.table
    for k, H in enumerate(members):
        size *= H.bit_count()
        for K in members[k + 1:]:
            if H & K != 1:
                return False
            if any(t[a, b] != t[b, a] for a in amb.gens_of(H) for b in amb.gens_of(K)):
                return False
    return size == order


def o_pi_mask(amb, top, pi):
    out = 1
    for N in normal_masks(amb, top):
        if is_pi_number(N.bit_count(), pi):
            out = amb.join(out, N)
    if not is_pi_number(out.bit_count(), pi):
        raise RuntimeError("join of normal pi-subgroups is not a pi-group")
    return out


def fitting_mask(amb, top, sigma):
    out = 1
    for N in normal_masks(amb, top):
        if nilpotent_mask(amb, N, sigma):
            out = amb.join(out, N)
    if not nilpotent_mask(amb, out, sigma):
        raise RuntimeError("sigma-Fitting subgroup came out non sigma-nilpotent")
    return out


def radical_mask(amb, top, sigma):
    out = 1
    for N in normal_masks(amb, top):
        if soluble_mask(amb, N, sigma):
            out = amb.join(out, N)
    if not soluble_mask(amb, out, sigma):
        raise RuntimeError("sigma-radical came out non sigma-soluble")
    return out


# --- public API -------------------------------------------------------------------

def is_sigma_central(G: Group, f: ChiefFactor, sigma: SigmaPartition) -> bool:
    amb, top = locate(G)
    K = locate_in(amb, top, f.below, "factor bottom")
    H = locate_in(amb, top, f.above, "factor top")
    C = factor_centralizer_mask(amb, top, K, H)
    return _one_class(f.factor_order * (G.order // C.bit_count()), sigma)


def is_sigma_nilpotent(G: Group, sigma: SigmaPartition) -> bool:
    """Every chief factor is sigma-central (true for the trivial group)."""
    amb, top = locate(G)
    return nilpotent_mask(amb, top, sigma)


def is_sigma_nilpotent_hall(G: Group, sigma: SigmaPartition) -> bool:
    """``G`` is the direct product of a complete Hall sigma-set."""
    amb, top = locate(G)
    return nilpotent_hall_mask(amb, top, sigma)


def is_sigma_soluble(G: Group, sigma: SigmaPartition) -> bool:
    amb, top = locate(G)
    return soluble_mask(amb, top, sigma)


def O_pi(G: Group, pi) -> Group:
    amb, top = locate(G)
    return amb.group(o_pi_mask(amb, top, frozenset(pi)))


def sigma_fitting(G: Group, sigma: SigmaPartition) -> Group:
    amb, top = locate(G)
    return amb.group(fitting_mask(amb, top, sigma))


def sigma_radical(G: Group, sigma: SigmaPartition) -> Group:
    amb, top = locate(G)
    return amb.group(radical_mask(amb, top, sigma))
