"""Searching for factorizations ``G = AB`` and ``G = AB = BC = CA`` by subgroups.

``AB`` covers ``G`` exactly when ``|A| |B| = |G| |A n B|``.  Since
``G = AB`` implies ``G = A^x B`` for every ``x``, the first factor only ranges
over conjugacy-class representatives; the other factors range over every
subgroup.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ambient import locate, locate_in
from .group import Group
from .hall import hall_flags
from .lattice import _normal_closure_mask, subgroup_classes, subgroup_masks
from .sigma import normal_hall_mask, o_pi_mask, pi_part, prime_set

__all__ = [
    "Factorization", "ProductHallReport", "is_factorization", "find_factorizations",
    "find_triple_factorizations", "product_hall_check", "literal_product_covers",
]


@dataclass(frozen=True, eq=False)
class Factorization:
    A: Group
    B: Group
    C: Group | None = None
    proper: bool = False

    @property
    def kind(self):
        return "two-fold" if self.C is None else "triple"

    def factors(self):
        return (self.A, self.B) if self.C is None else (self.A, self.B, self.C)


def covers(a, b, order):
    return a.bit_count() * b.bit_count() == order * (a & b).bit_count()


def is_factorization(G: Group, A: Group, B: Group) -> bool:
    amb, top = locate(G)
    a = locate_in(amb, top, A, "A")
    b = locate_in(amb, top, B, "B")
    return covers(a, b, G.order)


def literal_product_covers(G: Group, A: Group, B: Group) -> bool:
    """``{ab}`` enumerated element by element equals ``G`` (oracle for the size test)."""
    Gs = G.element_set
    prod = {a * b for a in A.elements for b in B.elements}
    return prod == Gs


def class_reps(amb, top):
    masks = subgroup_masks(amb, top)
    return [masks[c[0]] for c in subgroup_classes(amb, top)]


def pair_masks(amb, top, admissible=None, proper=False):
    """``(a, b)`` masks with ``ab = top``; ``a`` over class representatives."""
    order = top.bit_count()
    masks = subgroup_masks(amb, top)
    pool = [m for m in masks if (admissible is None or admissible(m))
            and not (proper and m == top)]
    allowed = set(pool)
    out = []
    for a in class_reps(amb, top):
        if a not in allowed:
            continue
        na = a.bit_count()
        for b in pool:
            if (na * b.bit_count()) % order == 0 and covers(a, b, order):
                out.append((a, b))
    return out


def triple_masks(amb, top, admissible=None, proper=False):
    """``(a, b, c)`` with all three pairwise products equal to ``top``.

    ``a`` over class representatives; ``b`` and ``c`` over all subgroups with
    ``b`` not after ``c`` in canonical order (the condition is symmetric).
    """
    order = top.bit_count()
    masks = subgroup_masks(amb, top)
    pool = [m for m in masks if (admissible is None or admissible(m))
            and not (proper and m == top)]
    allowed = set(pool)
    out = []
    for a in class_reps(amb, top):
        if a not in allowed:
            continue
        partners = [b for b in pool if covers(a, b, order)]
        for k, b in enumerate(partners):
            for c in partners[k:]:
                if covers(b, c, order):
                    out.append((a, b, c))
    return out


def find_factorizations(G: Group, filter=None, *, proper=False):
    """Two-fold factorizations; ``filter(A, B)`` on Groups narrows the result."""
    amb, top = locate(G)
    out = []
    for a, b in pair_masks(amb, top, proper=proper):
        A, B = amb.group(a), amb.group(b)
        if filter is None or filter(A, B):
            out.append(Factorization(A, B, None, a != top and b != top))
    return out


def find_triple_factorizations(G: Group, filter=None, *, proper=False):
    """Triple factorizations; ``filter(H)`` must hold for each of the three subgroups."""
    amb, top = locate(G)
    admissible = None
    if filter is not None:
        admissible = lambda m: filter(amb.group(m))  # noqa: E731
    out = []
    for a, b, c in triple_masks(amb, top, admissible, proper):
        out.append(Factorization(amb.group(a), amb.group(b), amb.group(c),
                                 top not in (a, b, c)))
    return out


@dataclass
class ProductHallReport:
    applicable: bool
    reason: str = ""
    permutable: bool | None = None
    is_hall: bool | None = None
    commutator_in_O: bool | None = None
    closures_commute: bool | None = None
    witnesses: dict = field(default_factory=dict)

    @property
    def holds(self):
        if not self.applicable:
            return None
        return bool(self.permutable and self.is_hall and self.commutator_in_O
                    and self.closures_commute is not False)


def product_hall_masks(amb, top, a, b, pi):
    """Clauses are computed whenever ``A_pi`` and ``B_pi`` exist; the report is
    applicable only when ``G`` also satisfies ``D_pi``."""
    pi = frozenset(pi) & prime_set(top.bit_count())
    if not covers(a, b, top.bit_count()):
        return ProductHallReport(False, "G != AB")
    a_pi = normal_hall_mask(amb, a, pi)
    b_pi = normal_hall_mask(amb, b, pi)
    if a_pi is None or b_pi is None:
        return ProductHallReport(False, "A or B has no normal Hall pi-subgroup")
    reason = ""
    if not hall_flags(amb, top, pi)[2]:
        reason = f"G does not satisfy D_{{{','.join(map(str, sorted(pi)))}}}"
    ab = amb.product(a_pi, b_pi)
    ba = amb.product(b_pi, a_pi)
    permutable = ab == ba
    is_hall = ab.bit_count() == pi_part(top.bit_count(), pi) and ab == amb.join(a_pi, b_pi)
    comms = [amb.commutator(x, y) for x in amb.members(a_pi).tolist()
             for y in amb.members(b_pi).tolist()]
    comm = amb.closure(sorted(set(comms)))
    o_pi = o_pi_mask(amb, top, pi)
    report = ProductHallReport(
        not reason, reason, permutable, is_hall, comm & o_pi == comm,
        witnesses={"|A_pi|": a_pi.bit_count(), "|B_pi|": b_pi.bit_count(),
                   "|A_pi B_pi|": ab.bit_count(), "|[A_pi,B_pi]|": comm.bit_count(),
                   "|O_pi(G)|": o_pi.bit_count()},
    )
    if o_pi == 1:
        by = amb.gens_of(top)
        na = _normal_closure_mask(amb, a_pi, by)
        nb = _normal_closure_mask(amb, b_pi, by)
        t = amb.table
        report.closures_commute = all(
            t[x, y] == t[y, x] for x in amb.gens_of(na) for y in amb.gens_of(nb))
    return report


def product_hall_check(G: Group, A: Group, B: Group, pi) -> ProductHallReport:
    """Check the Hall-product clauses for ``G = AB``; inapplicable when premises fail."""
    amb, top = locate(G)
    a = locate_in(amb, top, A, "A")
    b = locate_in(amb, top, B, "B")
    return product_hall_masks(amb, top, a, b, pi)
