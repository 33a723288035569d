"""Executable checks of the factorization theorems, the supporting lemmas and
the two sharpness examples, plus the corpus sweep that runs them all.

Every check returns :class:`Verdict` objects.  A theorem or lemma instance
whose hypotheses fail is reported as not applicable (``conclusion_holds`` is
None) with the failed hypothesis named in ``notes``; nothing is skipped
silently.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ambient import Ambient, locate
from .config import limits
from .corpus import CorpusEntry, builtin_group
from .factor import class_reps, covers, literal_product_covers, pair_masks, product_hall_masks, triple_masks
from .group import Group, build_group, direct_product
from .hall import d_class_mask, hall_flags, hall_masks
from .lattice import (
    minimal_normal_masks, normal_masks, quotient, subgroup_classes, subgroup_masks,
)
from .oracles import is_nilpotent_by_sylow_counts, is_soluble
from .perm import parse_perm_list
from .sigma import (
    SigmaPartition, fitting_mask, nilpotent_hall_mask, nilpotent_mask, prime_set,
    sigma_of, soluble_mask,
)

__all__ = [
    "Verdict", "verify_theorem1", "verify_theorem2", "verify_theorem3",
    "check_example_a5", "check_example_psl27", "run_lemma_battery", "run_oracle_checks",
    "verify_group", "sweep_partitions", "EXAMPLE_A5", "EXAMPLE_PSL27",
]

EXAMPLE_A5 = "2,3|5|rest"
EXAMPLE_PSL27 = "2|3,7|rest"


@dataclass
class Verdict:
    name: str
    group: str
    partition: str
    hypotheses_met: bool
    conclusion_holds: bool | None
    witnesses: dict = field(default_factory=dict)
    notes: str = ""
    kind: str = "theorem"

    @property
    def violation(self):
        """A proven statement failed: hypotheses met but conclusion false."""
        return self.kind != "counterexample" and self.hypotheses_met and self.conclusion_holds is False

    @property
    def passed(self):
        if self.kind == "counterexample":
            return bool(self.witnesses.get("script_passed"))
        return not self.violation

    def to_dict(self):
        return {
            "name": self.name, "kind": self.kind, "group": self.group,
            "partition": self.partition, "hypotheses_met": self.hypotheses_met,
            "conclusion_holds": self.conclusion_holds, "passed": self.passed,
            "notes": self.notes, "witnesses": self.witnesses,
        }


def describe(amb, mask):
    gens = ",".join(str(amb.perm(i)) for i in amb.gens_of(mask)) or "()"
    return f"order {mask.bit_count()} <{gens}>"


class _Ctx:
    """A group, its ambient and per-partition predicate memos."""

    def __init__(self, G, name, sigma):
        self.G = G
        self.name = name
        self.sigma = sigma
        self.amb, self.top = locate(G)
        self.label = str(sigma)
        self._nil = {}

    def nil(self, mask):
        v = self._nil.get(mask)
        if v is None:
            v = self._nil[mask] = nilpotent_mask(self.amb, mask, self.sigma)
        return v

    def verdict(self, name, hyp, concl, witnesses=None, notes="", kind="theorem"):
        return Verdict(name, self.name, self.label, hyp, concl if hyp or kind == "counterexample" else None,
                       witnesses or {}, notes, kind)


# --- theorems ---------------------------------------------------------------------

def verify_theorem1(G: Group, sigma: SigmaPartition, name="G"):
    """For sigma-nilpotent ``G = AB`` and minimal normal ``N``: ``AN`` or ``BN`` sigma-nilpotent."""
    c = _Ctx(G, name, sigma)
    amb, top = c.amb, c.top
    if top == 1:
        return [c.verdict("theorem1", False, None, notes="G is trivial")]
    soluble = soluble_mask(amb, top, sigma)
    pairs = pair_masks(amb, top, admissible=c.nil)
    if not pairs:
        return [c.verdict("theorem1", False, None,
                          notes="no factorization by sigma-nilpotent subgroups")]
    out = []
    for a, b in pairs:
        for N in minimal_normal_masks(amb, top):
            w = {"A": describe(amb, a), "B": describe(amb, b), "N": describe(amb, N)}
            if not soluble:
                out.append(c.verdict("theorem1", False, None, w, "G is not sigma-soluble"))
                continue
            an, bn = amb.join(a, N), amb.join(b, N)
            # N is normal, so the set products are already subgroups
            if amb.product(a, N) != an or amb.product(b, N) != bn:
                raise RuntimeError("AN is not a subgroup although N is normal")
            w["AN sigma-nilpotent"] = c.nil(an)
            w["BN sigma-nilpotent"] = c.nil(bn)
            out.append(c.verdict("theorem1", True, c.nil(an) or c.nil(bn), w))
    return out


def _d_classes(c):
    return [i for i in sorted(sigma_of(c.top.bit_count(), c.sigma))
            if d_class_mask(c.amb, c.top, c.sigma, i)]


def verify_theorem2(G: Group, sigma: SigmaPartition, name="G"):
    """``G = AB = BC = CA`` with sigma-nilpotent factors and some ``D_{sigma_i}`` => sigma-nilpotent."""
    c = _Ctx(G, name, sigma)
    amb, top = c.amb, c.top
    triples = triple_masks(amb, top, admissible=c.nil)
    if not triples:
        return [c.verdict("theorem2", False, None,
                          notes="no triple factorization by sigma-nilpotent subgroups")]
    d_ok = _d_classes(c)
    concl = c.nil(top)
    out = []
    for a, b, cc in triples:
        w = {"A": describe(amb, a), "B": describe(amb, b), "C": describe(amb, cc),
             "D classes": [sigma.label(i) for i in d_ok]}
        if not d_ok:
            out.append(c.verdict("theorem2", False, None, w, "G satisfies no D_{sigma_i} with sigma_i in sigma(G)"))
        else:
            w["G sigma-nilpotent"] = concl
            out.append(c.verdict("theorem2", True, concl, w))
    return out


def verify_theorem3(G: Group, sigma: SigmaPartition, i: int, name="G") -> Verdict:
    """Sigma-soluble ``G`` with ``F_sigma(G)`` a sigma_i-group: a sigma-nilpotent
    factorization exists iff a sigma-nilpotent Hall sigma_i'-subgroup exists."""
    sigma.check_id(i)
    c = _Ctx(G, name, sigma)
    amb, top = c.amb, c.top
    order = top.bit_count()
    vname = f"theorem3[{sigma.label(i)}]"
    if i not in sigma_of(order, sigma):
        return c.verdict(vname, False, None, notes=f"sigma_{i} not in sigma(G)")
    if not soluble_mask(amb, top, sigma):
        return c.verdict(vname, False, None, notes="G is not sigma-soluble")
    F = fitting_mask(amb, top, sigma)
    if not sigma_of(F.bit_count(), sigma) <= {i}:
        return c.verdict(vname, False, None, {"F_sigma": describe(amb, F)},
                         notes=f"F_sigma(G) is not a sigma_{i}-group")
    primes = prime_set(order)
    own = sigma.primes_in(i, primes)
    w = {"F_sigma": describe(amb, F)}
    # (<=) a sigma-nilpotent Hall sigma_i'-subgroup K, completed by a Hall sigma_i-subgroup H
    K = next((m for m in hall_masks(amb, top, primes - own) if c.nil(m)), None)
    hall_side = K is not None
    witnessed = True
    if hall_side:
        H = hall_masks(amb, top, own)[0]
        witnessed = covers(H, K, order) and c.nil(H) and c.nil(K)
        w["Hall sigma_i'"] = describe(amb, K)
        w["Hall sigma_i"] = describe(amb, H)
    # (=>) any sigma-nilpotent two-fold factorization
    pairs = pair_masks(amb, top, admissible=c.nil)
    fact_side = bool(pairs)
    if pairs:
        w["factorization"] = [describe(amb, pairs[0][0]), describe(amb, pairs[0][1])]
    w["has sigma-nilpotent Hall sigma_i'"] = hall_side
    w["has sigma-nilpotent factorization"] = fact_side
    return c.verdict(vname, True, hall_side == fact_side and witnessed, w)


# --- the two sharpness examples -----------------------------------------------------------

def _example_pair(c, a, b):
    amb, top = c.amb, c.top
    N = minimal_normal_masks(amb, top)[0]
    an, bn = amb.join(a, N), amb.join(b, N)
    return N, c.nil(an) or c.nil(bn)


def check_example_a5(sigma: SigmaPartition | None = None) -> Verdict:
    """A5 = A4 * P with both factors sigma-nilpotent, yet A5 is not sigma-soluble
    and neither AN nor BN is sigma-nilpotent for N = A5."""
    sigma = sigma or SigmaPartition.parse(EXAMPLE_A5)
    G = builtin_group("A5")
    c = _Ctx(G, "A5", sigma)
    amb, top = c.amb, c.top
    a = amb.mask_of(build_group(parse_perm_list("(1 2 3); (2 3 4)", 5)))
    b = hall_masks(amb, top, {5})[0]
    soluble = soluble_mask(amb, top, sigma)
    N, t1 = _example_pair(c, a, b)
    checks = {
        "A4 sigma-nilpotent": c.nil(a),
        "Sylow-5 sigma-nilpotent": c.nil(b),
        "A5 = A4 P": covers(a, b, 60) and literal_product_covers(G, amb.group(a), amb.group(b)),
        "A5 not sigma-soluble": not soluble,
        "AN, BN not sigma-nilpotent for N = A5": N == top and not t1,
    }
    w = {"checks": checks, "A": describe(amb, a), "B": describe(amb, b),
         "script_passed": all(checks.values())}
    return Verdict("example.A5", "A5", str(sigma), soluble, t1, w,
                   "sigma-solubility cannot be dropped from theorem 1", "counterexample")


def check_example_psl27(sigma: SigmaPartition | None = None) -> Verdict:
    """PSL(2,7) = H P with H a Hall {3,7}-subgroup and P Sylow 2: D_sigma_i holds for
    every class but theorem 1's conclusion fails (G is not sigma-soluble)."""
    sigma = sigma or SigmaPartition.parse(EXAMPLE_PSL27)
    G = builtin_group("PSL(2,7)")
    c = _Ctx(G, "PSL(2,7)", sigma)
    amb, top = c.amb, c.top
    normals = normal_masks(amb, top)
    h = hall_masks(amb, top, {3, 7})
    p = hall_masks(amb, top, {2})[0]
    H = h[0] if h else 1
    soluble = soluble_mask(amb, top, sigma)
    N, t1 = _example_pair(c, H, p)
    d_all = {sigma.label(i): d_class_mask(amb, top, sigma, i) for i in sorted(sigma_of(168, sigma))}
    checks = {
        "order 168": top.bit_count() == 168,
        "simple": normals == [1, top],
        "D_{3,7}": hall_flags(amb, top, {3, 7})[2],
        "G = H P, |H| = 21, |P| = 8": H.bit_count() == 21 and p.bit_count() == 8 and covers(H, p, 168),
        "H, P sigma-nilpotent": c.nil(H) and c.nil(p),
        "D_sigma_i for every sigma_i in sigma(G)": all(d_all.values()),
        "AN, BN not sigma-nilpotent for N = G": N == top and not t1,
        "G not sigma-soluble": not soluble,
    }
    w = {"checks": checks, "H": describe(amb, H), "P": describe(amb, p), "D": d_all,
         "script_passed": all(checks.values())}
    return Verdict("example.PSL(2,7)", "PSL(2,7)", str(sigma), soluble, t1, w,
                   "D_sigma_i for all i does not replace sigma-solubility in theorem 1",
                   "counterexample")


# --- lemma battery ----------------------------------------------------------------------

class _Tally:
    def __init__(self):
        self.instances = 0
        self.failures = []

    def add(self, ok, what):
        self.instances += 1
        if not ok:
            self.failures.append(what)

    def verdict(self, name, group, partition, notes=""):
        if not self.instances:
            return Verdict(name, group, partition, False, None, {"instances": 0},
                           notes or "premise never arises", "lemma")
        return Verdict(name, group, partition, True, not self.failures,
                       {"instances": self.instances, "failures": self.failures[:5]}, notes, "lemma")


def _core_mask(amb, top, b):
    C = b
    changed = True
    while changed:
        changed = False
        for g in amb.gens_of(top):
            D = C & amb.conj(C, g)
            if D != C:
                C, changed = D, True
    return C


def _subsets(primes):
    primes = sorted(primes)
    for r in range(1, len(primes) + 1):
        for combo in itertools.combinations(primes, r):
            yield frozenset(combo)


class _Quotients:
    """``G/N`` for every normal ``N``, built once per group."""

    def __init__(self, G, amb, top):
        self.items = []
        for N in normal_masks(amb, top):
            Q = quotient(G, amb.group(N))
            self.items.append((N, Q, Ambient.of(Q)))


def _lemmas_structural(G, name, amb, top, quots):
    """Partition-free lemmas: contain, con, proper, Dproperty, product."""
    order = top.bit_count()
    pairs = pair_masks(amb, top, proper=True)
    out = []

    t = _Tally()
    for a, b in pairs:
        core_b = _core_mask(amb, top, b)
        for L in normal_masks(amb, a):
            if L & b == L:
                t.add(L & core_b == L, f"A={describe(amb, a)} B={describe(amb, b)} L={describe(amb, L)}")
    out.append(t.verdict("lemma.contain", name, "-"))

    t1, t2 = _Tally(), _Tally()
    for a, b in pairs:
        for p in sorted(prime_set(order)):
            gp = hall_masks(amb, top, {p})[0].bit_count()
            ok = any(
                ap.bit_count() * bp.bit_count() == gp * (ap & bp).bit_count()
                and amb.product(ap, bp) == amb.join(ap, bp)
                for ap in hall_masks(amb, a, {p}) for bp in hall_masks(amb, b, {p}))
            t1.add(ok, f"A={describe(amb, a)} B={describe(amb, b)} p={p}")
        conjugates = _class_members(amb, top, a)
        ok = all(covers(x, b, order) for x in conjugates) and not any(
            covers(a, x, order) for x in conjugates)
        t2.add(ok, f"A={describe(amb, a)} B={describe(amb, b)}")
    out.append(t1.verdict("lemma.con(1)", name, "-"))
    out.append(t2.verdict("lemma.con(2)", name, "-"))

    t = _Tally()
    proper_normals = [N for N in normal_masks(amb, top) if N != top]
    reps = [m for m in class_reps(amb, top) if m != top]
    for a in reps:
        for b in reps:
            if covers(a, b, order):
                continue
            conj_b = _class_members(amb, top, b)
            na = a.bit_count()
            if all(na * x.bit_count() == amb.join(a, x).bit_count() * (a & x).bit_count() for x in conj_b):
                ok = any(a & N == a or b & N == b for N in proper_normals)
                t.add(ok, f"A={describe(amb, a)} B={describe(amb, b)}")
    out.append(t.verdict("lemma.proper", name, "-"))

    t = _Tally()
    for pi in _subsets(prime_set(order)):
        if not hall_flags(amb, top, pi)[2]:
            continue
        for N, Q, qamb in quots:
            ok = hall_flags(qamb, qamb.full, pi)[2]
            t.add(ok, f"pi={sorted(pi)} N={describe(amb, N)}")
    out.append(t.verdict("lemma.Dproperty", name, "-"))

    t = _Tally()
    all_pairs = pair_masks(amb, top)
    for pi in _subsets(prime_set(order)):
        for a, b in all_pairs:
            r = product_hall_masks(amb, top, a, b, pi)
            if r.applicable:
                t.add(r.holds, f"pi={sorted(pi)} A={describe(amb, a)} B={describe(amb, b)} {r}")
    out.append(t.verdict("lemma.product", name, "-"))
    return out


def _class_members(amb, top, mask):
    masks = subgroup_masks(amb, top)
    i = masks.index(mask)
    cls = next(c for c in subgroup_classes(amb, top) if i in c)
    return [masks[j] for j in cls]


def _lemmas_sigma(G, name, amb, top, sigma, quots, products):
    label = str(sigma)
    soluble = soluble_mask(amb, top, sigma)
    out = []

    t = _Tally()
    if soluble:
        for m in subgroup_masks(amb, top):
            t.add(soluble_mask(amb, m, sigma), f"subgroup {describe(amb, m)}")
        for N, Q, qamb in quots:
            t.add(soluble_mask(qamb, qamb.full, sigma), f"quotient by {describe(amb, N)}")
        for other, P in products:
            pamb = Ambient.of(P)
            if soluble_mask(Ambient.of(other), Ambient.of(other).full, sigma):
                t.add(soluble_mask(pamb, pamb.full, sigma), f"direct product with order {other.order}")
    for N, Q, qamb in quots:
        if soluble_mask(amb, N, sigma) and soluble_mask(qamb, qamb.full, sigma):
            t.add(soluble, f"extension by {describe(amb, N)}")
    out.append(t.verdict("lemma.soluble", name, label))

    t = _Tally()
    nil_normals = [N for N in normal_masks(amb, top) if nilpotent_mask(amb, N, sigma)]
    for x, y in itertools.combinations_with_replacement(nil_normals, 2):
        t.add(nilpotent_mask(amb, amb.join(x, y), sigma), f"{describe(amb, x)} {describe(amb, y)}")
    out.append(t.verdict("lemma.normalnil", name, label))

    t = _Tally()
    if soluble:
        ids = sorted(sigma_of(top.bit_count(), sigma))
        primes = prime_set(top.bit_count())
        for r in range(1, len(ids) + 1):
            for combo in itertools.combinations(ids, r):
                pi = frozenset().union(*(sigma.primes_in(i, primes) for i in combo))
                t.add(hall_flags(amb, top, pi)[2], f"Pi={sorted(pi)}")
    out.append(t.verdict("lemma.D", name, label))
    return out


def run_lemma_battery(G: Group, name, partitions):
    amb, top = locate(G)
    quots = _Quotients(G, amb, top).items
    products = []
    for other_gens in ("(1 2)", "(1 2 3)"):
        other = build_group(parse_perm_list(other_gens))
        if G.order * other.order <= limits.lattice:
            products.append((other, direct_product(G, other)))
    out = _lemmas_structural(G, name, amb, top, quots)
    for sigma in partitions:
        out += _lemmas_sigma(G, name, amb, top, sigma, quots, products)
    return out


# --- oracle equivalences --------------------------------------------------------------

def run_oracle_checks(G: Group, name, partitions):
    amb, top = locate(G)
    out = []
    finest = SigmaPartition.prime_wise(prime_set(G.order))
    for sigma in partitions:
        t = _Tally()
        for m in subgroup_masks(amb, top):
            t.add(nilpotent_mask(amb, m, sigma) == nilpotent_hall_mask(amb, m, sigma),
                  f"{describe(amb, m)}")
        out.append(Verdict("oracle.nilpotent==hall", name, str(sigma), True, not t.failures,
                           {"instances": t.instances, "failures": t.failures[:5]}, "", "oracle"))
    nil = nilpotent_mask(amb, top, finest)
    sol = soluble_mask(amb, top, finest)
    out.append(Verdict("oracle.primewise-nilpotent==sylow-normal", name, str(finest), True,
                       nil == is_nilpotent_by_sylow_counts(G), {"sigma-nilpotent": nil}, "", "oracle"))
    out.append(Verdict("oracle.primewise-soluble==derived-series", name, str(finest), True,
                       sol == is_soluble(G), {"sigma-soluble": sol}, "", "oracle"))
    t = _Tally()
    for a, b in pair_masks(amb, top):
        t.add(literal_product_covers(G, amb.group(a), amb.group(b)),
              f"A={describe(amb, a)} B={describe(amb, b)}")
    out.append(Verdict("oracle.product-formula==set-product", name, "-", True, not t.failures,
                       {"instances": t.instances, "failures": t.failures[:5]}, "", "oracle"))
    return out


# --- sweep ------------------------------------------------------------------------------

def sweep_partitions(order, extra=()):
    """prime-wise, single class, the two example partitions, then ``extra``."""
    specs = [SigmaPartition.prime_wise(prime_set(order)), SigmaPartition.single_class(),
             SigmaPartition.parse(EXAMPLE_A5), SigmaPartition.parse(EXAMPLE_PSL27)]
    for s in extra:
        if s not in specs:
            specs.append(s)
    return specs


def verify_group(entry: CorpusEntry, extra_partitions=(), only=False):
    """Theorem sweep, lemma battery and oracle checks for one corpus entry.

    With ``only`` the sweep uses ``extra_partitions`` alone.
    """
    G = entry.build()
    name = entry.name
    if only:
        partitions = list(dict.fromkeys(extra_partitions))
    else:
        partitions = sweep_partitions(G.order, extra_partitions)
    out = []
    for sigma in partitions:
        out += verify_theorem1(G, sigma, name)
        out += verify_theorem2(G, sigma, name)
        for i in sigma.class_ids:
            if i in sigma_of(G.order, sigma):
                out.append(verify_theorem3(G, sigma, i, name))
    out += run_lemma_battery(G, name, partitions)
    out += run_oracle_checks(G, name, partitions)
    return out
