"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--groups S4,A5,S5,PSL(2,7)]

Each timing builds a fresh ambient (so no memo is shared) and enumerates the
full subgroup lattice plus the normal subgroups; a second section times the
raw kernels on random inputs.  Best of ``--repeat`` runs is reported.
"""
import argparse
import random
import time

from sigmafact import kernels
from sigmafact.ambient import Ambient
from sigmafact.corpus import builtin_group
from sigmafact.lattice import normal_masks, subgroup_masks


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def lattice_job(G, backend):
    def run():
        amb = Ambient(G, backend=backend)
        subgroup_masks(amb, amb.full)
        normal_masks(amb, amb.full)
    return run


def kernel_job(G, backend, rounds=2000):
    amb = Ambient(G, backend=backend)
    rng = random.Random(0)
    cases = [(rng.sample(range(amb.n), 2), rng.sample(range(amb.n), 12), rng.sample(range(amb.n), 12))
             for _ in range(rounds)]

    def run():
        for gens, left, right in cases:
            backend.closure(amb.tab, 1, gens, 0)
            backend.set_product(amb.tab, left, right)
    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--groups", default="S4,GL(2,3),A5,S5,PSL(2,7)")
    args = ap.parse_args()
    if kernels.compiled is None:
        raise SystemExit("compiled kernels not built; reinstall with Cython available")
    names = _split(args.groups)
    backends = [("python", kernels.python), ("cython", kernels.compiled)]
    print(f"{'task':<28}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for title, make in (("lattice", lattice_job), ("kernels x2000", kernel_job)):
        for name in names:
            G = builtin_group(name)
            G.elements  # build outside the timed region
            t = [best(make(G, b), args.repeat) for _, b in backends]
            print(f"{title + ' ' + name:<28}{t[0]:>10.4f}{t[1]:>10.4f}{t[0] / t[1]:>8.1f}x")


def _split(text):
    # group names such as PSL(2,7) contain commas, so split outside parentheses
    out, depth, cur = [], 0, ""
    for ch in text:
        depth += (ch == "(") - (ch == ")")
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


if __name__ == "__main__":
    main()
