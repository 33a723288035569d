"""Command line front end.

    sigmafact analyze --group A5 --sigma "2,3|5|rest"
    sigmafact verify [CORPUS] [--group NAME ...] [--sigma PARTITION ...] [--out report.json]

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import config
from .ambient import locate
from .corpus import builtin_corpus, find_entry, load_corpus
from .errors import GroupError, ParseError, PartitionError, ThresholdExceeded
from .group import build_group
from .hall import complete_hall_sigma_set, satisfies_D_class
from .lattice import centralizer_of_chief_factor, chief_series
from .perm import parse_perm_list
from .sigma import (
    SigmaPartition, is_sigma_central, is_sigma_nilpotent, is_sigma_soluble, prime_set,
    sigma_fitting, sigma_of, sigma_radical,
)
from .theorems import (
    EXAMPLE_A5, EXAMPLE_PSL27, check_example_a5, check_example_psl27, describe, verify_group,
)

log = logging.getLogger("sigmafact")

REPORT_SCHEMA = "sigmafact.verify/1"


class InputError(Exception):
    pass


def _partition(spec, order):
    if spec == "primewise":
        return SigmaPartition.prime_wise(prime_set(order))
    return SigmaPartition.parse(spec)


def _resolve_group(spec):
    """A built-in name, a corpus file holding one entry, or inline generators."""
    path = Path(spec)
    if "(" in spec and not path.exists():
        perms = parse_perm_list(spec)
        return spec, build_group(perms)
    if path.exists():
        entries = load_corpus(path)
        if len(entries) != 1:
            raise InputError(f"{spec} holds {len(entries)} groups; analyze takes one")
        return entries[0].name, entries[0].build()
    e = find_entry(builtin_corpus(), spec)
    if e is not None:
        return e.name, e.build()
    raise InputError(f"unknown group {spec!r} (not a built-in name, file or generator list)")


# --- analyze -----------------------------------------------------------------------

def analyze(G, name, sigma):
    amb, top = locate(G)
    order = G.order
    out = OrderedDict()
    out["group"] = name
    out["order"] = order
    out["primes"] = sorted(prime_set(order))
    out["sigma"] = str(sigma)
    out["sigma(G)"] = [sigma.label(i) for i in sorted(sigma_of(order, sigma))]
    factors = []
    if order > 1:
        for f in chief_series(G):
            C = centralizer_of_chief_factor(G, f)
            factors.append(OrderedDict([
                ("below", f.below.order), ("above", f.above.order),
                ("factor_order", f.factor_order), ("centralizer_index", order // C.order),
                ("sigma_primary", len(sigma_of(f.factor_order, sigma)) <= 1),
                ("sigma_central", is_sigma_central(G, f, sigma)),
            ]))
    out["chief_series"] = factors
    out["sigma_nilpotent"] = is_sigma_nilpotent(G, sigma)
    out["sigma_soluble"] = is_sigma_soluble(G, sigma)
    out["F_sigma"] = describe(amb, amb.mask_of(sigma_fitting(G, sigma)))
    out["R_sigma"] = describe(amb, amb.mask_of(sigma_radical(G, sigma)))
    hs = complete_hall_sigma_set(G, sigma)
    if hs:
        out["complete_hall_sigma_set"] = OrderedDict(
            (sigma.label(i), describe(amb, amb.mask_of(H))) for i, H in hs.members.items())
    else:
        out["complete_hall_sigma_set"] = None
        out["missing_hall_class"] = sigma.label(hs.missing)
    out["D"] = OrderedDict((sigma.label(i), satisfies_D_class(G, sigma, i))
                           for i in sorted(sigma_of(order, sigma)))
    return out


def _print_analysis(rep, stream):
    p = lambda *a: print(*a, file=stream)  # noqa: E731
    p(f"group:          {rep['group']}")
    p(f"order:          {rep['order']}")
    p(f"pi(|G|):        {{{', '.join(map(str, rep['primes']))}}}")
    p(f"sigma:          {rep['sigma']}")
    p(f"sigma(G):       {' | '.join('{' + c + '}' for c in rep['sigma(G)']) or '(empty)'}")
    p("chief series:")
    for f in rep["chief_series"]:
        p(f"  {f['below']:>5} < {f['above']:<5} factor {f['factor_order']:<4} "
          f"|G:C| {f['centralizer_index']:<4} sigma-central: {str(f['sigma_central']).lower()}")
    p(f"sigma-nilpotent: {str(rep['sigma_nilpotent']).lower()}")
    p(f"sigma-soluble:   {str(rep['sigma_soluble']).lower()}")
    p(f"F_sigma:        {rep['F_sigma']}")
    p(f"R_sigma:        {rep['R_sigma']}")
    if rep["complete_hall_sigma_set"] is not None:
        p("complete Hall sigma-set:")
        for cls, H in rep["complete_hall_sigma_set"].items():
            p(f"  {{{cls}}}: {H}")
    else:
        p(f"complete Hall sigma-set: none (no Hall subgroup for class {{{rep['missing_hall_class']}}})")
    for cls, ok in rep["D"].items():
        p(f"D_{{{cls}}}: {str(ok).lower()}")


def cmd_analyze(args, stream=sys.stdout):
    name, G = _resolve_group(args.group)
    sigma = _partition(args.sigma, G.order)
    rep = analyze(G, name, sigma)
    _print_analysis(rep, stream)
    if args.out:
        Path(args.out).write_text(json.dumps(rep, indent=1) + "\n")
    return 0


# --- verify ------------------------------------------------------------------------

def _worker_init(lattice, elements):
    config.limits.lattice = lattice
    config.limits.elements = elements


def _run_entry(job):
    entry, specs = job
    G = entry.build()
    extra = [_partition(s, G.order) for s in specs] if specs else ()
    return [v.to_dict() for v in verify_group(entry, extra, only=bool(specs))]


def _summarise(verdicts, stream):
    groups = OrderedDict()
    for v in verdicts:
        groups.setdefault((v["group"], v["name"].split("[")[0], v["partition"]), []).append(v)
    for (group, name, part), vs in groups.items():
        applicable = [v for v in vs if v["hypotheses_met"]]
        bad = [v for v in vs if not v["passed"]]
        na = OrderedDict()
        for v in vs:
            if not v["hypotheses_met"] and v["kind"] != "counterexample":
                na[v["notes"]] = na.get(v["notes"], 0) + 1
        if vs[0]["kind"] == "counterexample":
            line = f"  {name:<44} [{part}] script " + ("passed" if not bad else "FAILED")
            print(line, file=stream)
            for v in vs:
                for check, ok in v["witnesses"].get("checks", {}).items():
                    print(f"    {'ok  ' if ok else 'FAIL'} {check}", file=stream)
            continue
        line = f"  {name:<44} [{part}] checked {len(applicable)}, failed {len(bad)}"
        if na:
            line += "; not applicable: " + "; ".join(f"{k} x{n}" for k, n in na.items())
        print(line, file=stream)
        for v in bad:
            print(f"    FAILED {v['name']} {json.dumps(v['witnesses'], sort_keys=True)}", file=stream)


def cmd_verify(args, stream=sys.stdout):
    try:
        entries = load_corpus(args.corpus) if args.corpus else builtin_corpus()
    except ParseError as exc:
        raise InputError(str(exc)) from None
    if args.group:
        picked = [find_entry(entries, g) for g in args.group]
        missing = [g for g, e in zip(args.group, picked) if e is None]
        if missing:
            raise InputError(f"no corpus entry named {', '.join(missing)}")
        entries = [e for e in entries if e in picked]
    for spec in args.sigma or ():
        if spec != "primewise":
            SigmaPartition.parse(spec)

    corpus_status = []
    jobs = []
    for e in entries:
        order = e.build().order  # checks expected orders up front
        if args.max_order is not None and order > args.max_order:
            corpus_status.append({"name": e.name, "order": order, "status": "skipped",
                                  "reason": f"order {order} > {args.max_order}"})
            continue
        if order > config.limits.lattice:
            corpus_status.append({"name": e.name, "order": order, "status": "skipped",
                                  "reason": f"order {order} > lattice threshold {config.limits.lattice}"})
            continue
        corpus_status.append({"name": e.name, "order": order, "status": "checked"})
        jobs.append((e, tuple(args.sigma or ())))

    if args.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.threads, initializer=_worker_init,
                                 initargs=(config.limits.lattice, config.limits.elements)) as pool:
            results = list(pool.map(_run_entry, jobs))
    else:
        results = [_run_entry(j) for j in jobs]

    scripts = []
    scripts.append(check_example_a5(SigmaPartition.parse(EXAMPLE_A5)).to_dict())
    if args.max_order is None or args.max_order >= 168:
        scripts.append(check_example_psl27(SigmaPartition.parse(EXAMPLE_PSL27)).to_dict())
    else:
        corpus_status.append({"name": "example.PSL(2,7)", "order": 168, "status": "skipped",
                              "reason": f"order 168 > {args.max_order}"})

    verdicts = [v for r in results for v in r] + scripts
    failures = [v for v in verdicts if not v["passed"]]

    for st in corpus_status:
        if st["status"] == "skipped":
            print(f"{st['name']}: skipped ({st['reason']})", file=stream)
    k = 0
    for st in corpus_status:
        if st["status"] != "checked":
            continue
        print(f"{st['name']} (order {st['order']})", file=stream)
        _summarise(results[k], stream)
        k += 1
    print("counterexample scripts", file=stream)
    _summarise(scripts, stream)
    applicable = sum(1 for v in verdicts if v["hypotheses_met"])
    print(f"verdicts: {len(verdicts)}, hypotheses met: {applicable}, failures: {len(failures)}",
          file=stream)
    print("RESULT: " + ("PASS" if not failures else "FAIL"), file=stream)

    if args.out:
        report = OrderedDict([
            ("schema", REPORT_SCHEMA),
            ("corpus", corpus_status),
            ("partitions", list(args.sigma) if args.sigma else
             ["primewise", "rest", EXAMPLE_A5, EXAMPLE_PSL27]),
            ("summary", OrderedDict([("verdicts", len(verdicts)), ("hypotheses_met", applicable),
                                     ("failures", len(failures)), ("passed", not failures)])),
            ("verdicts", verdicts),
        ])
        Path(args.out).write_text(json.dumps(report, indent=1, sort_keys=False) + "\n")
    return 0 if not failures else 1


# --- entry point -----------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="sigmafact", description=__doc__.split("\n\n")[0])
    ap.add_argument("--lattice-threshold", type=int, default=None,
                    help="largest group whose subgroup lattice is enumerated (default 400)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="sigma-structure of one group")
    a.add_argument("--group", required=True, help="built-in name, corpus file or generators")
    a.add_argument("--sigma", default="rest", help='partition, e.g. "2,3|5|rest" or primewise')
    a.add_argument("--out", help="also write the analysis as JSON")
    a.add_argument("--lattice-threshold", type=int, default=None, dest="lattice_threshold_sub")

    v = sub.add_parser("verify", help="theorem sweep, lemma battery and the counterexample scripts")
    v.add_argument("corpus", nargs="?", help="corpus file (default: built-in corpus)")
    v.add_argument("--group", action="append", help="restrict to these entries (repeatable)")
    v.add_argument("--sigma", action="append",
                   help="partition to sweep (repeatable; replaces the default set)")
    v.add_argument("--max-order", type=int, default=None)
    v.add_argument("--out", help="write the machine-readable report here")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--lattice-threshold", type=int, default=None, dest="lattice_threshold_sub")
    return ap


def main(argv=None, stream=None):
    stream = stream or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    bound = args.lattice_threshold_sub or args.lattice_threshold
    if bound is not None:
        config.limits.lattice = bound
    try:
        if args.command == "analyze":
            return cmd_analyze(args, stream)
        return cmd_verify(args, stream)
    except (ParseError, PartitionError, InputError, ThresholdExceeded, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
