"""Command-line entry point: ``nakayama <command> [options]``.

Exit status is 0 on success, 1 when a verification sweep finds violations and
2 for usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import CYCLIC, KINDS, enumerate_series, format_series, parse_series
from .errors import NakayamaError
from .homology import ModulePoint, format_dim, resolve
from .psi import bound_report, finite_gldim_criterion, psi_profile
from .stratify import (
    DEFAULT_CUTOFF,
    check_ordering,
    classify,
    has_proper_standard_filtration,
    has_standard_filtration,
    is_ss_with_order,
    parse_ordering,
    ss_search,
    standard_lengths,
)
from .verify import (
    SUITES,
    SuiteSpec,
    emit_report,
    failures,
    find_extremal,
    invariant_record,
    resolve_max_len,
    run_suite,
)


def _n_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    try:
        return int(lo), int(hi or lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _max_len(text: str):
    try:
        resolve_max_len(text, 1)
    except NakayamaError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return int(text) if text.isdigit() else text


def _module(text: str) -> ModulePoint:
    try:
        i, k = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i,k, got {text!r}") from None
    return ModulePoint(i, k)


def _csv_list(text: str) -> tuple[str, ...]:
    return tuple(p.strip() for p in text.split(",") if p.strip())


def _dump(doc) -> None:
    print(json.dumps(doc, indent=2))


def cmd_invariants(args) -> int:
    _dump(invariant_record(parse_series(args.series)))
    return 0


def cmd_resolve(args) -> int:
    ks = parse_series(args.series)
    print(resolve(ks, args.module, dual=args.dual))
    return 0


def cmd_psi(args) -> int:
    ks = parse_series(args.series)
    if not ks.is_cyclic:
        raise NakayamaError("psi needs a cyclic series")
    crit = finite_gldim_criterion(ks)
    doc = {
        "series": format_series(ks),
        "profile": psi_profile(ks).as_dict(),
        "criterion": {
            "has_even_pd_simple": crit.has_even_pd_simple,
            "regular_equals_even_set": crit.regular_equals_even_set,
            "psi_single_cycle_on_regular": crit.psi_single_cycle_on_regular,
            "gldim_finite": crit.gldim_finite,
        },
        "bounds": None,
    }
    if crit.gldim_finite:
        doc["bounds"] = {
            name: {"lhs": b.lhs, "rhs": b.rhs, "holds": b.holds, "attained": b.attained}
            for name, b in bound_report(ks).items()
        }
    _dump(doc)
    return 0


def cmd_stratified(args) -> int:
    ks = parse_series(args.series)
    doc = {"series": format_series(ks), **classify(ks).as_dict()}
    if args.order is not None:
        order = check_ordering(ks, parse_ordering(args.order))
        sl = standard_lengths(ks, order)
        projectives = [ModulePoint(i, ks.c(i)) for i in range(1, ks.n + 1)]
        doc["order"] = {
            "order": list(order),
            "delta": list(sl.delta),
            "proper_delta": list(sl.proper_delta),
            "standard_filtered": {str(p): has_standard_filtration(ks, order, p) for p in projectives},
            "proper_standard_filtered": {
                str(p): has_proper_standard_filtration(ks, order, p) for p in projectives
            },
            "standardly_stratified": is_ss_with_order(ks, order),
        }
    if args.search:
        found = ss_search(ks, cutoff=args.cutoff)
        doc["search_witness"] = None if found is None else list(found)
    _dump(doc)
    return 0


def cmd_verify(args) -> int:
    spec = SuiteSpec(
        n_range=args.n,
        max_len=args.max_len,
        kinds=args.kinds,
        suites=args.suites,
        parallelism=args.jobs,
        sample=args.sample,
        seed=args.seed,
        cutoff=args.cutoff,
    )
    results = run_suite(spec)
    report = emit_report(results, args.format)
    bad = failures(results)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report)
        print(f"{len(results)} results, {len(bad)} failures -> {args.out}")
    else:
        sys.stdout.write(report)
    for r in bad:
        print(f"FAIL {format_series(r.series)} {r.property}: {r.details}", file=sys.stderr)
    return 1 if bad else 0


def cmd_enumerate(args) -> int:
    lo, hi = args.n
    series = [
        ks
        for n in range(lo, hi + 1)
        for ks in enumerate_series(n, resolve_max_len(args.max_len, n), args.kind)
    ]
    if args.count:
        print(len(series))
    else:
        for ks in series:
            print(format_series(ks))
    return 0


def cmd_extremal(args) -> int:
    found = find_extremal(args.n, args.max_len, args.kinds)
    _dump(
        [
            {"series": format_series(e.series), "n": e.n, "m": e.m, "gldim": format_dim(e.gldim)}
            for e in found
        ]
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakayama", description="Homological invariants of Nakayama algebras."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full invariant record as JSON")
    p.add_argument("--series", required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("resolve", help="syzygy (or cosyzygy) trace of M(i,k)")
    p.add_argument("--series", required=True)
    p.add_argument("--module", required=True, type=_module, help="i,k")
    p.add_argument("--dual", action="store_true", help="injective coresolution")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("psi", help="psi profile and global-dimension bounds")
    p.add_argument("--series", required=True)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("stratified", help="standard modules and stratification class")
    p.add_argument("--series", required=True)
    p.add_argument("--order", help="comma-separated permutation, last = e_n")
    p.add_argument("--search", action="store_true", help="brute-force ordering search")
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p.set_defaults(func=cmd_stratified)

    p = sub.add_parser("verify", help="exhaustive property sweep")
    p.add_argument("--n", required=True, type=_n_range, help="N or A..B")
    p.add_argument("--max-len", default="3n", type=_max_len, help="integer or e.g. 3n")
    p.add_argument("--suites", type=_csv_list, default=SUITES)
    p.add_argument("--kinds", type=_csv_list, default=(CYCLIC,))
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sample", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list canonical Kupisch series")
    p.add_argument("--n", required=True, type=_n_range)
    p.add_argument("--max-len", required=True, type=_max_len)
    p.add_argument("--kind", choices=KINDS, default=CYCLIC)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extremal", help="series attaining gldim = n + m - 1")
    p.add_argument("--n", required=True, type=_n_range)
    p.add_argument("--max-len", default="3n", type=_max_len)
    p.add_argument("--kinds", type=_csv_list, default=(CYCLIC,))
    p.set_defaults(func=cmd_extremal)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NakayamaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
