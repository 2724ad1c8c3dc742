"""Command line: ``semisize {classify,verify,decompose,nat}``.

Exit codes: 0 all pass, 1 counterexample or internal disagreement, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import bitsets
from .checks import THEOREMS
from .errors import InternalInvariantViolation, SemisizeError
from .natsets import (
    EventuallyPeriodicSet,
    ep_classify,
    ep_window_scan,
    factorial_example_window,
    find_ap,
    pws_window_falsify,
    run_stats,
)
from .semigroup import load_semigroup
from .size import (
    RelativeContext,
    decompose_pw,
    is_piecewise_syndetic,
    is_pw_rel_syndetic,
    is_pw_rel_syndetic_idem,
    is_rel_syndetic,
    is_rel_thick,
    is_syndetic,
    is_thick,
    verify_decomposition,
)
from .stacks import FilterKernel
from .verify import SweepSpec, exit_code, parse_theorems, render_jsonl, render_text, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, ensure_ascii=False))
    else:
        for line in text_lines(obj):
            print(line)


def _verdict_lines(obj):
    yield f"A = {bitsets.fmt(bitsets.from_elements(obj['A']))} in a semigroup of order {obj['n']}"
    if obj.get("filter") is not None:
        yield f"F generated by {obj['filter']}, G generated by {obj['g_filter']}"
    for v in obj["verdicts"]:
        wit = "" if not v.get("witness") else "  witness " + json.dumps(v["witness"], sort_keys=True)
        yield f"  {v['notion']}: {str(v['value']).lower()}{wit}"
    for note in obj.get("notes", []):
        yield f"  note: {note}"


def _context(S, args):
    n = S.order
    if args.filter is None:
        return None
    F = FilterKernel(n, bitsets.parse_literal(args.filter, n))
    G = None if args.g_filter is None else FilterKernel(n, bitsets.parse_literal(args.g_filter, n))
    return RelativeContext(S, F, G)


def cmd_classify(args) -> int:
    S = load_semigroup(args.semigroup)
    A = bitsets.parse_literal(args.set, S.order)
    verdicts = [is_syndetic(S, A), is_thick(S, A), is_piecewise_syndetic(S, A)]
    ctx = _context(S, args)
    notes = []
    if ctx is not None:
        verdicts += [is_rel_syndetic(ctx, A), is_rel_thick(ctx, A), is_pw_rel_syndetic(ctx, A)]
        if ctx.closure_is_subsemigroup:
            verdicts.append(is_pw_rel_syndetic_idem(ctx, A))
        else:
            notes.append("closure of F is not a subsemigroup; idempotent characterization skipped")
    obj = {
        "n": S.order,
        "A": bitsets.elements(A),
        "filter": None if ctx is None else bitsets.elements(ctx.v0),
        "g_filter": None if ctx is None else bitsets.elements(ctx.w0),
        "verdicts": [v.to_json() for v in verdicts],
        "notes": notes,
    }
    _emit(obj, args.format, _verdict_lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    S = load_semigroup(args.semigroup)
    A = bitsets.parse_literal(args.set, S.order)
    V0 = S.full if args.filter is None else bitsets.parse_literal(args.filter, S.order)
    ctx = RelativeContext(S, FilterKernel(S.order, V0))
    d = decompose_pw(ctx, A)
    clauses = verify_decomposition(ctx, A, d)
    obj = {"n": S.order, "A": bitsets.elements(A), "filter": bitsets.elements(V0),
           **d.to_json(), "verified": clauses}

    def lines(o):
        yield f"A = {bitsets.fmt(A)}, F generated by {bitsets.fmt(V0)}"
        yield f"  e = {o['e']}"
        yield f"  B = {bitsets.fmt(d.B)}  (A ∪ A'(e))"
        yield f"  C = {bitsets.fmt(d.C)}  (A ∪ (A^c)'(e))"
        for k, v in o["verified"].items():
            yield f"  {k}: {'verified' if v else 'FAILED'}"

    _emit(obj, args.format, lines)
    return EXIT_OK if all(clauses.values()) else EXIT_FAIL


def _ep_from_args(args) -> EventuallyPeriodicSet:
    if args.json is not None:
        return EventuallyPeriodicSet.from_json(json.loads(args.json))
    if args.p is None:
        raise UsageError("give --p (with --R, --T, --prefix) or --json")
    return EventuallyPeriodicSet(args.p, args.T, frozenset(args.R), frozenset(args.prefix))


def cmd_nat(args) -> int:
    if args.nat_cmd == "classify":
        E = _ep_from_args(args)
        obj = {"set": E.to_json(), **ep_classify(E), "scan": ep_window_scan(E)}
        _emit(obj, args.format, lambda o: [
            f"syndetic: {str(o['syndetic']).lower()}",
            f"thick: {str(o['thick']).lower()}",
            f"piecewise_syndetic: {str(o['piecewise_syndetic']).lower()}",
            f"window {o['scan']['window']}: max gap {o['scan']['max_gap']}, max run {o['scan']['max_run']}",
        ])
    elif args.nat_cmd == "find-ap":
        E = _ep_from_args(args)
        a, d = find_ap(E, args.len)
        obj = {"set": E.to_json(), "len": args.len, "a": a, "d": d,
               "terms": [a + k * d for k in range(args.len + 1)]}
        _emit(obj, args.format, lambda o: [f"a={o['a']} d={o['d']}", "terms: " + " ".join(map(str, o["terms"]))])
    else:
        W = factorial_example_window(args.N)
        refuted = pws_window_falsify(W, args.k, args.m)
        obj = {"N": args.N, "k": args.k, "m": args.m, "refuted": refuted, "stats": run_stats(W.members)}
        _emit(obj, args.format, lambda o: [
            (f"refuted up to (k={o['k']}, m={o['m']}, N={o['N']})" if o["refuted"]
             else f"not refuted at (k={o['k']}, m={o['m']}, N={o['N']})"),
        ])
    return EXIT_OK


def cmd_verify(args) -> int:
    extra = tuple(load_semigroup(p).table for p in args.semigroup)
    spec = SweepSpec(
        orders=tuple(args.orders) if args.orders else (() if extra else (1, 2, 3)),
        max_exhaustive_order=args.max_exhaustive_order,
        random_samples=args.random_samples,
        random_instances=args.random_instances,
        seed=args.seed,
        theorems=parse_theorems(args.theorems),
        extra_semigroups=extra,
    )
    records = run_sweep(spec, jobs=args.jobs)
    text = render_jsonl(records) if args.format == "json" else render_text(records)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return exit_code(records)


def build_parser() -> argparse.ArgumentParser:
    env_samples = int(os.environ.get("SEMISIZE_RANDOM_SAMPLES", "10"))
    env_instances = int(os.environ.get("SEMISIZE_RANDOM_INSTANCES", "200"))

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="semisize", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("classify", parents=[common], help="size verdicts for one set")
    p.add_argument("semigroup", help="Cayley table file (JSON or plain text)")
    p.add_argument("--set", required=True, help='comma-separated elements, "" for the empty set')
    p.add_argument("--filter", help="generator V0 of the filter F")
    p.add_argument("--g-filter", help="generator W0 of the filter G (defaults to F)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", parents=[common], help="split a piecewise F-syndetic set")
    p.add_argument("semigroup")
    p.add_argument("--set", required=True)
    p.add_argument("--filter", help="generator V0 of F (default: the whole semigroup)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run theorem sweeps")
    p.add_argument("--orders", type=_int_list, help="semigroup orders to sweep (default 1,2,3)")
    p.add_argument("--theorems", default="all",
                   help=f"'all' or a comma-separated subset of: {', '.join(THEOREMS)}")
    p.add_argument("--max-exhaustive-order", type=int, default=4)
    p.add_argument("--random-samples", type=int, default=env_samples,
                   help="random semigroups per order above the exhaustive bound")
    p.add_argument("--random-instances", type=int, default=env_instances,
                   help="random instances per theorem where a sweep is not exhaustive")
    p.add_argument("--semigroup", action="append", default=[], help="also sweep this table file")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nat", help="subsets of (N, +)")
    nat = p.add_subparsers(dest="nat_cmd", required=True)
    for name in ("classify", "find-ap"):
        q = nat.add_parser(name, parents=[common])
        q.add_argument("--p", type=int)
        q.add_argument("--T", type=int, default=0)
        q.add_argument("--R", type=_int_list, default=[])
        q.add_argument("--prefix", type=_int_list, default=[])
        q.add_argument("--json", help='e.g. {"p": 3, "T": 0, "R": [1], "prefix": []}')
        if name == "find-ap":
            q.add_argument("--len", type=int, default=6)
    q = nat.add_parser("factorial-falsify", parents=[common])
    q.add_argument("--N", type=int, default=100_000)
    q.add_argument("--k", type=int, default=10)
    q.add_argument("--m", type=int, default=100)
    p.set_defaults(func=cmd_nat)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InternalInvariantViolation as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (SemisizeError, UsageError, ValueError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
