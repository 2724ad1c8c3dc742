"""Sweep orchestration: enumerate semigroups, run theorem checks, assemble a report.

Reports are JSON lines: one header, one record per (theorem, order), one
summary. Nothing time-dependent goes into the report, so the same parameters and
seed always give byte-identical output.
"""

from __future__ import annotations

import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Sequence

from . import __version__
from .checks import THEOREMS, CheckContext
from .errors import BoundExceeded
from .semigroup import EXHAUSTIVE_ORDER_BOUND, Semigroup, enumerate_semigroups, random_semigroup

log = logging.getLogger(__name__)

MAX_DUMPS = 5
MAX_ORDER = 6


@dataclass(frozen=True)
class SweepSpec:
    orders: tuple[int, ...] = (1, 2, 3)
    max_exhaustive_order: int = 4
    random_samples: int = 10
    random_instances: int = 200
    seed: int = 0
    theorems: tuple[str, ...] = tuple(THEOREMS)
    pair_exhaustive_order: int = 3
    stack_exhaustive_order: int = 3
    extra_semigroups: tuple[tuple[tuple[int, ...], ...], ...] = field(default=())

    def __post_init__(self):
        if self.max_exhaustive_order > EXHAUSTIVE_ORDER_BOUND:
            raise BoundExceeded(f"max_exhaustive_order must be at most {EXHAUSTIVE_ORDER_BOUND}")
        for n in self.orders:
            if not 1 <= n <= MAX_ORDER:
                raise BoundExceeded(f"orders must lie in [1, {MAX_ORDER}], got {n}")
        unknown = [t for t in self.theorems if t not in THEOREMS]
        if unknown:
            raise ValueError(f"unknown theorem identifiers: {', '.join(unknown)}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def parse_theorems(text: str) -> tuple[str, ...]:
    if text.strip() == "all":
        return tuple(THEOREMS)
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [t for t in names if t not in THEOREMS]
    if unknown:
        raise ValueError(f"unknown theorem identifiers: {', '.join(unknown)}; known: {', '.join(THEOREMS)}")
    return names


def catalog(spec: SweepSpec) -> list[tuple[int, int, Semigroup]]:
    """(order, index, semigroup) triples to sweep, in a fixed order."""
    out = []
    for n in sorted(set(spec.orders)):
        if n <= spec.max_exhaustive_order:
            semigroups = list(enumerate_semigroups(n, dedupe=True))
        else:
            rng = random.Random(f"{spec.seed}:sample:{n}")
            semigroups = [random_semigroup(n, rng) for _ in range(spec.random_samples)]
        out.extend((n, i, S) for i, S in enumerate(semigroups))
    for j, table in enumerate(spec.extra_semigroups):
        S = Semigroup(table)
        out.append((S.order, -1 - j, S))
    return out


def _run_semigroup(args):
    spec, n, idx, S = args
    results = {}
    for ident in spec.theorems:
        thm = THEOREMS[ident]
        if thm.kind != "semigroup":
            continue
        cx = CheckContext(
            rng=random.Random(f"{spec.seed}:{n}:{idx}:{ident}"),
            exhaustive_sets=n <= spec.max_exhaustive_order,
            exhaustive_pairs=n <= spec.pair_exhaustive_order,
            exhaustive_stacks=n <= spec.stack_exhaustive_order,
            random_instances=spec.random_instances,
        )
        results[ident] = _tally(thm.check(S, cx))
    return n, idx, results


def _run_nat(args):
    spec, ident = args
    return ident, _tally(THEOREMS[ident].check(random.Random(f"{spec.seed}:nat:{ident}")))


def _tally(cases):
    total = passed = 0
    dumps = []
    for ok, payload in cases:
        total += 1
        if ok:
            passed += 1
        elif len(dumps) < MAX_DUMPS:
            dumps.append(payload)
    return total, passed, dumps


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[dict]:
    """Run every selected check and return the report records."""
    t0 = time.perf_counter()
    tasks = [(spec, n, idx, S) for n, idx, S in catalog(spec)]
    nat = [(spec, t) for t in spec.theorems if THEOREMS[t].kind == "nat"]
    log.info("sweeping %d semigroups, %d theorems", len(tasks), len(spec.theorems))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            sg_results = list(pool.map(_run_semigroup, tasks, chunksize=4))
            nat_results = list(pool.map(_run_nat, nat))
    else:
        sg_results = [_run_semigroup(t) for t in tasks]
        nat_results = [_run_nat(t) for t in nat]

    merged: dict[tuple[str, int], dict] = {}
    for n, idx, results in sorted(sg_results, key=lambda r: (r[0], r[1])):
        for ident, (total, passed, dumps) in results.items():
            rec = merged.setdefault((ident, n), {
                "record": "theorem", "theorem": ident, "title": THEOREMS[ident].title,
                "order": n, "semigroups": 0, "cases": 0, "passed": 0, "failed": 0, "counterexamples": [],
            })
            rec["semigroups"] += 1
            rec["cases"] += total
            rec["passed"] += passed
            rec["failed"] += total - passed
            room = MAX_DUMPS - len(rec["counterexamples"])
            rec["counterexamples"].extend(dumps[:room])
    for ident, (total, passed, dumps) in nat_results:
        merged[(ident, 0)] = {
            "record": "theorem", "theorem": ident, "title": THEOREMS[ident].title, "order": None,
            "semigroups": 0, "cases": total, "passed": passed, "failed": total - passed,
            "counterexamples": dumps,
        }

    order_of = {t: i for i, t in enumerate(THEOREMS)}
    # theorems that do not apply at an order (e.g. brute-force oracles past their bound) leave no record
    records = [merged[k] for k in sorted(merged, key=lambda k: (order_of[k[0]], k[1])) if merged[k]["cases"]]
    exercised = {r["theorem"] for r in records if r["cases"] > 0}
    unexercised = [t for t in spec.theorems if t not in exercised]
    failed = sum(r["failed"] for r in records)
    header = {"record": "header", "tool": "semisize", "version": __version__, "spec": asdict(spec)}
    summary = {
        "record": "summary",
        "cases": sum(r["cases"] for r in records),
        "failed": failed,
        "unexercised": unexercised,
        "status": "pass" if failed == 0 and not unexercised else "fail",
    }
    log.info("sweep finished in %.1fs", time.perf_counter() - t0)
    return [header, *records, summary]


def exit_code(records: Sequence[dict]) -> int:
    return 0 if records[-1]["status"] == "pass" else 1


def render_jsonl(records: Sequence[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n" for r in records)


def render_text(records: Sequence[dict]) -> str:
    lines = []
    for r in records:
        if r["record"] == "theorem":
            order = "N" if r["order"] is None else r["order"]
            mark = "PASS" if r["failed"] == 0 and r["cases"] > 0 else "FAIL"
            lines.append(f"{mark} {r['theorem']:<16} order={order:<2} cases={r['cases']:<8} "
                         f"failed={r['failed']}  {r['title']}")
            for c in r["counterexamples"]:
                lines.append("    counterexample: " + json.dumps(c, sort_keys=True, ensure_ascii=False))
        elif r["record"] == "summary":
            lines.append(f"{r['status'].upper()}: {r['cases']} cases, {r['failed']} failed"
                         + (f", unexercised: {', '.join(r['unexercised'])}" if r["unexercised"] else ""))
    return "\n".join(lines) + "\n"
