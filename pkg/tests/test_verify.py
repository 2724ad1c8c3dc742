import pytest

from semisize.checks import STACK_THEOREMS, THEOREMS, Theorem
from semisize.errors import BoundExceeded
from semisize.verify import SweepSpec, catalog, exit_code, parse_theorems, render_jsonl, run_sweep


def test_parse_theorems():
    assert parse_theorems("all") == tuple(THEOREMS)
    assert parse_theorems("eq, cpfs") == ("eq", "cpfs")
    with pytest.raises(ValueError, match="nonsense"):
        parse_theorems("eq,nonsense")


def test_spec_validation():
    with pytest.raises(BoundExceeded):
        SweepSpec(orders=(7,))
    with pytest.raises(BoundExceeded):
        SweepSpec(max_exhaustive_order=5)
    with pytest.raises(ValueError):
        SweepSpec(seed=-1)


def test_catalog_sizes():
    assert [n for n, _, _ in catalog(SweepSpec(orders=(1, 2, 3)))].count(3) == 24
    assert len(catalog(SweepSpec(orders=(5,), random_samples=3))) == 3


def test_small_sweep_passes_every_theorem():
    records = run_sweep(SweepSpec(orders=(1, 2), random_instances=20))
    summary = records[-1]
    assert summary["status"] == "pass" and summary["unexercised"] == []
    assert exit_code(records) == 0
    seen = {r["theorem"] for r in records if r["record"] == "theorem"}
    assert seen == set(THEOREMS)


def test_report_is_deterministic():
    spec = SweepSpec(orders=(2, 5), random_samples=2, random_instances=15, seed=11,
                     theorems=("eq", "sup", "stack_assoc", "vdw"))
    assert render_jsonl(run_sweep(spec)) == render_jsonl(run_sweep(spec))


def test_seed_changes_random_part():
    base = dict(orders=(5,), random_samples=2, random_instances=10, theorems=("dual",))
    a = render_jsonl(run_sweep(SweepSpec(seed=1, **base)))
    b = render_jsonl(run_sweep(SweepSpec(seed=2, **base)))
    assert a != b


def test_parallel_matches_serial():
    spec = SweepSpec(orders=(1, 2, 3), random_instances=10, theorems=STACK_THEOREMS)
    assert render_jsonl(run_sweep(spec, jobs=2)) == render_jsonl(run_sweep(spec, jobs=1))


def test_unexercised_theorem_fails_summary(monkeypatch):
    monkeypatch.setitem(THEOREMS, "silent", Theorem("silent", "never yields a case", lambda S, cx: iter(()), "semigroup"))
    records = run_sweep(SweepSpec(orders=(1, 2), theorems=("uli", "silent")))
    summary = records[-1]
    assert summary["unexercised"] == ["silent"] and summary["status"] == "fail"
    assert exit_code(records) == 1


def test_counterexamples_are_dumped(monkeypatch):
    def broken(S, cx):
        for x in range(S.order):
            yield x == 0, None if x == 0 else {"x": x}

    monkeypatch.setitem(THEOREMS, "broken", Theorem("broken", "fails off zero", broken, "semigroup"))
    records = run_sweep(SweepSpec(orders=(3,), theorems=("broken",)))
    rec = records[1]
    assert rec["failed"] == 48 and len(rec["counterexamples"]) == 5
    assert exit_code(records) == 1
