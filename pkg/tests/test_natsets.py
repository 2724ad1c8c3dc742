import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semisize import (
    EventuallyPeriodicSet,
    PreconditionViolation,
    WindowSet,
    ep_classify,
    factorial_example_window,
    find_ap,
    pws_window_falsify,
)
from semisize.checks import FACTORIAL_K, FACTORIAL_M, FACTORIAL_N, FACTORIAL_REFUTED
from semisize.errors import BoundExceeded
from semisize.natsets import ep_window_scan, run_stats


class TestClassify:
    def test_one_mod_three(self):
        E = EventuallyPeriodicSet(3, 0, {1})
        assert ep_classify(E) == {"syndetic": True, "thick": False, "piecewise_syndetic": True}
        scan = ep_window_scan(E)
        assert scan["window"] == [1, 90]
        assert (scan["max_gap"], scan["max_run"]) == (3, 1)

    def test_full_residues(self):
        E = EventuallyPeriodicSet(2, 0, {0, 1})
        assert all(ep_classify(E).values())

    def test_finite_set(self):
        E = EventuallyPeriodicSet(4, 10, set(), {2, 3})
        assert not any(ep_classify(E).values())
        assert [x for x in range(1, 20) if x in E] == [2, 3]

    def test_membership_with_prefix(self):
        E = EventuallyPeriodicSet(5, 7, {0}, {1, 6})
        assert [x for x in range(0, 21) if x in E] == [1, 6, 10, 15, 20]
        assert E.window(20).tolist() == [x in E for x in range(1, 21)]

    def test_complement(self):
        E = EventuallyPeriodicSet(5, 7, {0}, {1, 6})
        Ec = E.complement()
        assert all((x in E) != (x in Ec) for x in range(1, 200))

    @pytest.mark.parametrize("bad", [dict(period=0), dict(period=3, residues={3}),
                                     dict(period=3, threshold=4, prefix={4})])
    def test_validation(self, bad):
        with pytest.raises(ValueError):
            EventuallyPeriodicSet(**bad)

    def test_json_roundtrip(self):
        E = EventuallyPeriodicSet(6, 4, {1, 5}, {2})
        assert E.to_json() == {"p": 6, "T": 4, "R": [1, 5], "prefix": [2]}
        assert EventuallyPeriodicSet.from_json(E.to_json()) == E


class TestProgressions:
    def test_residue_class(self):
        assert find_ap(EventuallyPeriodicSet(3, 0, {1}), 6) == (1, 3)

    def test_threshold_shift(self):
        E = EventuallyPeriodicSet(5, 20, {2, 3})
        assert find_ap(E, 4) == (22, 5)

    def test_all_naturals(self):
        assert find_ap(EventuallyPeriodicSet(1, 0, {0}), 10) == (1, 1)

    def test_no_progression_guaranteed(self):
        with pytest.raises(PreconditionViolation):
            find_ap(EventuallyPeriodicSet(4, 10, set(), {2, 3}), 3)


class TestFactorialWindow:
    def test_first_blocks(self):
        assert factorial_example_window(50).elements() == [1, 2, 4, 6, 9, 12, 15, 24, 28, 32, 36, 40]

    def test_truncated(self):
        assert factorial_example_window(5).elements() == [1, 2, 4]

    def test_fifth_block_begins(self):
        base = factorial_example_window(50).elements()
        assert factorial_example_window(125).elements() == base + [120, 125]

    @given(st.integers(1, 3000), st.integers(1, 3000))
    def test_monotone_in_bound(self, a, b):
        n1, n2 = sorted((a, b))
        small = factorial_example_window(n1).members
        big = factorial_example_window(n2).members
        assert np.array_equal(small, big[:n1])


class TestFalsifier:
    def test_factorial_refuted(self):
        W = factorial_example_window(FACTORIAL_N)
        assert pws_window_falsify(W, FACTORIAL_K, FACTORIAL_M) is FACTORIAL_REFUTED

    def test_full_window_survives(self):
        W = WindowSet(500, np.ones(500, dtype=bool))
        assert not pws_window_falsify(W, 3, 40)

    @pytest.mark.parametrize("k", [2, 3, 7])
    def test_evens_survive(self, k):
        xs = np.arange(1, 1001)
        W = WindowSet(1000, xs % 2 == 0)
        assert not pws_window_falsify(W, k, 50)

    def test_bounds_must_fit(self):
        W = WindowSet(10, np.ones(10, dtype=bool))
        with pytest.raises(BoundExceeded):
            pws_window_falsify(W, 5, 5)

    def test_matches_direct_scan(self):
        rng = np.random.default_rng(3)
        for _ in range(30):
            N = 60
            bits = rng.random(N) < 0.6
            W = WindowSet(N, bits)
            k, m = 3, 5
            direct = not any(
                all(any((y + x + h) in W for h in range(1, k + 1)) for x in range(1, m + 1))
                for y in range(1, N - m - k + 1)
            )
            assert pws_window_falsify(W, k, m) == direct


def test_run_stats():
    bits = np.array([1, 1, 0, 0, 0, 1, 0, 1, 1, 1], dtype=bool)
    assert run_stats(bits) == {"max_run": 3, "max_hole": 3, "max_gap": 4, "count": 6}


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12).flatmap(lambda p: st.tuples(
    st.just(p), st.integers(0, 40), st.sets(st.integers(0, p - 1)))))
def test_closed_form_agrees_with_scan(args):
    p, T, R = args
    E = EventuallyPeriodicSet(p, T, R, {x for x in range(1, T) if x % 3 == 0})
    verdict = ep_classify(E)  # raises on disagreement with the window scan
    assert verdict["syndetic"] == (not ep_classify(E.complement())["thick"])
    if R:
        a, d = find_ap(E, 6)
        assert all(a + k * d in E for k in range(7))
