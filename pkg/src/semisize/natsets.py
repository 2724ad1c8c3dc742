"""Size notions for subsets of the additive semigroup (N, +), N = {1, 2, 3, ...}.

Eventually periodic sets get exact closed-form answers. General sets can
only be examined through a finite window, and a window scan can refute
piecewise syndeticity only up to the bounds it was run with.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import BoundExceeded, InternalInvariantViolation, PreconditionViolation


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    """Membership is ``x in prefix`` below ``threshold`` and ``x % period in residues`` from there on."""

    period: int
    threshold: int = 0
    residues: frozenset[int] = frozenset()
    prefix: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be at least 1")
        if self.threshold < 0:
            raise ValueError("threshold must be nonnegative")
        object.__setattr__(self, "residues", frozenset(self.residues))
        object.__setattr__(self, "prefix", frozenset(self.prefix))
        if any(not 0 <= r < self.period for r in self.residues):
            raise ValueError(f"residues must lie in [0, {self.period})")
        if any(not 1 <= x < self.threshold for x in self.prefix):
            raise ValueError(f"prefix must lie in [1, {self.threshold})")

    def __contains__(self, x: int) -> bool:
        if x < 1:
            return False
        if x < self.threshold:
            return x in self.prefix
        return x % self.period in self.residues

    def complement(self) -> "EventuallyPeriodicSet":
        return EventuallyPeriodicSet(
            self.period,
            self.threshold,
            frozenset(range(self.period)) - self.residues,
            frozenset(range(1, self.threshold)) - self.prefix,
        )

    def window(self, N: int, start: int = 1) -> np.ndarray:
        """Membership of ``start, ..., start + N - 1`` as a boolean array."""
        xs = np.arange(start, start + N)
        out = np.isin(xs % self.period, sorted(self.residues)) & (xs >= self.threshold)
        low = xs < self.threshold
        out[low] = np.isin(xs[low], sorted(self.prefix))
        return out

    def to_json(self) -> dict:
        return {"p": self.period, "T": self.threshold, "R": sorted(self.residues),
                "prefix": sorted(self.prefix)}

    @classmethod
    def from_json(cls, data: dict) -> "EventuallyPeriodicSet":
        return cls(int(data["p"]), int(data.get("T", 0)), frozenset(data.get("R", ())),
                   frozenset(data.get("prefix", ())))


@dataclass(frozen=True)
class WindowSet:
    """A subset of ``[1, bound]``; ``members[i]`` says whether ``i + 1`` belongs."""

    bound: int
    members: np.ndarray

    def __post_init__(self):
        if len(self.members) != self.bound:
            raise ValueError(f"expected {self.bound} membership bits, got {len(self.members)}")

    def elements(self) -> list[int]:
        return [int(i) + 1 for i in np.flatnonzero(self.members)]

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.bound and bool(self.members[x - 1])


def run_stats(bits: np.ndarray) -> dict[str, int]:
    """Longest run of members, longest run of non-members, and the largest gap between members."""

    def longest(b):
        best = cur = 0
        for v in b:
            cur = cur + 1 if v else 0
            best = max(best, cur)
        return best

    idx = np.flatnonzero(bits)
    max_gap = int(np.diff(idx).max()) if len(idx) > 1 else len(bits)
    return {
        "max_run": longest(bits),
        "max_hole": longest(~bits),
        "max_gap": max_gap,
        "count": int(len(idx)),
    }


def ep_window_scan(E: EventuallyPeriodicSet) -> dict:
    """Empirical syndetic/thick/PS evidence from the periodic tail of ``E``.

    The tail window starts at the threshold and has length ``10 p^2``. Bounded
    gaps show up as holes shorter than half the window, thickness as a run of
    at least half the window, and piecewise syndeticity as surviving the
    bounded falsifier with ``k = m = p``.
    """
    L = 10 * E.period ** 2
    start = max(E.threshold, 1)
    tail = E.window(L, start)
    stats = run_stats(tail)
    ps = not pws_window_falsify(WindowSet(L, tail), E.period, E.period)
    return {
        "window": [start, start + L - 1],
        **stats,
        "syndetic": stats["max_hole"] < L // 2,
        "thick": stats["max_run"] >= L // 2,
        "piecewise_syndetic": ps,
    }


def ep_classify(E: EventuallyPeriodicSet, check: bool = True) -> dict[str, bool]:
    """Closed-form size classes of an eventually periodic set, cross-checked by a window scan."""
    verdict = {
        "syndetic": bool(E.residues),
        "thick": len(E.residues) == E.period,
        "piecewise_syndetic": bool(E.residues),
    }
    if check:
        scan = ep_window_scan(E)
        for k, v in verdict.items():
            if scan[k] != v:
                raise InternalInvariantViolation(f"{k}: closed form {v}, window scan {scan[k]} for {E}")
    return verdict


def find_ap(E: EventuallyPeriodicSet, length: int) -> tuple[int, int]:
    """``(a, d)`` with ``a, a+d, ..., a+length*d`` all in ``E`` (length + 1 terms)."""
    if length < 1:
        raise ValueError("length must be at least 1")
    if not E.residues:
        raise PreconditionViolation(f"{E} is not piecewise syndetic; no progression is guaranteed")
    start = max(E.threshold, 1)
    a = min(start + (r - start) % E.period for r in E.residues)
    d = E.period
    for k in range(length + 1):
        if a + k * d not in E:
            raise InternalInvariantViolation(f"term {a + k * d} of the progression is missing")
    return a, d


def factorial_blocks(N: int):
    """Yield ``(n, [n!, n!+n, ..., n!+n^2] ∩ [1, N])`` until blocks start beyond N."""
    n = 1
    while factorial(n) <= N:
        f = factorial(n)
        yield n, [f + k * n for k in range(n + 1) if f + k * n <= N]
        n += 1


def factorial_example_window(N: int) -> WindowSet:
    if N < 1:
        raise ValueError("N must be at least 1")
    members = np.zeros(N, dtype=bool)
    for _, block in factorial_blocks(N):
        members[np.asarray(block, dtype=np.int64) - 1] = True
    return WindowSet(N, members)


def pws_window_falsify(W: WindowSet, h_bound: int, x_bound: int) -> bool:
    """True iff no ``y <= N - m - k`` has ``y + x + h`` in W for every x <= m and some h <= k.

    That is: for ``H = [1, k]`` (and hence every ``H ⊆ [1, k]``) the translates
    ``x^{-1}(⋃_h h^{-1}W)``, ``x in [1, m]``, have no common point in the
    window. A True result means "refuted up to (k, m, N)" and nothing more.
    """
    N, k, m = W.bound, h_bound, x_bound
    if k < 1 or m < 1:
        raise ValueError("bounds must be positive")
    if k + m >= N:
        raise BoundExceeded(f"k + m = {k + m} must be below the window bound {N}")
    bits = W.members
    # near[y-1]: some h in [1, k] has y + h in W, for y in [1, N - k]
    near = np.zeros(N - k, dtype=bool)
    for h in range(1, k + 1):
        near |= bits[h:N - k + h]
    # good[y-1]: y + x in near for all x in [1, m], for y in [1, N - m - k]
    span = N - m - k
    good = np.ones(span, dtype=bool)
    for x in range(1, m + 1):
        good &= near[x:x + span]
    return not good.any()
