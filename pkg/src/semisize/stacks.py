"""Stacks (upward-closed set families), filters and their products on a finite set.

A stack is stored as its antichain of minimal members, each an int bitmask,
sorted ascending by integer value. On a finite ground set every filter is
generated by a single nonempty set ``v0`` and every ultrafilter is a point, so
:class:`FilterKernel` and :class:`PointUltrafilter` carry just that data. The
generic, sweep-based stack operations double as oracles for the closed forms.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Union

import numpy as np

from . import bitsets
from .errors import BoundExceeded, EmptyGenerator, InternalInvariantViolation
from .semigroup import Semigroup

SWEEP_BOUND = int(os.environ.get("SEMISIZE_SWEEP_BOUND", "16"))


@lru_cache(maxsize=32)
def _universe(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


@dataclass(frozen=True)
class Stack:
    n: int
    minimal: tuple[int, ...]

    def __post_init__(self):
        ms = tuple(self.minimal)
        if list(ms) != sorted(set(ms)):
            raise ValueError("antichain must be sorted ascending without duplicates")
        top = bitsets.full(self.n)
        for m in ms:
            if m & ~top:
                raise ValueError(f"set {m:#x} does not fit a ground set of size {self.n}")
        for i, a in enumerate(ms):
            for b in ms[i + 1:]:
                if bitsets.is_subset(a, b) or bitsets.is_subset(b, a):
                    raise ValueError(f"{bitsets.fmt(a)} and {bitsets.fmt(b)} are comparable")

    @classmethod
    def from_members(cls, n: int, members: np.ndarray) -> "Stack":
        """Canonical stack from a boolean membership vector (assumed upward closed)."""
        idx = _universe(n)
        minimal = members.copy()
        for i in range(n):
            bit = 1 << i
            has = (idx & bit) != 0
            minimal &= ~(has & members[idx ^ bit])
        return cls(n, tuple(int(x) for x in np.flatnonzero(minimal)))

    @cached_property
    def members(self) -> np.ndarray:
        idx = _universe(self.n)
        out = np.zeros(1 << self.n, dtype=bool)
        for m in self.minimal:
            out |= (idx & m) == m
        return out

    def __contains__(self, A: int) -> bool:
        return any(m & ~A == 0 for m in self.minimal)

    def issubset(self, other: "Stack") -> bool:
        return all(m in other for m in self.minimal)

    def to_json(self) -> dict:
        return {"n": self.n, "antichain": [bitsets.elements(m) for m in self.minimal]}

    @classmethod
    def from_json(cls, data: dict) -> "Stack":
        n = data["n"]
        return canonical(n, [bitsets.from_elements(s) for s in data["antichain"]])

    def __repr__(self) -> str:
        return f"Stack(n={self.n}, [{', '.join(bitsets.fmt(m) for m in self.minimal)}])"


@dataclass(frozen=True)
class FilterKernel:
    """The filter ``{A : v0 ⊆ A}``."""

    n: int
    v0: int

    def __post_init__(self):
        if self.v0 == 0:
            raise EmptyGenerator("a filter generator must be nonempty")
        if self.v0 & ~bitsets.full(self.n):
            raise ValueError(f"generator {self.v0:#x} does not fit a ground set of size {self.n}")

    @property
    def stack(self) -> Stack:
        return Stack(self.n, (self.v0,))

    def __contains__(self, A: int) -> bool:
        return self.v0 & ~A == 0


@dataclass(frozen=True)
class PointUltrafilter:
    """The principal ultrafilter ``{A : point in A}``."""

    n: int
    point: int

    def __post_init__(self):
        if not 0 <= self.point < self.n:
            raise ValueError(f"point {self.point} not in [0, {self.n})")

    @property
    def v0(self) -> int:
        return 1 << self.point

    @property
    def stack(self) -> Stack:
        return Stack(self.n, (self.v0,))

    def __contains__(self, A: int) -> bool:
        return bool((A >> self.point) & 1)


StackLike = Union[Stack, FilterKernel, PointUltrafilter]


def as_stack(F: StackLike) -> Stack:
    return F if isinstance(F, Stack) else F.stack


def canonical(n: int, sets: Iterable[int]) -> Stack:
    """Inclusion-minimal members of ``sets`` as a canonical stack (no emptiness check)."""
    sets = sorted(set(sets))
    keep = []
    for s in sets:
        # sorted ascending: any proper subset of s has a smaller value
        if not any(bitsets.is_subset(k, s) for k in keep):
            keep.append(s)
    return Stack(n, tuple(keep))


def up_closure(n: int, generators: Iterable[int]) -> Stack:
    generators = list(generators)
    if any(g == 0 for g in generators):
        raise EmptyGenerator("the empty set cannot generate a stack here")
    return canonical(n, generators)


def empty_stack(n: int) -> Stack:
    """The stack with no members."""
    return Stack(n, ())


def power_set_stack(n: int) -> Stack:
    """The degenerate stack of all subsets (contains the empty set)."""
    return Stack(n, (0,))


def point(n: int, x: int) -> PointUltrafilter:
    return PointUltrafilter(n, x)


def member(F: StackLike, A: int) -> bool:
    return A in F


def mesh(F: StackLike) -> Stack:
    """``F* = {A : complement(A) not in F}``."""
    F = as_stack(F)
    idx = _universe(F.n)
    comp = idx ^ bitsets.full(F.n)
    return Stack.from_members(F.n, ~F.members[comp])


def filter_mesh(F: FilterKernel) -> Stack:
    """Closed form of the mesh of a filter: sets meeting ``v0``."""
    return Stack(F.n, tuple(1 << x for x in bitsets.iter_elements(F.v0)))


def stack_union(stacks: Iterable[StackLike], n: int) -> Stack:
    return canonical(n, (m for F in stacks for m in as_stack(F).minimal))


def stack_intersection(stacks: Iterable[StackLike], n: int) -> Stack:
    """Members common to all stacks; the empty intersection is the power set."""
    current = [0]
    for F in stacks:
        ms = as_stack(F).minimal
        current = list({a | b for a in current for b in ms})
        current = list(canonical(n, current).minimal)
    return canonical(n, current)


@lru_cache(maxsize=256)
def _preimage_table(S: Semigroup) -> np.ndarray:
    # row x, column A holds the mask x^{-1}A
    n = S.order
    idx = _universe(n)
    pre = np.zeros((n, 1 << n), dtype=np.int64)
    for x in range(n):
        row = S.table[x]
        acc = np.zeros(1 << n, dtype=np.int64)
        for y in range(n):
            acc |= ((idx >> row[y]) & 1) << y
        pre[x] = acc
    return pre


def _product_sweep(F: Stack, G: Stack, S: Semigroup) -> Stack:
    n = S.order
    pre = _preimage_table(S)
    in_G = G.members[pre]  # in_G[x, A] <=> x^{-1}A in G
    weights = (np.int64(1) << np.arange(n, dtype=np.int64))[:, None]
    trans = (in_G.astype(np.int64) * weights).sum(axis=0)  # trans[A] = {x : x^{-1}A in G}
    return Stack.from_members(n, F.members[trans])


def filter_product(F: FilterKernel | PointUltrafilter, G: FilterKernel | PointUltrafilter,
                   S: Semigroup) -> FilterKernel:
    """Closed form: the filter generated by ``V0*W0``."""
    return FilterKernel(S.order, S.product_set(F.v0, G.v0))


def stack_product(F: StackLike, G: StackLike, S: Semigroup, bound: int | None = None) -> Stack:
    """``F*G = {A : {x : x^{-1}A in G} in F}``.

    Generic stacks are swept over all subsets. Two filters use the closed form,
    cross-checked against the sweep when the order is within ``bound``.
    """
    bound = SWEEP_BOUND if bound is None else bound
    n = S.order
    for X in (F, G):
        if X.n != n:
            raise ValueError(f"ground size {X.n} does not match semigroup order {n}")
    closed = None
    if not isinstance(F, Stack) and not isinstance(G, Stack):
        closed = filter_product(F, G, S).stack
    if n > bound:
        if closed is None:
            raise BoundExceeded(f"stack product sweep limited to order {bound}, got {n}")
        return closed
    swept = _product_sweep(as_stack(F), as_stack(G), S)
    if closed is not None and swept != closed:
        raise InternalInvariantViolation(f"filter product closed form {closed} != sweep {swept}")
    return swept


def filter_closure(F: FilterKernel | PointUltrafilter) -> int:
    """Points whose principal ultrafilter contains F; on a finite set, exactly ``v0``."""
    return F.v0


def translation_set(A: int, G: StackLike, S: Semigroup) -> int:
    """``A'(G) = {x : x^{-1}A in G}``."""
    out = 0
    for x in range(S.order):
        if S.preimage(x, A) in G:
            out |= 1 << x
    return out


def all_stacks(n: int, bound: int = 4) -> Iterator[Stack]:
    """Every upward-closed family on ``{0..n-1}``, including the empty one and the power set."""
    if n > bound:
        raise BoundExceeded(f"stack enumeration limited to n <= {bound}")
    sets = list(range(1 << n))
    # grow antichains in increasing order of their members
    def rec(start, chosen):
        yield Stack(n, tuple(chosen))
        for s in sets[start:]:
            if all(not bitsets.is_subset(c, s) and not bitsets.is_subset(s, c) for c in chosen):
                chosen.append(s)
                yield from rec(s + 1, chosen)
                chosen.pop()

    yield from rec(0, [])
