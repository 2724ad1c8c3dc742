"""Finite semigroups given by Cayley tables.

Elements are the indices ``0..n-1`` and ``table[a][b]`` is the product ``a*b``.
Subsets are int bitmasks (see :mod:`semisize.bitsets`).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterator, Sequence

from . import bitsets
from .errors import (
    AssociativityFailure,
    BoundExceeded,
    InternalInvariantViolation,
    OutOfRangeEntry,
)

SUBSET_SCAN_BOUND = 8
SUBSEMIGROUP_BOUND = 8
EXHAUSTIVE_ORDER_BOUND = 4


@dataclass(frozen=True)
class Semigroup:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.table)
        if n < 1:
            raise ValueError("a semigroup needs at least one element")
        for a, row in enumerate(self.table):
            if len(row) != n:
                raise ValueError(f"row {a} has {len(row)} entries, expected {n}")
            for b, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise OutOfRangeEntry(a, b, v)
        if self.labels is not None and len(self.labels) != n:
            raise ValueError(f"{len(self.labels)} labels for {n} elements")
        bad = first_associativity_failure(self.table)
        if bad is not None:
            raise AssociativityFailure(*bad)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def full(self) -> int:
        return bitsets.full(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product_set(self, X: int, Y: int) -> int:
        """The set ``X*Y = {xy : x in X, y in Y}``."""
        out = 0
        ys = bitsets.elements(Y)
        for x in bitsets.iter_elements(X):
            row = self.table[x]
            for y in ys:
                out |= 1 << row[y]
        return out

    @cached_property
    def _left_rows(self) -> tuple[tuple[int, ...], ...]:
        # _left_rows[h][a] = mask of x with h*x == a
        n = self.order
        rows = []
        for h in range(n):
            r = [0] * n
            for x in range(n):
                r[self.table[h][x]] |= 1 << x
            rows.append(tuple(r))
        return tuple(rows)

    def preimage(self, h: int, A: int) -> int:
        """``h^{-1}A = {x : h*x in A}``."""
        out = 0
        rows = self._left_rows[h]
        for a in bitsets.iter_elements(A):
            out |= rows[a]
        return out

    def to_json(self) -> dict:
        d: dict = {"n": self.order, "table": [list(r) for r in self.table]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    def __repr__(self) -> str:
        return f"Semigroup({[list(r) for r in self.table]})"


def associativity_failures(table: Sequence[Sequence[int]]) -> Iterator[tuple[int, int, int, int, int]]:
    """Yield ``(a, b, c, (ab)c, a(bc))`` for every bad triple, lexicographically."""
    n = len(table)
    for a in range(n):
        ta = table[a]
        for b in range(n):
            ab = ta[b]
            tb = table[b]
            for c in range(n):
                left = table[ab][c]
                right = ta[tb[c]]
                if left != right:
                    yield a, b, c, left, right


def first_associativity_failure(table: Sequence[Sequence[int]]):
    return next(associativity_failures(table), None)


def validate_semigroup(table, labels=None) -> Semigroup:
    """Build a :class:`Semigroup` from any n-by-n integer array-like.

    Raises ``OutOfRangeEntry`` or ``AssociativityFailure`` (first bad triple in
    lexicographic order).
    """
    rows = []
    n = len(table)
    for a, row in enumerate(table):
        row = list(row)
        for b, v in enumerate(row):
            try:
                iv = int(v)
            except (TypeError, ValueError):
                raise OutOfRangeEntry(a, b, v) from None
            if iv != v or not 0 <= iv < n:
                raise OutOfRangeEntry(a, b, v)
            row[b] = iv
        rows.append(tuple(row))
    return Semigroup(tuple(rows), None if labels is None else tuple(str(s) for s in labels))


def make_named(kind: str, n: int) -> Semigroup:
    """Standard fixtures: ``cyclic_add``, ``cyclic_mul``, ``left_zero``, ``right_zero``."""
    if n < 1:
        raise ValueError("n must be positive")
    makers = {
        "cyclic_add": lambda a, b: (a + b) % n,
        "cyclic_mul": lambda a, b: (a * b) % n,
        "left_zero": lambda a, b: a,
        "right_zero": lambda a, b: b,
    }
    try:
        f = makers[kind]
    except KeyError:
        raise ValueError(f"unknown semigroup kind {kind!r}; choose from {sorted(makers)}") from None
    return Semigroup(tuple(tuple(f(a, b) for b in range(n)) for a in range(n)))


# -- ideals -----------------------------------------------------------------

def left_translate(S: Semigroup, s: int, X: int) -> int:
    """``sX = {s*x : x in X}``."""
    row = S.table[s]
    out = 0
    for x in bitsets.iter_elements(X):
        out |= 1 << row[x]
    return out


def is_left_ideal(S: Semigroup, L: int) -> bool:
    if L == 0:
        return False
    return bitsets.is_subset(S.product_set(S.full, L), L)


def is_right_ideal(S: Semigroup, R: int) -> bool:
    if R == 0:
        return False
    return bitsets.is_subset(S.product_set(R, S.full), R)


def is_ideal(S: Semigroup, I: int) -> bool:
    return is_left_ideal(S, I) and is_right_ideal(S, I)


def principal_left_ideal(S: Semigroup, a: int) -> int:
    """``{a} ∪ Sa``; the smallest left ideal containing ``a``."""
    return (1 << a) | S.product_set(S.full, 1 << a)


def _has_proper_left_ideal(S: Semigroup, L: int) -> bool:
    for sub in bitsets.submasks(L):
        if sub and sub != L and is_left_ideal(S, sub):
            return True
    return False


def minimal_left_ideals(S: Semigroup) -> list[int]:
    """All minimal left ideals, sorted by lowest member.

    Every minimal left ideal is principal at each of its points, so it
    suffices to keep the inclusion-minimal principal left ideals. Survivors are
    re-checked by subset scan for small orders, by re-deriving the principal
    ideal at every point otherwise.
    """
    principals = sorted({principal_left_ideal(S, a) for a in range(S.order)})
    minimal = [
        L for L in principals
        if not any(M != L and bitsets.is_subset(M, L) for M in principals)
    ]
    for L in minimal:
        if S.order <= SUBSET_SCAN_BOUND:
            ok = not _has_proper_left_ideal(S, L)
        else:
            ok = all(principal_left_ideal(S, a) == L for a in bitsets.iter_elements(L))
        if not ok:
            raise InternalInvariantViolation(f"{bitsets.fmt(L)} is not a minimal left ideal")
    return sorted(minimal, key=bitsets.lowest)


@dataclass(frozen=True)
class KernelReport:
    minimal_left_ideals: tuple[int, ...]
    kernel: int
    idempotents: int
    minimal_idempotents: int


def idempotents(S: Semigroup) -> int:
    return bitsets.from_elements(x for x in range(S.order) if S.table[x][x] == x)


def kernel(S: Semigroup) -> KernelReport:
    """Smallest two-sided ideal K(S) as the union of the minimal left ideals."""
    lefts = minimal_left_ideals(S)
    K = 0
    for L in lefts:
        K |= L
    E = idempotents(S)
    report = KernelReport(tuple(lefts), K, E, E & K)
    if not is_ideal(S, K):
        raise InternalInvariantViolation(f"kernel {bitsets.fmt(K)} is not a two-sided ideal")
    if any(L & E == 0 for L in lefts):
        raise InternalInvariantViolation("a minimal left ideal has no idempotent")
    if report.minimal_idempotents == 0:
        raise InternalInvariantViolation("no minimal idempotent")
    return report


# -- subsemigroups ----------------------------------------------------------

def is_closed(S: Semigroup, V: int) -> bool:
    return bitsets.is_subset(S.product_set(V, V), V)


def subsemigroups(S: Semigroup, bound: int = SUBSEMIGROUP_BOUND) -> Iterator[int]:
    """Every nonempty product-closed subset, ascending by mask value."""
    if S.order > bound:
        raise BoundExceeded(f"subsemigroup enumeration limited to order {bound}, got {S.order}")
    for V in range(1, 1 << S.order):
        if is_closed(S, V):
            yield V


def restrict(S: Semigroup, V: int) -> tuple[Semigroup, list[int]]:
    """The subsemigroup on ``V`` relabelled ``0..|V|-1``, plus the new-to-old map."""
    if V == 0 or not is_closed(S, V):
        raise ValueError(f"{bitsets.fmt(V)} is not a subsemigroup")
    elems = bitsets.elements(V)
    index = {x: i for i, x in enumerate(elems)}
    table = tuple(tuple(index[S.table[x][y]] for y in elems) for x in elems)
    return Semigroup(table), elems


def lift(mask: int, elems: Sequence[int]) -> int:
    return bitsets.from_elements(elems[i] for i in bitsets.iter_elements(mask))


def subsemigroup_kernel(S: Semigroup, V: int) -> KernelReport:
    """Kernel data of the subsemigroup ``V``, expressed in the labels of ``S``."""
    T, elems = restrict(S, V)
    rep = kernel(T)
    return KernelReport(
        tuple(lift(L, elems) for L in rep.minimal_left_ideals),
        lift(rep.kernel, elems),
        lift(rep.idempotents, elems),
        lift(rep.minimal_idempotents, elems),
    )


# -- enumeration ------------------------------------------------------------

def _consistent(t: list[list[int]], n: int, a: int, b: int) -> bool:
    """Check every associativity triple that reads the freshly set cell (a, b).

    Undefined cells are -1 and make a triple vacuously fine.
    """
    v = t[a][b]
    ta = t[a]
    # (a, b, z): (ab)z vs a(bz)
    tv = t[v]
    tb = t[b]
    for z in range(n):
        left = tv[z]
        bz = tb[z]
        if left >= 0 and bz >= 0:
            right = ta[bz]
            if right >= 0 and left != right:
                return False
    # (x, a, b): (xa)b vs x(ab)
    for x in range(n):
        xa = t[x][a]
        if xa >= 0:
            left = t[xa][b]
            right = t[x][v]
            if left >= 0 and right >= 0 and left != right:
                return False
    # (x, y, b) with xy = a: (xy)b = v vs x(yb)
    for x in range(n):
        tx = t[x]
        for y in range(n):
            if tx[y] == a:
                yb = t[y][b]
                if yb >= 0:
                    right = tx[yb]
                    if right >= 0 and right != v:
                        return False
    # (a, y, z) with yz = b: a(yz) = v vs (ay)z
    for y in range(n):
        ty = t[y]
        ay = ta[y]
        if ay < 0:
            continue
        for z in range(n):
            if ty[z] == b:
                left = t[ay][z]
                if left >= 0 and left != v:
                    return False
    return True


def _backtrack(n: int, value_order) -> Iterator[tuple[tuple[int, ...], ...]]:
    t = [[-1] * n for _ in range(n)]
    cells = [(a, b) for a in range(n) for b in range(n)]

    def rec(i):
        if i == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        a, b = cells[i]
        for v in value_order(i):
            t[a][b] = v
            if _consistent(t, n, a, b):
                yield from rec(i + 1)
        t[a][b] = -1

    yield from rec(0)


def canonical_table(table: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Row-major table minimised over all relabellings (isomorphism only)."""
    n = len(table)
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for x, px in enumerate(perm):
            inv[px] = x
        cand = tuple(perm[table[inv[a]][inv[b]]] for a in range(n) for b in range(n))
        if best is None or cand < best:
            best = cand
    return best


def enumerate_semigroups(
    n: int, dedupe: bool = False, bound: int = EXHAUSTIVE_ORDER_BOUND
) -> Iterator[Semigroup]:
    """All associative n-by-n tables, by backtracking with associativity pruning.

    With ``dedupe`` only the canonical representative of each isomorphism
    class is produced.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundExceeded(f"exhaustive enumeration limited to order {bound}, got {n}")
    values = list(range(n))
    for table in _backtrack(n, lambda i: values):
        if first_associativity_failure(table) is not None:
            raise InternalInvariantViolation(f"enumeration produced a non-associative table {table}")
        if dedupe:
            flat = tuple(v for row in table for v in row)
            if canonical_table(table) != flat:
                continue
        yield Semigroup(table)


def random_semigroup(n: int, rng: random.Random, max_nodes: int = 20000) -> Semigroup:
    """One associative table found by randomised backtracking.

    The search restarts from scratch (new shuffles) whenever it exceeds
    ``max_nodes`` cell assignments. Not uniform over isomorphism classes.
    """
    while True:
        orders = []
        for _ in range(n * n):
            vals = list(range(n))
            rng.shuffle(vals)
            orders.append(vals)
        budget = [max_nodes]

        def value_order(i):
            for v in orders[i]:
                budget[0] -= 1
                if budget[0] < 0:
                    return
                yield v

        for table in _backtrack(n, value_order):
            return Semigroup(table)


# -- file formats -----------------------------------------------------------

def parse_semigroup_text(text: str) -> Semigroup:
    """Plain text: first line ``n``, then n lines of n space-separated indices."""
    lines = [ln for ln in text.splitlines()]
    nonblank = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not nonblank:
        raise ValueError("line 1: empty semigroup file")
    lineno, first = nonblank[0]
    try:
        n = int(first.strip())
    except ValueError:
        raise ValueError(f"line {lineno}: expected the order n, got {first.strip()!r}") from None
    rows = []
    for lineno, ln in nonblank[1:]:
        row = []
        for tok in ln.split():
            try:
                row.append(int(tok))
            except ValueError:
                col = ln.index(tok) + 1
                raise ValueError(f"line {lineno}, column {col}: bad entry {tok!r}") from None
        if len(row) != n:
            raise ValueError(f"line {lineno}: expected {n} entries, got {len(row)}")
        rows.append(row)
    if len(rows) != n:
        raise ValueError(f"expected {n} table rows, got {len(rows)}")
    return validate_semigroup(rows)


def parse_semigroup_json(text: str) -> Semigroup:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    table = data.get("table")
    if table is None:
        raise ValueError('missing "table" key')
    if "n" in data and data["n"] != len(table):
        raise ValueError(f'"n" is {data["n"]} but the table has {len(table)} rows')
    return validate_semigroup(table, data.get("labels"))


def load_semigroup(path) -> Semigroup:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return parse_semigroup_json(text)
    return parse_semigroup_text(text)


def dump_semigroup(S: Semigroup, path) -> None:
    Path(path).write_text(json.dumps(S.to_json()) + "\n")
