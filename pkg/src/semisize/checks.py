"""Finite instances of every theorem, one generator of cases per identifier.

Each check takes a semigroup and a :class:`CheckContext` and yields
``(ok, payload)`` per case, where ``payload`` is a self-contained
reproduction dict when ``ok`` is false and ``None`` otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from . import bitsets, oracles
from .errors import SemisizeError
from .natsets import (
    EventuallyPeriodicSet,
    ep_classify,
    ep_window_scan,
    factorial_example_window,
    find_ap,
    pws_window_falsify,
)
from .semigroup import (
    Semigroup,
    first_associativity_failure,
    idempotents,
    kernel,
    principal_left_ideal,
    subsemigroup_kernel,
    subsemigroups,
)
from .size import (
    ORACLE_BOUND,
    RelativeContext,
    absolute_context,
    decompose_pw,
    is_piecewise_syndetic,
    is_pw_rel_syndetic,
    is_pw_rel_syndetic_idem,
    is_rel_syndetic,
    is_rel_thick,
    is_syndetic,
    is_thick,
    ps_family_member_oracle,
    rel_duality_check,
    remark_du_check,
    verify_decomposition,
)
from .stacks import (
    FilterKernel,
    Stack,
    all_stacks,
    canonical,
    filter_mesh,
    mesh,
    point,
    stack_intersection,
    stack_product,
    stack_union,
    translation_set,
)

FACTORIAL_N, FACTORIAL_K, FACTORIAL_M = 100_000, 10, 100
# bounded refutation of the factorial example at (N, k, m) above; frozen regression constant
FACTORIAL_REFUTED = True
NAT_SAMPLES = 200
AP_LENGTH = 6  # seven terms


@dataclass
class CheckContext:
    rng: random.Random
    exhaustive_sets: bool
    exhaustive_pairs: bool
    exhaustive_stacks: bool
    random_instances: int = 200

    def sets(self, n: int) -> list[int]:
        if self.exhaustive_sets:
            return list(range(1 << n))
        return [0, (1 << n) - 1] + [self.rng.randrange(1 << n) for _ in range(self.random_instances)]

    def filter_pairs(self, n: int) -> list[tuple[int, int]]:
        if self.exhaustive_pairs:
            return [(v, w) for v in range(1, 1 << n) for w in range(1, 1 << n)]
        top = (1 << n) - 1
        return [(self.rng.randint(1, top), self.rng.randint(1, top)) for _ in range(self.random_instances)]

    def filters(self, n: int) -> list[int]:
        if self.exhaustive_pairs:
            return list(range(1, 1 << n))
        return [self.rng.randint(1, (1 << n) - 1) for _ in range(self.random_instances)]

    def triples(self, n: int) -> Iterator[tuple[int, int, int]]:
        """(V0, W0, A) instances."""
        if self.exhaustive_pairs:
            for v, w in self.filter_pairs(n):
                for a in range(1 << n):
                    yield v, w, a
        else:
            top = (1 << n) - 1
            for _ in range(self.random_instances):
                yield self.rng.randint(1, top), self.rng.randint(1, top), self.rng.randint(0, top)

    def random_stack(self, n: int) -> Stack:
        roll = self.rng.random()
        if roll < 0.03:
            return Stack(n, ())
        if roll < 0.06:
            return Stack(n, (0,))
        k = self.rng.randint(1, 4)
        return canonical(n, [self.rng.randint(1, (1 << n) - 1) for _ in range(k)])

    def stacks(self, n: int) -> list[Stack]:
        if self.exhaustive_stacks:
            return list(_all_stacks(n))
        return [self.random_stack(n) for _ in range(self.random_instances)]


@lru_cache(maxsize=8)
def _all_stacks(n: int) -> tuple[Stack, ...]:
    return tuple(all_stacks(n))


def _tbl(S: Semigroup) -> list[list[int]]:
    return [list(r) for r in S.table]


def _points(S: Semigroup, P: int) -> list[Stack]:
    return [point(S.order, p).stack for p in bitsets.iter_elements(P)]


# -- semigroup-core ---------------------------------------------------------

def check_assoc(S, cx):
    ok = first_associativity_failure(S.table) is None
    yield ok, None if ok else {"S": _tbl(S)}


def check_preimage(S, cx):
    n = S.order
    sets = cx.sets(n)
    pairs = [(a, b) for a in sets for b in sets] if cx.exhaustive_sets else list(zip(sets, reversed(sets)))
    for A, B in pairs:
        ok = all(
            S.preimage(h, A | B) == S.preimage(h, A) | S.preimage(h, B)
            and S.preimage(h, bitsets.complement(A, n)) == bitsets.complement(S.preimage(h, A), n)
            for h in range(n)
        )
        yield ok, None if ok else {"S": _tbl(S), "A": bitsets.elements(A), "B": bitsets.elements(B)}


def check_uli(S, cx):
    rep = kernel(S)
    brute = oracles.min_ideal(S)
    ok = rep.kernel == brute
    yield ok, None if ok else {"S": _tbl(S), "kernel": bitsets.elements(rep.kernel),
                               "brute_force": bitsets.elements(brute)}
    for L in rep.minimal_left_ideals:
        ok = all(principal_left_ideal(S, a) == L for a in bitsets.iter_elements(L))
        yield ok, None if ok else {"S": _tbl(S), "L": bitsets.elements(L)}


def check_crt(S, cx):
    rep = kernel(S)
    for L in rep.minimal_left_ideals:
        ok = L & rep.idempotents != 0
        yield ok, None if ok else {"S": _tbl(S), "L": bitsets.elements(L)}


def check_ellis(S, cx):
    rep = kernel(S)
    ok = rep.minimal_idempotents != 0 and rep.minimal_idempotents == rep.idempotents & rep.kernel
    yield ok, None if ok else {"S": _tbl(S)}


# -- absolute size notions --------------------------------------------------

def check_du(S, cx):
    sets = cx.sets(S.order)
    for A in sets:
        ok = remark_du_check(S, A)
        yield ok, None if ok else {"S": _tbl(S), "A": bitsets.elements(A)}
    syn = [A for A in sets if is_syndetic(S, A).value]
    thick = [B for B in sets if is_thick(S, B).value]
    for A in syn:
        for B in thick:
            ok = A & B != 0
            yield ok, None if ok else {"S": _tbl(S), "A": bitsets.elements(A), "B": bitsets.elements(B)}


def check_kernel_points(S, cx):
    n = S.order
    K = kernel(S).kernel
    for p in range(n):
        in_kernel = bool((K >> p) & 1)
        pp = point(n, p)
        returns = all(
            is_syndetic(S, translation_set(A, pp, S)).value
            for A in range(1 << n) if (A >> p) & 1
        )
        absorbs = all((S.product_set(S.product_set(S.full, 1 << q), 1 << p) >> p) & 1 for q in range(n))
        ok = in_kernel == returns == absorbs
        yield ok, None if ok else {"S": _tbl(S), "p": p, "in_kernel": in_kernel,
                                   "syndetic_returns": returns, "p_in_SqP": absorbs}


def check_kernel_meeting(S, cx):
    for A in cx.sets(S.order):
        try:
            is_piecewise_syndetic(S, A)
            yield True, None
        except SemisizeError as e:
            yield False, {"S": _tbl(S), "A": bitsets.elements(A), "error": str(e)}


def check_aps(S, cx):
    n = S.order
    E = kernel(S).minimal_idempotents
    for A in cx.sets(n):
        ps = is_piecewise_syndetic(S, A).value
        c2 = any(is_syndetic(S, translation_set(A, point(n, e), S)).value for e in bitsets.iter_elements(E))
        c3 = any((A >> S.table[x][e]) & 1 for e in bitsets.iter_elements(E) for x in range(n))
        ok = ps == c2 == c3
        yield ok, None if ok else {"S": _tbl(S), "A": bitsets.elements(A), "ps": ps, "c2": c2, "c3": c3}


def check_abc(S, cx):
    ctx = absolute_context(S)
    for A in cx.sets(S.order):
        payload = {"S": _tbl(S), "A": bitsets.elements(A)}
        ps = is_piecewise_syndetic(S, A).value
        split = oracles.syndetic_thick_split(
            S, A, lambda B: is_syndetic(S, B).value, lambda C: is_thick(S, C).value
        )
        if ps != split:
            yield False, {**payload, "ps": ps, "split": split}
            continue
        if ps:
            try:
                d = decompose_pw(ctx, A)
            except SemisizeError as e:
                yield False, {**payload, "error": str(e)}
                continue
            ok = is_syndetic(S, d.B).value and is_thick(S, d.C).value and d.B & d.C == A
            yield ok, None if ok else {**payload, "decomposition": d.to_json()}
        else:
            yield True, None


# -- stack / filter algebra -------------------------------------------------

def check_il(S, cx):
    n = S.order
    for A in cx.sets(n):
        for p in range(n):
            pp = point(n, p)
            lhs = bitsets.complement(translation_set(A, pp, S), n)
            rhs = translation_set(bitsets.complement(A, n), pp, S)
            ok = lhs == rhs
            yield ok, None if ok else {"S": _tbl(S), "A": bitsets.elements(A), "p": p}


def check_ids(S, cx):
    n = S.order
    E = idempotents(S)
    for A in cx.sets(n):
        for e in bitsets.iter_elements(E):
            Ae = translation_set(A, point(n, e), S)
            for x in bitsets.iter_elements(Ae):
                ok = bool((S.preimage(x, Ae) >> e) & 1)
                yield ok, None if ok else {"S": _tbl(S), "A": bitsets.elements(A), "e": e, "x": x}


def check_points(S, cx):
    n = S.order
    for x in range(n):
        for y in range(n):
            prod = stack_product(point(n, x).stack, point(n, y).stack, S)
            ok = prod == point(n, S.table[x][y]).stack
            yield ok, None if ok else {"S": _tbl(S), "x": x, "y": y, "product": prod.to_json()}


def check_elim(S, cx):
    n = S.order
    for V0 in cx.filters(n):
        F = FilterKernel(n, V0)
        pts = _points(S, V0)
        inter = stack_intersection(pts, n)
        union = stack_union(pts, n)
        ok = inter == F.stack and union == mesh(F) == filter_mesh(F)
        yield ok, None if ok else {"S": _tbl(S), "V0": bitsets.elements(V0)}


def check_firstposition(S, cx):
    n = S.order
    if cx.exhaustive_stacks:
        cases = [(P, q) for P in range(1 << n) for q in range(n)]
    else:
        cases = [(cx.rng.randrange(1 << n), cx.rng.randrange(n)) for _ in range(cx.random_instances)]
    for P, q in cases:
        pq = point(n, q).stack
        pts = _points(S, P)
        prods = [stack_product(p, pq, S) for p in pts]
        ok = (stack_intersection(prods, n) == stack_product(stack_intersection(pts, n), pq, S)
              and stack_union(prods, n) == stack_product(stack_union(pts, n), pq, S))
        yield ok, None if ok else {"S": _tbl(S), "points": bitsets.elements(P), "q": q}


def check_compcon(S, cx):
    n = S.order
    cases = [(v, q) for v in cx.filters(n) for q in range(n)]
    for V0, q in cases:
        F = FilterKernel(n, V0)
        pq = point(n, q).stack
        Fq = stack_product(F.stack, pq, S)  # swept, not closed form
        principal = len(Fq.minimal) == 1 and Fq.minimal[0] != 0
        closure_of_product = Fq.minimal[0] if principal else None
        ok = principal and closure_of_product == S.product_set(V0, 1 << q)
        ok = ok and stack_product(mesh(F), pq, S) == mesh(Fq)
        yield ok, None if ok else {"S": _tbl(S), "V0": bitsets.elements(V0), "q": q}


def check_enlight(S, cx):
    n = S.order
    for V0 in cx.filters(n):
        meshF = mesh(FilterKernel(n, V0))
        for p in range(n):
            target = stack_product(meshF, point(n, p).stack, S)
            closure_p = S.product_set(V0, 1 << p)
            for r in range(n):
                premise = point(n, r).stack.issubset(target)
                ok = (not premise) or bool((closure_p >> r) & 1)
                yield ok, None if ok else {"S": _tbl(S), "V0": bitsets.elements(V0), "p": p, "r": r}


def check_mesh_involution(S, cx):
    for F in cx.stacks(S.order):
        ok = mesh(mesh(F)) == F
        yield ok, None if ok else {"stack": F.to_json()}


def check_anti_monotone(S, cx):
    n = S.order
    if cx.exhaustive_stacks:
        stacks = _all_stacks(n)
        pairs = [(F, G) for F in stacks for G in stacks if F.issubset(G)]
    else:
        pairs = []
        for _ in range(cx.random_instances):
            F = cx.random_stack(n)
            extra = [cx.rng.randint(0, (1 << n) - 1) for _ in range(cx.rng.randint(0, 3))]
            pairs.append((F, canonical(n, list(F.minimal) + extra)))
    for F, G in pairs:
        ok = mesh(G).issubset(mesh(F))
        yield ok, None if ok else {"F": F.to_json(), "G": G.to_json()}


def check_stack_assoc(S, cx):
    n = S.order
    if cx.exhaustive_stacks:
        stacks = _all_stacks(n)
        index = {F: i for i, F in enumerate(stacks)}
        table = [[index[stack_product(F, G, S)] for G in stacks] for F in stacks]
        m = len(stacks)
        for i in range(m):
            for j in range(m):
                ij = table[i][j]
                row = table[ij]
                for k in range(m):
                    ok = row[k] == table[i][table[j][k]]
                    yield ok, None if ok else {"S": _tbl(S), "F": stacks[i].to_json(),
                                               "G": stacks[j].to_json(), "H": stacks[k].to_json()}
    else:
        for _ in range(cx.random_instances):
            F, G, H = (cx.random_stack(n) for _ in range(3))
            ok = stack_product(stack_product(F, G, S), H, S) == stack_product(F, stack_product(G, H, S), S)
            yield ok, None if ok else {"S": _tbl(S), "F": F.to_json(), "G": G.to_json(), "H": H.to_json()}


def check_closure_product(S, cx):
    n = S.order
    for V0, W0 in cx.filter_pairs(n):
        prod = stack_product(FilterKernel(n, V0), FilterKernel(n, W0), S)
        ok = prod.minimal == (S.product_set(V0, W0),)
        yield ok, None if ok else {"S": _tbl(S), "V0": bitsets.elements(V0), "W0": bitsets.elements(W0)}


# -- relative size notions --------------------------------------------------

def _ctx(S, V0, W0=None):
    n = S.order
    return RelativeContext(S, FilterKernel(n, V0), None if W0 is None else FilterKernel(n, W0))


def _guard(payload, fn):
    try:
        return fn(), None
    except SemisizeError as e:
        return None, {**payload, "error": str(e)}


def check_dual(S, cx):
    for V0, W0, A in cx.triples(S.order):
        payload = {"S": _tbl(S), "V0": bitsets.elements(V0), "W0": bitsets.elements(W0),
                   "A": bitsets.elements(A)}
        ok, err = _guard(payload, lambda: rel_duality_check(_ctx(S, V0, W0), A))
        yield bool(ok), err or (None if ok else payload)


def check_sych(S, cx):
    for V0, W0, A in cx.triples(S.order):
        closure_hits = all(S.product_set(V0, 1 << q) & A for q in bitsets.iter_elements(W0))
        payload = {"S": _tbl(S), "V0": bitsets.elements(V0), "W0": bitsets.elements(W0),
                   "A": bitsets.elements(A)}
        got, err = _guard(payload, lambda: is_rel_syndetic(_ctx(S, V0, W0), A).value)
        ok = err is None and got == bool(closure_hits)
        yield ok, None if ok else (err or payload)


def check_thch(S, cx):
    for V0, W0, A in cx.triples(S.order):
        inside = any(bitsets.is_subset(S.product_set(V0, 1 << q), A) for q in bitsets.iter_elements(W0))
        payload = {"S": _tbl(S), "V0": bitsets.elements(V0), "W0": bitsets.elements(W0),
                   "A": bitsets.elements(A)}
        got, err = _guard(payload, lambda: is_rel_thick(_ctx(S, V0, W0), A).value)
        ok = err is None and got == inside
        yield ok, None if ok else (err or payload)


def _sup_families(S: Semigroup, V0: int, W0: int) -> tuple[Stack, Stack]:
    """Syn and Thick as stacks built from products of point ultrafilters."""
    n = S.order
    prods = {
        (p, q): stack_product(point(n, p).stack, point(n, q).stack, S)
        for p in bitsets.iter_elements(V0) for q in bitsets.iter_elements(W0)
    }
    ps, qs = bitsets.elements(V0), bitsets.elements(W0)
    syn = stack_intersection([stack_union([prods[p, q] for p in ps], n) for q in qs], n)
    thick = stack_union([stack_intersection([prods[p, q] for p in ps], n) for q in qs], n)
    return syn, thick


def check_sup(S, cx):
    n = S.order
    if cx.exhaustive_pairs:
        pairs = cx.filter_pairs(n)
        sets_for = lambda: range(1 << n)  # noqa: E731
    else:
        # each random (F, G) pair is checked on a handful of random sets
        top = (1 << n) - 1
        pairs = [(cx.rng.randint(1, top), cx.rng.randint(1, top))
                 for _ in range(max(1, cx.random_instances // 4))]
        sets_for = lambda: [cx.rng.randrange(1 << n) for _ in range(4)]  # noqa: E731
    for V0, W0 in pairs:
        syn, thick = _sup_families(S, V0, W0)
        ctx = _ctx(S, V0, W0)
        for A in sets_for():
            payload = {"S": _tbl(S), "V0": bitsets.elements(V0), "W0": bitsets.elements(W0),
                       "A": bitsets.elements(A)}
            got, err = _guard(payload, lambda: (is_rel_syndetic(ctx, A).value, is_rel_thick(ctx, A).value))
            ok = err is None and got == (A in syn, A in thick)
            yield ok, None if ok else (err or payload)


def check_reduction(S, cx):
    n = S.order
    top = (1 << n) - 1
    if n <= 2:
        cases = [(v, w, a) for v in range(1, top + 1) for w in range(1, top + 1) for a in range(top + 1)]
    else:
        count = max(1, cx.random_instances // (10 if n <= 4 else 20))
        cases = [(cx.rng.randint(1, top), cx.rng.randint(1, top), cx.rng.randint(0, top))
                 for _ in range(count)]
    # the piecewise oracle searches choice functions over all of F; too slow past order 4
    with_pw = n <= 4
    for V0, W0, A in cases:
        ctx = _ctx(S, V0, W0)
        got = [is_rel_syndetic(ctx, A).value, is_rel_thick(ctx, A).value]
        want = [oracles.rel_syndetic_full(S, V0, W0, A), oracles.rel_thick_full(S, V0, W0, A)]
        if with_pw:
            got.append(is_pw_rel_syndetic(ctx, A).value)
            want.append(oracles.pw_rel_syndetic_full(S, V0, A))
        ok = got == want
        yield ok, None if ok else {"S": _tbl(S), "V0": bitsets.elements(V0), "W0": bitsets.elements(W0),
                                   "A": bitsets.elements(A), "reduced": got, "full": want}


def check_absolute(S, cx):
    ctx = absolute_context(S)
    for A in cx.sets(S.order):
        got = (is_rel_syndetic(ctx, A).value, is_rel_thick(ctx, A).value, is_pw_rel_syndetic(ctx, A).value)
        want = (is_syndetic(S, A).value, is_thick(S, A).value, is_piecewise_syndetic(S, A).value)
        ok = got == want
        yield ok, None if ok else {"S": _tbl(S), "A": bitsets.elements(A), "relative": got, "absolute": want}


def check_monotone(S, cx):
    n = S.order
    for V0, W0, A in cx.triples(n):
        ctx = _ctx(S, V0, W0)
        syn, thick = is_rel_syndetic(ctx, A).value, is_rel_thick(ctx, A).value
        for x in range(n):
            B = A | (1 << x)
            ok = (not syn or is_rel_syndetic(ctx, B).value) and (not thick or is_rel_thick(ctx, B).value)
            yield ok, None if ok else {"S": _tbl(S), "V0": bitsets.elements(V0), "W0": bitsets.elements(W0),
                                       "A": bitsets.elements(A), "x": x}


def _filters_and_sets(S, cx):
    n = S.order
    if cx.exhaustive_sets:
        for V0 in range(1, 1 << n):
            for A in range(1 << n):
                yield V0, A
    else:
        for _ in range(cx.random_instances):
            yield cx.rng.randint(1, (1 << n) - 1), cx.rng.randrange(1 << n)


def _subsemigroups_and_sets(S, cx):
    n = S.order
    subs = list(subsemigroups(S))
    if cx.exhaustive_sets:
        for V0 in subs:
            for A in range(1 << n):
                yield V0, A
    else:
        for _ in range(cx.random_instances):
            yield cx.rng.choice(subs), cx.rng.randrange(1 << n)


def check_eq(S, cx):
    for V0, A in _filters_and_sets(S, cx):
        payload = {"S": _tbl(S), "V0": bitsets.elements(V0), "A": bitsets.elements(A)}
        _, err = _guard(payload, lambda: is_pw_rel_syndetic(_ctx(S, V0), A))
        yield err is None, err


def check_qe(S, cx):
    t = S.table
    for V0, A in _subsemigroups_and_sets(S, cx):
        ps = bitsets.elements(V0)
        E = bitsets.elements(subsemigroup_kernel(S, V0).minimal_idempotents)

        def good(r):
            return all(any((A >> t[t[p][q]][r]) & 1 for p in ps) for q in ps)

        ok = any(good(r) for r in ps) == any(good(e) for e in E)
        yield ok, None if ok else {"S": _tbl(S), "V0": ps, "A": bitsets.elements(A)}


def check_rps(S, cx):
    for V0, A in _subsemigroups_and_sets(S, cx):
        payload = {"S": _tbl(S), "V0": bitsets.elements(V0), "A": bitsets.elements(A)}
        _, err = _guard(payload, lambda: is_pw_rel_syndetic_idem(_ctx(S, V0), A))
        yield err is None, err


def check_cpfs(S, cx):
    for V0, A in _subsemigroups_and_sets(S, cx):
        ctx = _ctx(S, V0)
        payload = {"S": _tbl(S), "V0": bitsets.elements(V0), "A": bitsets.elements(A)}
        try:
            pw = is_pw_rel_syndetic(ctx, A).value
            # beyond the oracle bound only the constructive direction is checked
            oracle = ps_family_member_oracle(ctx, A) if S.order <= ORACLE_BOUND else pw
            if pw != oracle:
                yield False, {**payload, "pw": pw, "oracle": oracle}
                continue
            if pw:
                d = decompose_pw(ctx, A)
                clauses = verify_decomposition(ctx, A, d)
                if not all(clauses.values()):
                    yield False, {**payload, "decomposition": d.to_json(), "clauses": clauses}
                    continue
            yield True, None
        except SemisizeError as e:
            yield False, {**payload, "error": str(e)}


# -- (N, +) -----------------------------------------------------------------

def random_ep_set(rng: random.Random, max_period: int = 12, max_threshold: int = 50) -> EventuallyPeriodicSet:
    p = rng.randint(1, max_period)
    T = rng.randint(0, max_threshold)
    R = frozenset(r for r in range(p) if rng.random() < rng.choice((0.0, 0.3, 0.7, 1.0)))
    prefix = frozenset(x for x in range(1, T) if rng.random() < 0.5)
    return EventuallyPeriodicSet(p, T, R, prefix)


def nat_samples(rng: random.Random, count: int = NAT_SAMPLES) -> list[EventuallyPeriodicSet]:
    return [random_ep_set(rng) for _ in range(count)]


def ps_nat_samples(rng: random.Random, count: int = NAT_SAMPLES) -> list[EventuallyPeriodicSet]:
    """Like :func:`nat_samples`, redrawing sets with no residues (finite sets carry no progressions)."""
    out = []
    while len(out) < count:
        E = random_ep_set(rng)
        if E.residues:
            out.append(E)
    return out


def check_nat_classify(rng):
    for E in nat_samples(rng):
        try:
            ep_classify(E)
            yield True, None
        except SemisizeError as e:
            yield False, {"E": E.to_json(), "error": str(e)}


def check_nat_du(rng):
    for E in nat_samples(rng):
        C = E.complement()
        closed = ep_classify(E, check=False)["syndetic"] == (not ep_classify(C, check=False)["thick"])
        scanned = ep_window_scan(E)["syndetic"] == (not ep_window_scan(C)["thick"])
        ok = closed and scanned
        yield ok, None if ok else {"E": E.to_json()}


def check_vdw(rng):
    for E in ps_nat_samples(rng):
        try:
            a, d = find_ap(E, AP_LENGTH)
        except SemisizeError as e:
            yield False, {"E": E.to_json(), "error": str(e)}
            continue
        ok = d >= 1 and all(a + k * d in E for k in range(AP_LENGTH + 1))
        yield ok, None if ok else {"E": E.to_json(), "a": a, "d": d}


def check_factorial(rng):
    W = factorial_example_window(FACTORIAL_N)
    refuted = pws_window_falsify(W, FACTORIAL_K, FACTORIAL_M)
    ok = refuted == FACTORIAL_REFUTED
    yield ok, None if ok else {"N": FACTORIAL_N, "k": FACTORIAL_K, "m": FACTORIAL_M, "refuted": refuted}
    small = factorial_example_window(1000)
    ok = list(small.members) == list(W.members[:1000])
    yield ok, None if ok else {"monotone_window": [1000, FACTORIAL_N]}


@dataclass(frozen=True)
class Theorem:
    ident: str
    title: str
    check: Callable
    kind: str = "semigroup"  # or "nat"


THEOREMS: dict[str, Theorem] = {t.ident: t for t in [
    Theorem("assoc", "every enumerated table is associative", check_assoc),
    Theorem("preimage", "h^-1 distributes over union and complement", check_preimage),
    Theorem("uli", "K(S) is the union of minimal left ideals and the least ideal", check_uli),
    Theorem("crt", "every minimal left ideal contains an idempotent", check_crt),
    Theorem("ellis", "minimal idempotents exist", check_ellis),
    Theorem("du", "thick/syndetic complement duality; syndetic meets thick", check_du),
    Theorem("kernel_points", "p in K(S) iff A'(p) syndetic for A in p iff p in S q p", check_kernel_points),
    Theorem("kernel_meeting", "piecewise syndetic iff A meets K(S)", check_kernel_meeting),
    Theorem("aps", "piecewise syndetic via minimal idempotents", check_aps),
    Theorem("abc", "piecewise syndetic iff syndetic ∩ thick, constructive", check_abc),
    Theorem("il", "complement commutes with A -> A'(p)", check_il),
    Theorem("ids", "x^-1 A'(e) ∈ e for x in A'(e), e idempotent", check_ids),
    Theorem("points", "product of point ultrafilters is the point of the product", check_points),
    Theorem("elim", "intersection/union of the points of closure(F) is F / F*", check_elim),
    Theorem("firstposition", "products distribute over ∩/∪ in the first slot", check_firstposition),
    Theorem("compcon", "closure(F)·q = closure(F·q) and F*·q = (F·q)*", check_compcon),
    Theorem("enlight", "r ⊆ F*·p implies r ∈ closure(F)·p", check_enlight),
    Theorem("mesh_involution", "(F*)* = F for every stack", check_mesh_involution),
    Theorem("anti_monotone", "F ⊆ G implies G* ⊆ F*", check_anti_monotone),
    Theorem("stack_assoc", "stack product is associative", check_stack_assoc),
    Theorem("closure_product", "closure(F·G) vs closure(F)·closure(G) at finite scale", check_closure_product),
    Theorem("dual", "Syn(F,G) = Thick(F,G)*", check_dual),
    Theorem("sych", "Syn(F,G): closure(F)·q meets A for every q", check_sych),
    Theorem("thch", "Thick(F,G): closure(F)·q inside A for some q", check_thch),
    Theorem("sup", "Syn and Thick as ∩∪ / ∪∩ of point products", check_sup),
    Theorem("reduction", "V = V0, H = V0 reduction vs full quantifiers", check_reduction),
    Theorem("absolute", "F = {S} recovers the absolute notions", check_absolute),
    Theorem("monotone", "supersets of F-syndetic / F-thick sets stay so", check_monotone),
    Theorem("eq", "three procedures for piecewise F-syndetic agree", check_eq),
    Theorem("qe", "witness r may be taken a minimal idempotent", check_qe),
    Theorem("rps", "idempotent characterization of piecewise F-syndetic", check_rps),
    Theorem("cpfs", "piecewise F-syndetic iff in PS(F,F), constructive", check_cpfs),
    Theorem("nat_classify", "eventually periodic closed forms vs window scans", check_nat_classify, "nat"),
    Theorem("nat_du", "syndetic iff complement not thick in (N,+)", check_nat_du, "nat"),
    Theorem("vdw", "verified arithmetic progressions of length 7", check_vdw, "nat"),
    Theorem("factorial", "bounded refutation of the factorial example", check_factorial, "nat"),
]}

STACK_THEOREMS = ("mesh_involution", "anti_monotone", "stack_assoc", "elim", "firstposition",
                  "compcon", "il", "ids", "enlight")
