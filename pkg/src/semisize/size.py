"""Syndetic, thick and piecewise syndetic sets, absolute and filter-relative.

Each decision is computed along at least two independent routes: the
definition (reduced to finitely many quantifier instances) and an algebraic
characterization in terms of products of point ultrafilters. A disagreement
raises :class:`InternalInvariantViolation` rather than picking a winner.

On a finite ground set a filter F is generated by one set ``V0`` and its
closure is the set of points of ``V0``. The definitions quantify over all
``V ∈ F`` and finite ``H ⊆ V``; every relevant condition is monotone in V and
in H, so checking ``V = V0`` and ``H = V0`` (or ``W = V0``) is exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import numpy as np

from . import bitsets
from .errors import (
    BoundExceeded,
    HypothesisViolation,
    InternalInvariantViolation,
    PreconditionViolation,
)
from .semigroup import Semigroup, is_closed, kernel, subsemigroup_kernel
from .stacks import FilterKernel, filter_product, point, translation_set

ORACLE_BOUND = int(os.environ.get("SEMISIZE_ORACLE_BOUND", "5"))


@dataclass(frozen=True)
class SizeVerdict:
    notion: str
    value: bool
    witness: dict[str, Any] | None = None
    paths_agreed: bool = True

    def __bool__(self) -> bool:
        return self.value

    def to_json(self) -> dict:
        return {
            "notion": self.notion,
            "value": self.value,
            "witness": self.witness,
            "paths_agreed": self.paths_agreed,
        }


@dataclass(frozen=True)
class RelativeContext:
    S: Semigroup
    F: FilterKernel
    G: FilterKernel | None = None
    closure_is_subsemigroup: bool = field(init=False)

    def __post_init__(self):
        n = self.S.order
        for X in (self.F, self.G):
            if X is not None and X.n != n:
                raise ValueError(f"filter ground size {X.n} does not match semigroup order {n}")
        object.__setattr__(self, "closure_is_subsemigroup", is_closed(self.S, self.F.v0))

    @property
    def v0(self) -> int:
        return self.F.v0

    @property
    def w0(self) -> int:
        return (self.G or self.F).v0

    def with_G(self, G: FilterKernel | None) -> "RelativeContext":
        return RelativeContext(self.S, self.F, G)


def absolute_context(S: Semigroup) -> RelativeContext:
    """F = G = {S}: the relative notions reduce to the usual ones."""
    return RelativeContext(S, FilterKernel(S.order, S.full))


def _disagree(what: str, **paths) -> InternalInvariantViolation:
    detail = ", ".join(f"{k}={v}" for k, v in paths.items())
    return InternalInvariantViolation(f"{what}: computation paths disagree ({detail})")


def _union_preimages(S: Semigroup, H: int, A: int) -> int:
    out = 0
    for h in bitsets.iter_elements(H):
        out |= S.preimage(h, A)
    return out


def _intersect_preimages(S: Semigroup, X: int, A: int, start: int) -> int:
    out = start
    for x in bitsets.iter_elements(X):
        out &= S.preimage(x, A)
    return out


def _least_mask(candidates: int, ok) -> int:
    """Smallest integer ``H ⊆ candidates`` with ``ok(H)``, for a monotone ``ok`` true at ``candidates``.

    Dropping the highest removable bit first yields the integer minimum.
    """
    H = candidates
    for h in reversed(bitsets.elements(candidates)):
        trial = H & ~(1 << h)
        if trial and ok(trial):
            H = trial
    return H


# -- absolute notions -------------------------------------------------------

def is_syndetic(S: Semigroup, A: int) -> SizeVerdict:
    covered = _union_preimages(S, S.full, A)
    if covered != S.full:
        return SizeVerdict("syndetic", False)
    H = _least_mask(S.full, lambda H: _union_preimages(S, H, A) == S.full)
    return SizeVerdict("syndetic", True, {"H": bitsets.elements(H)})


def is_thick(S: Semigroup, A: int) -> SizeVerdict:
    X = _intersect_preimages(S, S.full, A, S.full)
    if X == 0:
        return SizeVerdict("thick", False)
    return SizeVerdict("thick", True, {"x": bitsets.lowest(X)})


def is_piecewise_syndetic(S: Semigroup, A: int) -> SizeVerdict:
    """Definition vs. "meets the kernel of S"."""

    def common(H):
        return _intersect_preimages(S, S.full, _union_preimages(S, H, A), S.full)

    by_definition = common(S.full) != 0
    by_kernel = A & kernel(S).kernel != 0
    if by_definition != by_kernel:
        raise _disagree("piecewise syndetic", definition=by_definition, kernel=by_kernel)
    if not by_definition:
        return SizeVerdict("piecewise_syndetic", False)
    H = _least_mask(S.full, lambda H: common(H) != 0)
    return SizeVerdict(
        "piecewise_syndetic", True, {"H": bitsets.elements(H), "x": bitsets.lowest(common(H))}
    )


def remark_du_check(S: Semigroup, A: int, B: int | None = None) -> bool:
    """Thick/syndetic complement duality, plus "syndetic meets thick" for the pair (A, B)."""
    Ac = bitsets.complement(A, S.order)
    ok = is_thick(S, A).value == (not is_syndetic(S, Ac).value)
    ok &= is_syndetic(S, A).value == (not is_thick(S, Ac).value)
    if B is not None and is_syndetic(S, A).value and is_thick(S, B).value:
        ok &= A & B != 0
    return ok


# -- relative notions -------------------------------------------------------

def is_rel_syndetic(ctx: RelativeContext, A: int) -> SizeVerdict:
    """(F, G)-syndetic: some finite H ⊆ V0 has its translates' union in G."""
    S, V0, W0 = ctx.S, ctx.v0, ctx.w0
    by_definition = bitsets.is_subset(W0, _union_preimages(S, V0, A))
    # for every q in closure(G) some p in closure(F) has A in p*q
    per_point = []
    for q in bitsets.iter_elements(W0):
        hit = next((p for p in bitsets.iter_elements(V0) if (A >> S.table[p][q]) & 1), None)
        if hit is None:
            break
        per_point.append([q, hit])
    by_products = len(per_point) == bin(W0).count("1")
    if by_definition != by_products:
        raise _disagree("(F,G)-syndetic", definition=by_definition, products=by_products)
    if not by_definition:
        return SizeVerdict("rel_syndetic", False)
    H = _least_mask(V0, lambda H: bitsets.is_subset(W0, _union_preimages(S, H, A)))
    return SizeVerdict("rel_syndetic", True, {"H": bitsets.elements(H), "per_point": per_point})


def is_rel_thick(ctx: RelativeContext, A: int) -> SizeVerdict:
    """(F, G)-thick: the translates over V0 share a point of the mesh of G."""
    S, V0, W0 = ctx.S, ctx.v0, ctx.w0
    common = _intersect_preimages(S, V0, A, W0)
    by_definition = common != 0
    # some q in closure(G) with closure(F)*q inside closure(A)
    q_hit = next(
        (q for q in bitsets.iter_elements(W0) if bitsets.is_subset(S.product_set(V0, 1 << q), A)),
        None,
    )
    by_products = q_hit is not None
    if by_definition != by_products:
        raise _disagree("(F,G)-thick", definition=by_definition, products=by_products)
    if not by_definition:
        return SizeVerdict("rel_thick", False)
    x = bitsets.lowest(common)
    if x != q_hit:
        raise _disagree("(F,G)-thick witness", definition=x, products=q_hit)
    return SizeVerdict("rel_thick", True, {"x": x})


def rel_duality_check(ctx: RelativeContext, A: int) -> bool:
    Ac = bitsets.complement(A, ctx.S.order)
    return is_rel_syndetic(ctx, A).value == (not is_rel_thick(ctx, Ac).value)


def _pw_points_definition(ctx: RelativeContext, A: int, H: int) -> int:
    # V0 ∩ ⋂_{x∈V0} x^{-1}(⋃_{h∈H} h^{-1}A): the points certifying the intersection property
    S, V0 = ctx.S, ctx.v0
    return _intersect_preimages(S, V0, _union_preimages(S, H, A), V0)


def _pw_points_syndetic_over_product(ctx: RelativeContext, A: int) -> int:
    # r such that A is (F, F·r)-syndetic
    S = ctx.S
    out = 0
    for r in bitsets.iter_elements(ctx.v0):
        G = filter_product(ctx.F, point(S.order, r), S)
        if is_rel_syndetic(RelativeContext(S, ctx.F, G), A).value:
            out |= 1 << r
    return out


def _pw_points_triple_products(ctx: RelativeContext, A: int) -> int:
    # r such that every q has some p with pqr in A
    S, V0 = ctx.S, ctx.v0
    t = S.table
    ps = bitsets.elements(V0)
    out = 0
    for r in ps:
        if all(any((A >> t[t[p][q]][r]) & 1 for p in ps) for q in ps):
            out |= 1 << r
    return out


def is_pw_rel_syndetic(ctx: RelativeContext, A: int) -> SizeVerdict:
    """Piecewise F-syndetic via three agreeing procedures (G is ignored)."""
    ctx = ctx.with_G(None)
    defn = _pw_points_definition(ctx, A, ctx.v0)
    syn = _pw_points_syndetic_over_product(ctx, A)
    triple = _pw_points_triple_products(ctx, A)
    if not defn == syn == triple:
        raise _disagree(
            "piecewise F-syndetic",
            definition=bitsets.fmt(defn),
            syndetic_over_product=bitsets.fmt(syn),
            triple_products=bitsets.fmt(triple),
        )
    if defn == 0:
        return SizeVerdict("pw_rel_syndetic", False)
    H = _least_mask(ctx.v0, lambda H: _pw_points_definition(ctx, A, H) != 0)
    return SizeVerdict(
        "pw_rel_syndetic", True, {"r": bitsets.lowest(defn), "H": bitsets.elements(H)}
    )


def _require_subsemigroup(ctx: RelativeContext) -> None:
    if not ctx.closure_is_subsemigroup:
        raise HypothesisViolation(
            f"closure of F = {bitsets.fmt(ctx.v0)} is not a subsemigroup of S"
        )


def is_pw_rel_syndetic_idem(ctx: RelativeContext, A: int) -> SizeVerdict:
    """Piecewise F-syndetic via a minimal idempotent e of closure(F) with A'(e) F-syndetic."""
    _require_subsemigroup(ctx)
    ctx = ctx.with_G(None)
    S = ctx.S
    minimal_idem = subsemigroup_kernel(S, ctx.v0).minimal_idempotents
    e_syndetic = None
    e_hits = None
    for e in bitsets.iter_elements(minimal_idem):
        if e_syndetic is None and is_rel_syndetic(ctx, translation_set(A, point(S.order, e), S)).value:
            e_syndetic = e
        if e_hits is None and any((A >> S.table[x][e]) & 1 for x in bitsets.iter_elements(ctx.v0)):
            e_hits = e
    value = e_syndetic is not None
    reference = is_pw_rel_syndetic(ctx, A).value
    if not value == (e_hits is not None) == reference:
        raise _disagree(
            "piecewise F-syndetic (idempotent)",
            syndetic_translation=value,
            some_translate_in_e=e_hits is not None,
            three_path=reference,
        )
    if not value:
        return SizeVerdict("pw_rel_syndetic_idem", False)
    return SizeVerdict("pw_rel_syndetic_idem", True, {"e": e_syndetic})


@dataclass(frozen=True)
class Decomposition:
    B: int
    C: int
    e: int

    def to_json(self) -> dict:
        return {"B": bitsets.elements(self.B), "C": bitsets.elements(self.C), "e": self.e}


def decompose_pw(ctx: RelativeContext, A: int) -> Decomposition:
    """Write a piecewise F-syndetic A as (F-syndetic B) ∩ (thick C).

    ``B = A ∪ A'(e)`` and ``C = A ∪ (A^c)'(e)`` for the idempotent witness e.
    """
    _require_subsemigroup(ctx)
    ctx = ctx.with_G(None)
    S = ctx.S
    verdict = is_pw_rel_syndetic_idem(ctx, A)
    if not verdict.value:
        raise PreconditionViolation(
            f"{bitsets.fmt(A)} is not piecewise F-syndetic for F generated by {bitsets.fmt(ctx.v0)}"
        )
    e = verdict.witness["e"]
    pe = point(S.order, e)
    Ac = bitsets.complement(A, S.order)
    B = A | translation_set(A, pe, S)
    C = A | translation_set(Ac, pe, S)
    checks = {
        "B F-syndetic": is_rel_syndetic(ctx, B).value,
        "C thick": is_thick(S, C).value,
        "C F-thick": is_rel_thick(ctx, C).value,
        "B ∩ C = A": B & C == A,
    }
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise InternalInvariantViolation(f"decomposition of {bitsets.fmt(A)} failed: {failed}")
    return Decomposition(B, C, e)


def verify_decomposition(ctx: RelativeContext, A: int, d: Decomposition) -> dict[str, bool]:
    """Re-check every clause of a decomposition independently of how it was produced."""
    return {
        "B_syndetic": is_rel_syndetic(ctx.with_G(None), d.B).value,
        "C_thick": is_thick(ctx.S, d.C).value,
        "C_rel_thick": is_rel_thick(ctx.with_G(None), d.C).value,
        "intersection": d.B & d.C == A,
    }


# -- brute-force oracle -----------------------------------------------------

@lru_cache(maxsize=4096)
def _ff_families(S: Semigroup, V0: int) -> tuple[np.ndarray, np.ndarray]:
    """Membership of every subset in Syn(F,F) and Thick(F,F), straight from element products."""
    n = S.order
    t = S.table
    vs = bitsets.elements(V0)
    # rows: y in V0, bits: {h*y : h in V0}
    col_images = [bitsets.from_elements(t[h][y] for h in vs) for y in vs]
    syn = np.zeros(1 << n, dtype=bool)
    thick = np.zeros(1 << n, dtype=bool)
    for B in range(1 << n):
        syn[B] = all(img & B for img in col_images)
        thick[B] = any(img & ~B == 0 for img in col_images)
    return syn, thick


def ps_family_member_oracle(ctx: RelativeContext, A: int, bound: int = ORACLE_BOUND) -> bool:
    """Is A = B ∩ C with B F-syndetic and C F-thick? Brute force over all pairs."""
    S = ctx.S
    if S.order > bound:
        raise BoundExceeded(f"oracle limited to order {bound}, got {S.order}")
    syn, thick = _ff_families(S, ctx.v0)
    free = bitsets.complement(A, S.order)
    for X in bitsets.submasks(free):
        if not syn[A | X]:
            continue
        for Y in bitsets.submasks(free & ~X):
            if thick[A | Y]:
                return True
    return False
