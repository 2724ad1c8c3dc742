"""Brute-force oracles, deliberately written straight from the definitions.

Nothing here reuses the reductions in :mod:`semisize.size`; these exist to
check those reductions and are only practical for very small orders.
"""

from __future__ import annotations

from . import bitsets
from .semigroup import Semigroup, is_ideal


def min_ideal(S: Semigroup) -> int:
    """The unique inclusion-minimal two-sided ideal, found by scanning all subsets."""
    ideals = [I for I in range(1, 1 << S.order) if is_ideal(S, I)]
    minimal = [I for I in ideals if not any(J != I and bitsets.is_subset(J, I) for J in ideals)]
    if len(minimal) != 1:
        raise AssertionError(f"expected one minimal ideal, found {len(minimal)}")
    return minimal[0]


def _nonempty_submasks(V: int):
    return (H for H in bitsets.submasks(V) if H)


def _union_pre(S: Semigroup, H: int, A: int) -> int:
    out = 0
    for h in bitsets.iter_elements(H):
        for x in range(S.order):
            if (A >> S.table[h][x]) & 1:
                out |= 1 << x
    return out


def _pre(S: Semigroup, x: int, A: int) -> int:
    return bitsets.from_elements(y for y in range(S.order) if (A >> S.table[x][y]) & 1)


def rel_syndetic_full(S: Semigroup, V0: int, W0: int, A: int) -> bool:
    """For every V ⊇ V0 some nonempty H ⊆ V has ⋃ h^{-1}A ⊇ W0."""
    return all(
        any(bitsets.is_subset(W0, _union_pre(S, H, A)) for H in _nonempty_submasks(V))
        for V in bitsets.supermasks(V0, S.order)
    )


def rel_thick_full(S: Semigroup, V0: int, W0: int, A: int) -> bool:
    """Some V ⊇ V0 has ⋂ h^{-1}A meeting W0 for every nonempty H ⊆ V."""
    def inter(H):
        out = S.full
        for h in bitsets.iter_elements(H):
            out &= _pre(S, h, A)
        return out

    return any(
        all(inter(H) & W0 for H in _nonempty_submasks(V))
        for V in bitsets.supermasks(V0, S.order)
    )


def pw_rel_syndetic_full(S: Semigroup, V0: int, A: int) -> bool:
    """Piecewise F-syndetic with every V ∈ F, H_V ⊆ V and W_V ∈ F searched.

    A finite family has the intersection property iff it has a common point r,
    and r can be chosen before V; so: some r lies, for every V, in
    ``V ∩ ⋂_{x ∈ W_V} x^{-1}(⋃_{h ∈ H_V} h^{-1}A)`` for a suitable choice of
    ``H_V`` and ``W_V``.
    """
    n = S.order
    for r in range(n):
        ok = True
        for V in bitsets.supermasks(V0, n):
            if not (V >> r) & 1:
                ok = False
                break
            found = False
            for H in _nonempty_submasks(V):
                U = _union_pre(S, H, A)
                for W in bitsets.supermasks(V0, n):
                    if all((_pre(S, x, U) >> r) & 1 for x in bitsets.iter_elements(W)):
                        found = True
                        break
                if found:
                    break
            if not found:
                ok = False
                break
        if ok:
            return True
    return False


def syndetic_thick_split(S: Semigroup, A: int, syndetic, thick) -> bool:
    """Is A = B ∩ C for some B with ``syndetic(B)`` and C with ``thick(C)``?"""
    free = bitsets.complement(A, S.order)
    for X in bitsets.submasks(free):
        if not syndetic(A | X):
            continue
        for Y in bitsets.submasks(free & ~X):
            if thick(A | Y):
                return True
    return False
