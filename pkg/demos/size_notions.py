"""Syndetic, thick and piecewise syndetic sets, absolute and filter-relative."""

from semisize import (
    FilterKernel,
    RelativeContext,
    decompose_pw,
    is_piecewise_syndetic,
    is_pw_rel_syndetic,
    is_pw_rel_syndetic_idem,
    is_rel_syndetic,
    is_syndetic,
    is_thick,
    make_named,
)
from semisize.bitsets import fmt, from_elements
from semisize.size import absolute_context, verify_decomposition

S = make_named("cyclic_mul", 6)


def show(A):
    return f"{fmt(A):<14}"


print("absolute notions in Z6 under *")
for A in (from_elements([0]), from_elements([3]), from_elements([0, 4]), from_elements([1, 5])):
    syn, thick, ps = is_syndetic(S, A), is_thick(S, A), is_piecewise_syndetic(S, A)
    print(f"  {show(A)} syndetic={syn.value!s:<5} thick={thick.value!s:<5} piecewise={ps.value!s:<5}",
          ps.witness or "")

# relative to filters: F generated by the units, G by the nonzero evens
ctx = RelativeContext(S, FilterKernel(6, from_elements([1, 5])), FilterKernel(6, from_elements([2, 4])))
v = is_rel_syndetic(ctx, from_elements([4]))
print("{4} is (F,G)-syndetic:", v.value, v.witness)

# piecewise F-syndetic for F generated by the subsemigroup {0,3}
ctx = RelativeContext(S, FilterKernel(6, from_elements([0, 3])))
for A in (from_elements([0]), from_elements([3])):
    print(f"  {show(A)} piecewise F-syndetic={is_pw_rel_syndetic(ctx, A).value}",
          "idempotent witness:", is_pw_rel_syndetic_idem(ctx, A).witness)

# a piecewise syndetic set splits as (syndetic) ∩ (thick)
ctx = absolute_context(S)
A = from_elements([0, 4])
d = decompose_pw(ctx, A)
print(f"A = {fmt(A)}: B = {fmt(d.B)}, C = {fmt(d.C)}, e = {d.e}")
print("clauses:", verify_decomposition(ctx, A, d))
