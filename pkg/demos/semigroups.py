"""Cayley tables, enumeration up to isomorphism, and kernels."""

from semisize import enumerate_semigroups, kernel, make_named, minimal_left_ideals, subsemigroups
from semisize.bitsets import fmt
from semisize.semigroup import associativity_failures

# multiplication mod 6: 0 absorbs everything, so {0} is the whole kernel
S = make_named("cyclic_mul", 6)
for row in S.table:
    print(" ".join(map(str, row)))

k = kernel(S)
print("minimal left ideals:", [fmt(L) for L in minimal_left_ideals(S)])
print("kernel:", fmt(k.kernel), " idempotents:", fmt(k.idempotents), " minimal:", fmt(k.minimal_idempotents))

# right-zero semigroup: every singleton is a minimal left ideal
R = make_named("right_zero", 3)
print("right zero, minimal left ideals:", [fmt(L) for L in minimal_left_ideals(R)])

print("subsemigroups of Z6 under *:", " ".join(fmt(V) for V in subsemigroups(S)))

# a table that is not associative, with every offending triple
print("bad triples of [[0,1],[0,0]]:", list(associativity_failures([[0, 1], [0, 0]])))

for n in range(1, 5):
    labelled = sum(1 for _ in enumerate_semigroups(n))
    classes = sum(1 for _ in enumerate_semigroups(n, dedupe=True))
    print(f"order {n}: {labelled} labelled tables, {classes} up to isomorphism")
