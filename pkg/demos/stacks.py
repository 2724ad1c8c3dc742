"""Upward-closed families on a finite set: mesh, products, closures."""

from semisize import FilterKernel, make_named, mesh, point, stack_product, translation_set
from semisize.bitsets import fmt, from_elements
from semisize.stacks import canonical, filter_closure

S = make_named("cyclic_mul", 6)

# a stack is stored as its antichain of minimal sets
F = canonical(6, [from_elements([0, 1]), from_elements([1, 2, 3]), from_elements([0, 1, 4])])
print("F =", F)
print("mesh of F =", mesh(F))
print("mesh twice gives F back:", mesh(mesh(F)) == F)

# every filter on a finite set is principal; its mesh is "meets the generator"
units = FilterKernel(6, from_elements([1, 5]))
print("mesh of the filter on {1,5}:", mesh(units))
print("closure of that filter:", fmt(filter_closure(units)))

# products of filters: generated by the elementwise product of generators
two = FilterKernel(6, from_elements([2]))
print("up{1,5} * up{2} =", stack_product(units, two, S))

# points multiply like elements
print("point(5) * point(4) =", stack_product(point(6, 5), point(6, 4), S))

# A'(p): the x with x^{-1}A in p, i.e. x*p in A
A = from_elements([0, 2])
Z4 = make_named("cyclic_add", 4)
print("Z4, A = {0,2}: A'(1) =", fmt(translation_set(A, point(4, 1), Z4)))
