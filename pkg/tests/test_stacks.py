import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import m
from semisize import EmptyGenerator, FilterKernel, Stack, make_named, point
from semisize.errors import BoundExceeded
from semisize.stacks import (
    all_stacks,
    canonical,
    filter_closure,
    filter_mesh,
    filter_product,
    member,
    mesh,
    power_set_stack,
    stack_intersection,
    stack_product,
    stack_union,
    translation_set,
    up_closure,
)


class TestUpClosure:
    def test_absorbs_supersets(self):
        assert up_closure(3, [m(0, 1), m(0)]).minimal == (m(0),)

    def test_incomparable_kept(self):
        assert up_closure(3, [m(0, 1), m(1, 2)]).minimal == (m(0, 1), m(1, 2))

    def test_members_two_points(self):
        F = up_closure(2, [m(0), m(1)])
        assert F.minimal == (m(0), m(1))
        assert [A for A in range(4) if A in F] == [m(0), m(1), m(0, 1)]
        assert F.members.tolist() == [False, True, True, True]

    def test_empty_generator(self):
        with pytest.raises(EmptyGenerator):
            up_closure(3, [m(0), 0])
        with pytest.raises(EmptyGenerator):
            FilterKernel(3, 0)

    def test_invalid_antichain(self):
        with pytest.raises(ValueError):
            Stack(3, (m(0), m(0, 1)))
        with pytest.raises(ValueError):
            Stack(3, (m(1), m(0)))


class TestMembership:
    def test_superset_is_member(self):
        F = Stack(3, (m(0, 1),))
        assert member(F, m(0, 1, 2))
        assert not member(F, m(1, 2))

    def test_empty_set_outside_filters(self):
        for v0 in range(1, 8):
            assert not member(FilterKernel(3, v0), 0)


class TestMesh:
    def test_filter_mesh_is_hitting_family(self):
        F = FilterKernel(3, m(0, 1))
        assert mesh(F).minimal == (m(0), m(1))
        assert filter_mesh(F) == mesh(F)

    def test_full_filter_mesh(self):
        M = mesh(FilterKernel(3, m(0, 1, 2)))
        assert [A for A in range(8) if A in M] == list(range(1, 8))

    def test_ultrafilter_is_self_mesh(self):
        p = point(3, 2)
        assert mesh(p) == p.stack

    def test_degenerate_stacks_swap(self):
        assert mesh(Stack(3, ())) == power_set_stack(3)
        assert mesh(power_set_stack(3)) == Stack(3, ())


class TestProduct:
    def test_points_multiply(self, z6mul):
        for a in range(6):
            for b in range(6):
                prod = stack_product(point(6, a), point(6, b), z6mul)
                assert prod == point(6, a * b % 6).stack

    def test_filter_product_unit_group_times_two(self, z6mul):
        F = FilterKernel(6, m(1, 5))
        G = FilterKernel(6, m(2))
        assert stack_product(F, G, z6mul).minimal == (m(2, 4),)
        assert filter_product(F, G, z6mul).v0 == m(2, 4)

    def test_full_filter_times_point(self, z6mul):
        F = FilterKernel(6, z6mul.full)
        for b in range(6):
            expected = z6mul.product_set(z6mul.full, m(b))
            assert stack_product(F, point(6, b), z6mul).minimal == (expected,)

    def test_generic_sweep_bound(self, z4):
        F = Stack(4, (m(0), m(1)))
        with pytest.raises(BoundExceeded):
            stack_product(F, F, z4, bound=3)


class TestClosure:
    @pytest.mark.parametrize("v0", [m(0, 3), m(0, 1, 2, 3, 4, 5)])
    def test_closure_is_generator(self, v0):
        assert filter_closure(FilterKernel(6, v0)) == v0

    def test_point(self):
        assert filter_closure(point(6, 2)) == m(2)


class TestTranslationSet:
    def test_z4_point(self, z4):
        assert translation_set(m(0, 2), point(4, 1), z4) == m(1, 3)

    def test_full_set(self, z6mul):
        for v0 in (m(1), m(2, 4), z6mul.full):
            assert translation_set(z6mul.full, FilterKernel(6, v0), z6mul) == z6mul.full

    def test_complement_commutes(self, z4):
        A = m(0, 2)
        Ac = z4.full & ~A
        p = point(4, 1)
        assert z4.full & ~translation_set(A, p, z4) == m(0, 2) == translation_set(Ac, p, z4)


def test_stack_json_roundtrip():
    F = Stack(4, (m(0, 1), m(2)))
    data = F.to_json()
    # minimal sets are ordered by mask value: {0,1} = 3 before {2} = 4
    assert data == {"n": 4, "antichain": [[0, 1], [2]]}
    assert Stack.from_json(data) == F


def test_all_stacks_count():
    # upward-closed families on a 3-set: the Dedekind number M(3) = 20
    assert sum(1 for _ in all_stacks(3)) == 20


def test_empty_intersection_is_power_set():
    assert stack_intersection([], 3) == power_set_stack(3)
    assert stack_union([], 3) == Stack(3, ())


# -- randomized algebraic properties ----------------------------------------

def stacks_on(n):
    return st.lists(st.integers(0, (1 << n) - 1), max_size=4).map(lambda gens: canonical(n, gens))


@st.composite
def sized_stack(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return draw(stacks_on(n))


@given(sized_stack())
def test_mesh_involution(F):
    assert mesh(mesh(F)) == F


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(stacks_on(n), st.lists(st.integers(0, (1 << n) - 1), max_size=3))))
def test_mesh_anti_monotone(args):
    F, extra = args
    G = canonical(F.n, list(F.minimal) + extra)
    assert F.issubset(G)
    assert mesh(G).issubset(mesh(F))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_product_associative(data):
    kind, n = data.draw(st.sampled_from([("cyclic_add", 4), ("cyclic_mul", 5), ("left_zero", 3),
                                         ("right_zero", 4), ("cyclic_mul", 6)]))
    S = make_named(kind, n)
    F, G, H = (data.draw(stacks_on(n)) for _ in range(3))
    assert stack_product(stack_product(F, G, S), H, S) == stack_product(F, stack_product(G, H, S), S)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, (1 << n) - 1))))
def test_filter_is_intersection_of_its_points(args):
    n, v0 = args
    pts = [point(n, x).stack for x in range(n) if v0 >> x & 1]
    F = FilterKernel(n, v0)
    assert stack_intersection(pts, n) == F.stack
    assert stack_union(pts, n) == mesh(F)


def test_members_vector_matches_contains():
    F = Stack(5, (m(0, 3), m(1, 2, 4)))
    assert np.array_equal(F.members, np.array([A in F for A in range(32)]))
