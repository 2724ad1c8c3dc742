import json
import random

import pytest

from conftest import m
from semisize import (
    AssociativityFailure,
    OutOfRangeEntry,
    Semigroup,
    enumerate_semigroups,
    is_ideal,
    is_left_ideal,
    is_right_ideal,
    kernel,
    make_named,
    minimal_left_ideals,
    preimage_translate,
    subsemigroups,
    validate_semigroup,
)
from semisize.errors import BoundExceeded
from semisize.oracles import min_ideal
from semisize.semigroup import (
    associativity_failures,
    canonical_table,
    dump_semigroup,
    load_semigroup,
    parse_semigroup_json,
    parse_semigroup_text,
    random_semigroup,
    restrict,
    subsemigroup_kernel,
)

Z4_TABLE = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]]


class TestValidation:
    def test_cyclic_group_table_is_valid(self):
        S = validate_semigroup(Z4_TABLE)
        assert S.order == 4

    def test_left_zero_is_valid(self):
        S = validate_semigroup([[a] * 3 for a in range(3)])
        assert S.table == make_named("left_zero", 3).table

    def test_nonassociative_reports_first_triple(self):
        with pytest.raises(AssociativityFailure) as info:
            validate_semigroup([[0, 1], [0, 0]])
        e = info.value
        # the error names the lexicographically first bad triple
        assert (e.a, e.b, e.c, e.left, e.right) == (1, 0, 1, 1, 0)

    def test_all_bad_triples(self):
        # (1*1)*1 = 0*1 = 1 but 1*(1*1) = 1*0 = 0
        bad = list(associativity_failures([[0, 1], [0, 0]]))
        assert (1, 1, 1, 1, 0) in bad
        assert bad == [(1, 0, 1, 1, 0), (1, 1, 1, 1, 0)]

    @pytest.mark.parametrize("table", [[[0, 2], [1, 0]], [[0, -1], [0, 0]], [[0, "x"], [0, 0]]])
    def test_out_of_range(self, table):
        with pytest.raises(OutOfRangeEntry):
            validate_semigroup(table)

    def test_ragged_table_rejected(self):
        with pytest.raises(ValueError):
            validate_semigroup([[0, 0], [0]])


@pytest.mark.parametrize(
    "kind,n,expected",
    [
        ("cyclic_add", 4, lambda a, b: (a + b) % 4),
        ("left_zero", 3, lambda a, b: a),
        ("cyclic_mul", 6, lambda a, b: a * b % 6),
        ("right_zero", 3, lambda a, b: b),
    ],
)
def test_named(kind, n, expected):
    S = make_named(kind, n)
    assert all(S.table[a][b] == expected(a, b) for a in range(n) for b in range(n))


def test_named_unknown_kind():
    with pytest.raises(ValueError):
        make_named("free", 3)


class TestPreimage:
    def test_translate_in_z4(self, z4):
        assert preimage_translate(z4, 1, m(0, 2)) == m(1, 3)

    def test_full_and_empty(self, z6mul):
        for h in range(6):
            assert preimage_translate(z6mul, h, z6mul.full) == z6mul.full
            assert preimage_translate(z6mul, h, 0) == 0

    def test_out_of_range_element(self, z4):
        with pytest.raises(ValueError):
            preimage_translate(z4, 4, m(0))


class TestIdeals:
    def test_zero_absorbs(self, z6mul):
        assert is_left_ideal(z6mul, m(0))
        assert is_right_ideal(z6mul, m(0))
        assert is_ideal(z6mul, m(0))

    def test_right_zero_singleton(self, right_zero3):
        assert is_left_ideal(right_zero3, m(1))
        assert not is_right_ideal(right_zero3, m(1))

    def test_empty_is_never_an_ideal(self, z4):
        assert not is_left_ideal(z4, 0)
        assert not is_right_ideal(z4, 0)

    def test_minimal_left_ideals(self, right_zero3, z6mul, z4):
        assert minimal_left_ideals(right_zero3) == [m(0), m(1), m(2)]
        assert minimal_left_ideals(z6mul) == [m(0)]
        assert minimal_left_ideals(z4) == [m(0, 1, 2, 3)]

    def test_kernel_examples(self, z6mul, left_zero3, z4):
        k = kernel(z6mul)
        assert (k.kernel, k.minimal_idempotents) == (m(0), m(0))
        k = kernel(left_zero3)
        assert (k.kernel, k.idempotents) == (m(0, 1, 2), m(0, 1, 2))
        k = kernel(z4)
        assert (k.kernel, k.minimal_idempotents) == (z4.full, m(0))

    def test_kernel_matches_brute_force_order3(self):
        for S in enumerate_semigroups(3, dedupe=True):
            assert kernel(S).kernel == min_ideal(S)


class TestSubsemigroups:
    def test_z6mul_contains_listed(self, z6mul):
        found = set(subsemigroups(z6mul))
        for V in (m(1), m(1, 5), m(0), m(0, 3), m(0, 2, 4), z6mul.full):
            assert V in found

    def test_left_zero_all_nonempty(self):
        assert list(subsemigroups(make_named("left_zero", 2))) == [m(0), m(1), m(0, 1)]

    def test_z4_subgroups_only(self, z4):
        assert sorted(subsemigroups(z4)) == [m(0), m(0, 2), m(0, 1, 2, 3)]

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            list(subsemigroups(make_named("left_zero", 9)))

    def test_restrict_and_kernel(self, z6mul):
        sub, elems = restrict(z6mul, m(0, 3))
        assert elems == [0, 3]
        assert sub.table == ((0, 0), (0, 1))
        assert subsemigroup_kernel(z6mul, m(0, 3)).kernel == m(0)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 8), (3, 113)])
    def test_labelled_counts(self, n, count):
        assert sum(1 for _ in enumerate_semigroups(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 5), (3, 24), (4, 188)])
    def test_isomorphism_class_counts(self, n, count):
        assert sum(1 for _ in enumerate_semigroups(n, dedupe=True)) == count

    def test_labelled_count_order4(self):
        # regression constant recorded from the exhaustive filter
        assert sum(1 for _ in enumerate_semigroups(4)) == 3492

    def test_order2_brute_force(self):
        import itertools

        count = 0
        for entries in itertools.product(range(2), repeat=4):
            t = [list(entries[:2]), list(entries[2:])]
            try:
                validate_semigroup(t)
                count += 1
            except AssociativityFailure:
                pass
        assert count == 8

    def test_canonical_is_relabel_invariant(self, z6mul):
        perm = [3, 0, 5, 1, 4, 2]
        inv = {p: i for i, p in enumerate(perm)}
        t = [[perm[z6mul.table[inv[a]][inv[b]]] for b in range(6)] for a in range(6)]
        assert canonical_table(t) == canonical_table(z6mul.table)

    def test_bound_refused(self):
        with pytest.raises(BoundExceeded):
            next(enumerate_semigroups(5))

    @pytest.mark.parametrize("n", [5, 6])
    def test_random_semigroups_are_associative(self, n):
        rng = random.Random(7)
        for _ in range(5):
            S = random_semigroup(n, rng)
            assert S.order == n  # construction already validated associativity


class TestFiles:
    def test_json_roundtrip(self, tmp_path, z6mul):
        p = tmp_path / "s.json"
        dump_semigroup(z6mul, p)
        assert load_semigroup(p) == z6mul
        assert json.loads(p.read_text())["table"][2] == [0, 2, 4, 0, 2, 4]

    def test_text_format(self, z4):
        text = "4\n" + "\n".join(" ".join(map(str, r)) for r in Z4_TABLE) + "\n"
        assert parse_semigroup_text(text) == z4

    def test_text_error_position(self):
        with pytest.raises(ValueError, match="line 3, column 3"):
            parse_semigroup_text("2\n0 0\n0 q\n")

    def test_json_errors(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_semigroup_json("{bad")
        with pytest.raises(ValueError, match="table"):
            parse_semigroup_json('{"n": 2}')

    def test_corrupted_file_fails_on_load(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"table": [[0, 1], [0, 0]]}))
        with pytest.raises(AssociativityFailure):
            load_semigroup(p)


def test_semigroup_is_hashable_value(z4):
    assert Semigroup(z4.table) == z4
    assert len({z4, Semigroup(z4.table)}) == 1
