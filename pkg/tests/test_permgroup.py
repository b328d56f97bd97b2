# tests/test_permgroup.py
# Permutations, diagrams, Demazure products, Bruhat covers, partitions

from functools import reduce

import pytest

from errors import PreconditionError, UsageError
from permgroup import (
    NotShiftableError,
    NotStrictError,
    PartitionError,
    Permutation,
    PermutationError,
    TooManyPartsError,
    all_permutations,
    as_partition,
    as_strict_partition,
    bruhat_cover,
    bruhat_leq,
    demazure,
    diagram_shape,
    from_code,
    grassmannian,
    hecke_words,
    is_dominant,
    is_grassmannian,
    is_symmetric,
    is_vexillary,
    is_vexillary_by_rows,
    lehmer_code,
    one_times,
    parse_partition,
    reduced_word,
    rothe,
    shift_down,
    strict_partitions,
    transpose,
)


def P(text: str) -> Permutation:
    return Permutation.parse(text)


class TestPermutation:
    def test_window_is_trimmed(self):
        assert Permutation([1, 2, 3]) == Permutation.identity()
        assert Permutation([2, 1, 3]).window == (2, 1)
        assert Permutation.identity().render() == "1"

    def test_rejects_non_permutations(self):
        with pytest.raises(PermutationError):
            Permutation([1, 1])
        with pytest.raises(UsageError):
            Permutation([0, 1])

    def test_parse_forms(self):
        assert P("24513") == Permutation([2, 4, 5, 1, 3])
        assert P("2,4,5,1,3") == P("24513")
        assert P("(1,4)(2,5)") == P("45312")
        assert P("[10,1,2,3,4,5,6,7,8,9]").render() == "[10,1,2,3,4,5,6,7,8,9]"
        with pytest.raises(PermutationError):
            P("(1,2")
        with pytest.raises(PermutationError):
            P("(9,9)")

    def test_statistics_of_24513(self):
        w = P("24513")
        assert w.length() == 5
        assert w.des_r() == {3}
        assert w.des_l() == {1, 3}
        assert w.inverse() == P("41523")

    def test_longest_element_of_s3(self):
        w = P("321")
        assert (w.length(), w.des_r(), w.des_l()) == (3, {1, 2}, {1, 2})

    def test_identity_statistics(self):
        e = Permutation.identity()
        assert (e.length(), e.des_r(), e.des_l()) == (0, frozenset(), frozenset())

    def test_composition_convention(self):
        s1, s2 = Permutation.simple(1), Permutation.simple(2)
        assert s1 * s2 == P("231")
        assert P("132").times_simple(1) == P("312")
        assert P("132").simple_times(1) == P("231")

    def test_from_cycles(self):
        assert Permutation.from_cycles([(1, 2, 3)]) == P("231")

    def test_code_decode(self):
        for w in all_permutations(4):
            assert from_code(lehmer_code(w)) == w
        assert lehmer_code(P("35124")) == (2, 3)

    def test_reduced_words(self):
        for w in all_permutations(4):
            word = reduced_word(w)
            assert len(word) == w.length()
            product = reduce(lambda acc, a: acc * Permutation.simple(a), word, Permutation.identity())
            assert product == w

    def test_sort_key_orders_by_length_first(self):
        perms = sorted([P("321"), P("21"), P("132")], key=lambda w: w.sort_key())
        assert [w.render() for w in perms] == ["132", "21", "321"]


class TestDiagrams:
    def test_dominant_321(self):
        data = rothe(P("321"))
        assert data.diagram == {(1, 1), (1, 2), (2, 1)}
        assert data.code == (2, 1)
        assert is_dominant(P("321"))
        assert diagram_shape(P("321")) == (2, 1)

    def test_identity_diagram(self):
        data = rothe(Permutation.identity())
        assert data.diagram == frozenset()
        assert data.code == ()

    def test_132_is_not_dominant(self):
        assert rothe(P("132")).diagram == {(2, 2)}
        assert not is_dominant(P("132"))

    @pytest.mark.parametrize("text,expected", [("2143", False), ("214365", False), ("321", True), ("3412", True)])
    def test_vexillary(self, text, expected):
        assert is_vexillary(P(text)) is expected

    def test_vexillary_tests_agree_on_s5(self):
        for w in all_permutations(5):
            assert is_vexillary(w) == is_vexillary_by_rows(w)
            if is_dominant(w):
                assert is_vexillary(w)


class TestDemazure:
    def test_idempotent_simple(self):
        s1 = Permutation.simple(1)
        assert demazure(s1, s1) == s1

    def test_lengths_add(self):
        assert demazure(Permutation.simple(1), Permutation.simple(2)) == P("231")

    def test_atom_product(self):
        w = P("24513")
        assert demazure(w.inverse(), w) == P("(1,4)(2,5)")

    def test_hecke_words(self):
        assert hecke_words(Permutation.identity(), 0) == {()}
        assert hecke_words(Permutation.simple(1), 2) == {(1,), (1, 1)}
        assert hecke_words(P("321"), 3) == {(1, 2, 1), (2, 1, 2)}


class TestBruhat:
    def test_bruhat_leq(self):
        assert bruhat_leq(P("132"), P("321"))
        assert bruhat_leq(Permutation.identity(), P("231"))
        assert not bruhat_leq(P("231"), P("312"))
        assert not bruhat_leq(P("312"), P("231"))

    def test_covers(self):
        e = Permutation.identity()
        assert bruhat_cover(e, 1, 2) == P("21")
        assert bruhat_cover(e, 1, 3) is None
        assert bruhat_cover(P("132"), 1, 2) == P("312")
        assert bruhat_cover(P("321"), 1, 2) is None
        with pytest.raises(UsageError):
            bruhat_cover(e, 2, 1)

    def test_shifts(self):
        assert one_times(P("21"), 1) == P("132")
        assert shift_down(P("132"), 1) == P("21")
        assert one_times(P("3467125"), 1) == P("14578236")
        with pytest.raises(NotShiftableError):
            shift_down(P("21"), 1)

    def test_not_shiftable_is_a_precondition(self):
        assert issubclass(NotShiftableError, PreconditionError)

    def test_grassmannian(self):
        assert grassmannian((1, 1, 1), 3) == P("2341")
        assert grassmannian((), 3) == Permutation.identity()
        assert grassmannian((1,), 3) == P("1243")
        assert grassmannian((1, 1), 3) == P("1342")
        assert grassmannian((2, 1), 2) == P("2413")
        assert is_grassmannian(grassmannian((3, 1), 2), 2)
        with pytest.raises(TooManyPartsError):
            grassmannian((1, 1, 1), 2)


class TestPartitions:
    def test_validation(self):
        assert as_partition((3, 1, 0, 0)) == (3, 1)
        with pytest.raises(PartitionError):
            as_partition((1, 2))
        with pytest.raises(NotStrictError):
            as_strict_partition((2, 2))

    def test_parse(self):
        assert parse_partition("3,2") == (3, 2)
        assert parse_partition("(3 2 1)") == (3, 2, 1)
        assert parse_partition("321") == (3, 2, 1)
        assert parse_partition("0") == ()
        with pytest.raises(PartitionError):
            parse_partition("3,x")

    def test_transpose_and_symmetry(self):
        assert transpose((3, 1)) == (2, 1, 1)
        assert transpose(()) == ()
        assert is_symmetric((2, 1))
        assert is_symmetric((3, 3, 2))
        assert not is_symmetric((2,))

    def test_strict_partitions(self):
        found = list(strict_partitions(3))
        assert found[0] == ()
        assert len(found) == 8
        assert set(found) == {(), (1,), (2,), (3,), (2, 1), (3, 1), (3, 2), (3, 2, 1)}
