# tests/test_involutions.py
# Involutions: statistics, atoms, weak order paths, families, arc diagrams

import pytest

from errors import PreconditionError
from involutions import (
    FamilyParameterError,
    FpfInvolution,
    Involution,
    NotFixedPointFreeError,
    NotInvolutionError,
    NotVexillaryError,
    alpha_fpf,
    alpha_inv,
    binv,
    binv_sorted,
    check_binv_fiber,
    dom_path,
    dom_pq,
    ell_inv,
    enumerate_fpf,
    enumerate_involutions,
    enumerate_vexillary,
    fpf,
    g_family,
    g_pair_family,
    hat_diagram,
    igrassmannian,
    inv_stats,
    is_quasi_dominant,
    is_vexillary_arc,
    j_of,
    k_of,
    shape,
    special_family,
    t_family,
    w_family,
)
from permgroup import Permutation, demazure


def Z(text: str) -> Involution:
    return Involution.parse(text)


def perms(*texts):
    return {Permutation.parse(t) for t in texts}


class TestInvolution:
    def test_parse_and_render(self):
        z = Z("(1,4)(2,5)")
        assert z.perm == Permutation.parse("45312")
        assert z.render() == "(1,4)(2,5)"
        assert Z("4321") == Involution([(1, 4), (2, 3)])
        assert Involution.identity().render() == "1"

    def test_rejects_non_involutions(self):
        with pytest.raises(NotInvolutionError):
            Z("231")
        with pytest.raises(NotInvolutionError):
            Involution([(1, 2), (2, 3)])

    def test_fixed_point_free(self):
        z = FpfInvolution([(1, 3), (2, 4)])
        assert z.n == 4
        with pytest.raises(NotFixedPointFreeError):
            FpfInvolution([(1, 3)])

    def test_conjugation(self):
        assert Z("(2,3)").conjugate(1) == Z("(1,3)")
        assert Z("(1,2)").one_times(2) == Z("(3,4)")

    def test_require_vexillary(self):
        with pytest.raises(NotVexillaryError):
            Z("(1,2)(3,4)").require_vexillary()
        assert Z("(1,3)").require_vexillary() == Z("(1,3)")

    def test_enumeration_counts(self):
        assert [len(list(enumerate_involutions(n))) for n in range(1, 6)] == [1, 2, 4, 10, 26]
        assert len(list(enumerate_fpf(4))) == 3
        assert len(list(enumerate_fpf(6))) == 15
        with pytest.raises(NotFixedPointFreeError):
            list(enumerate_fpf(3))

    def test_vexillary_enumeration_skips_2143(self):
        found = list(enumerate_vexillary(4))
        assert Z("(1,2)(3,4)") not in found
        assert len(found) == 9


class TestStats:
    def test_example_statistics(self):
        stats = inv_stats(Z("(1,4)(2,5)"))
        assert stats.cyc == 2
        assert stats.ell_inv == 5
        assert stats.k == 2

    def test_identity_statistics(self):
        stats = inv_stats(Involution.identity())
        assert (stats.cyc, stats.ell_inv, stats.des_v, stats.k, stats.quasi_dominant, stats.j) == (
            0, 0, frozenset(), 0, True, 1
        )

    def test_transposition_statistics(self):
        stats = inv_stats(Z("(1,2)"))
        assert (stats.cyc, stats.ell_inv, stats.k, stats.quasi_dominant) == (1, 1, 1, True)

    def test_half_diagram_counts_involution_length(self):
        for z in enumerate_involutions(5):
            assert len(hat_diagram(z)) == ell_inv(z)

    def test_leading_fixed_points(self):
        assert j_of(Involution.identity()) == 1
        assert j_of(Z("(2,3)")) == 1
        assert j_of(Involution([(3, 4)])) == 2

    def test_quasi_dominant_members_of_i3(self):
        found = [z for z in enumerate_involutions(3) if is_quasi_dominant(z)]
        assert set(found) == {Involution.identity(), Z("(1,2)"), Z("(1,3)")}

    def test_shape(self):
        assert shape(igrassmannian((3, 1), 4)) == (3, 1)
        assert shape(Involution.identity()) == ()


class TestAtoms:
    def test_alpha_inv(self):
        assert alpha_inv(Z("(1,4)(2,5)")) == Permutation.parse("24513")
        assert alpha_inv(Involution.identity()) == Permutation.identity()
        assert alpha_inv(Z("(1,3)")) == Permutation.parse("231")

    def test_binv_examples(self):
        assert binv(Z("(1,4)(2,5)")) == perms("24513", "25413", "25314", "35214", "35124")
        assert binv(Z("(1,2)")) == perms("21")
        assert binv(Z("(1,3)")) == perms("231", "312", "321")

    def test_binv_sorted_starts_at_alpha(self):
        z = Z("(1,4)(2,5)")
        assert binv_sorted(z)[0].length() == ell_inv(z)

    def test_binv_is_the_demazure_fiber(self):
        for z in enumerate_involutions(4):
            check_binv_fiber(z)
            for w in binv(z):
                assert demazure(w.inverse(), w) == z.perm

    def test_alpha_fpf(self):
        assert alpha_fpf(FpfInvolution([(1, 2)])) == Permutation.identity()
        assert alpha_fpf(FpfInvolution([(1, 3), (2, 4)])) == Permutation.parse("1324")

    def test_fpf_class_of_12(self):
        alpha, atoms = fpf(FpfInvolution([(1, 2)]))
        assert alpha == Permutation.identity()
        assert atoms == {Permutation.identity()}


class TestWeakOrder:
    def test_dominant_start_gives_empty_path(self):
        path = dom_path(dom_pq(2, 5))
        assert path.steps == ()
        assert path.end == dom_pq(2, 5)

    def test_single_transposition(self):
        path = dom_path(Z("(1,2)"))
        assert (path.p, path.q, path.steps) == (1, 2, ())

    def test_path_from_23(self):
        path = dom_path(Z("(2,3)"))
        assert path.end == Z("(1,3)")
        assert set(path.indices) <= {1, 2}

    def test_every_vexillary_involution_reaches_dom_pq(self):
        for z in enumerate_vexillary(5):
            path = dom_path(z)
            assert path.end.is_dominant()
            assert path.end.length() == z.length() + 2 * len(path.steps)

    def test_non_vexillary_rejected(self):
        with pytest.raises(NotVexillaryError):
            dom_path(Z("(1,2)(3,4)"))


class TestFamilies:
    def test_named_families(self):
        assert t_family(4) == Z("(1,4)")
        assert g_family(3) == Z("(1,4)(2,5)(3,6)")
        assert w_family(1, 4) == Z("4321")
        assert g_pair_family(2, 3) == Z("(2,4)(3,5)")

    def test_igrassmannian(self):
        assert igrassmannian((), 3) == Involution.identity()
        assert igrassmannian((2, 1), 3) == g_pair_family(2, 3)
        assert igrassmannian((3, 2, 1), 4) == g_pair_family(2, 4)
        with pytest.raises(PreconditionError):
            igrassmannian((5,), 4)

    def test_dom_pq(self):
        assert dom_pq(2, 5) == Z("(1,5)(2,4)")
        assert dom_pq(0, 0) == Involution.identity()
        with pytest.raises(PreconditionError):
            dom_pq(2, 3)

    def test_special_family_dispatch(self):
        assert special_family("t_n", 4) == t_family(4)
        assert special_family("w_ij", 1, 4) == w_family(1, 4)
        with pytest.raises(FamilyParameterError):
            special_family("x_n", 4)
        with pytest.raises(FamilyParameterError):
            special_family("t_n", 1, 2)


class TestArcs:
    def test_pattern_itself(self):
        assert not is_vexillary_arc(Z("(1,2)(3,4)"))
        assert is_vexillary_arc(Z("(1,4)(2,3)"))

    def test_agrees_with_pattern_avoidance(self):
        for z in enumerate_involutions(6):
            assert is_vexillary_arc(z) == z.is_vexillary()

    def test_partner_outside_subset_is_not_isolated(self):
        # {2,3,5,6,7,8} induces (1,4)(3,6) on (1,7)(2,6)(5,8) but leaves out 1 = z(7)
        for text in ("(1,7)(2,6)(5,8)", "(2,5)(3,6)(4,8)"):
            z = Z(text)
            assert z.is_vexillary()
            assert is_vexillary_arc(z)

    def test_fixed_points_fill_pattern_gaps(self):
        assert not is_vexillary_arc(Z("(1,4)(3,6)"))
        assert not Z("(1,4)(3,6)").is_vexillary()

    @pytest.mark.slow
    def test_agrees_with_pattern_avoidance_on_i8(self):
        mismatches = [z for z in enumerate_involutions(8) if is_vexillary_arc(z) != z.is_vexillary()]
        assert mismatches == []
