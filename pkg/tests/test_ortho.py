# tests/test_ortho.py
# Orthogonal Grothendieck polynomials, GC^O coefficients and their combinatorial models

import pytest

from errors import UsageError
from grothendieck import GrothExpansion, expand
from involutions import (
    Involution,
    NotVexillaryError,
    enumerate_involutions,
    enumerate_vexillary,
    g_family,
    g_pair_family,
    igrassmannian,
    is_quasi_dominant,
    t_family,
)
from permgroup import Permutation
from polyring import BETA, X, oplus
from ortho import (
    NotQuasiDominantError,
    binv_plus_data,
    closed_form_holds,
    dom_thm_gco,
    g2n_u_max,
    gc_values,
    gco,
    gp_stab_check,
    gq_from_gco,
    gq_from_shiftable,
    igrass_expansion,
    igrass_formula,
    invgroth,
    invgroth_recursion_holds,
    is_locally_noncrossing,
    ivex_formula,
    ortho_groth,
    ortho_longest,
    predicted_binv_plus,
    qd_formula,
    shift_expansion,
    shift_invariant,
    shiftable_data,
    stable_limit,
    stable_truncation,
    varpi,
)


def W(text: str) -> Permutation:
    return Permutation.parse(text)


def Z(text: str) -> Involution:
    return Involution.parse(text)


class TestInvolutionGroth:
    def test_two_cycle_example(self):
        z = Z("(1,4)(2,5)")
        x1, x2, x3 = X(1), X(2), X(3)
        assert invgroth(z) == x1 * x2 * oplus(x1, x2) * oplus(x1, x3) * oplus(x2, x3)
        assert expand(invgroth(z)) == GrothExpansion({
            W("24513"): 1,
            W("25413"): BETA,
            W("25314"): 1,
            W("35214"): BETA,
            W("35124"): 1,
        })

    @pytest.mark.parametrize("n", [3, 4])
    def test_divided_difference_recursion(self, n):
        for z in enumerate_involutions(n):
            for i in range(1, n):
                assert invgroth_recursion_holds(z, i), (z.render(), i)


class TestOrthoGroth:
    def test_smallest_cases(self):
        assert ortho_groth(Z("(1,2)")) == 2 * X(1) + BETA * X(1) ** 2
        x1, x2 = X(1), X(2)
        expected = (
            2 * x1 * x2 + 2 * x1 ** 2 + 3 * BETA * x1 ** 2 * x2
            + BETA * x1 ** 3 + BETA ** 2 * x1 ** 3 * x2
        )
        assert ortho_groth(Z("(1,3)")) == expected

    def test_longest_element(self):
        assert ortho_longest(3) == ortho_groth(Z("(1,3)"))
        assert ortho_longest(4) == ortho_groth(Z("(1,4)(2,3)"))

    def test_identity_is_one(self):
        assert ortho_groth(Involution.identity()) == 1

    def test_rejects_non_vexillary(self):
        with pytest.raises(NotVexillaryError):
            ortho_groth(Z("(1,2)(3,4)"))

    @pytest.mark.parametrize("n", [3, 4])
    def test_quasi_dominant_product(self, n):
        for z in enumerate_vexillary(n):
            if is_quasi_dominant(z):
                assert ortho_groth(z) == qd_formula(z), z.render()

    def test_quasi_dominant_precondition(self):
        with pytest.raises(NotQuasiDominantError):
            qd_formula(Z("(2,3)"))


class TestCoefficients:
    def test_smallest_expansion(self):
        assert gc_values(Z("(1,2)")) == {W("21"): 2, W("312"): 1}

    def test_golden_expansions(self):
        assert gco(Z("(2,3)")) == GrothExpansion({
            W("132"): 2,
            W("231"): BETA,
            W("1423"): BETA,
            W("2413"): BETA ** 2,
        })
        assert gco(Z("(1,3)")) == GrothExpansion({
            W("231"): 2,
            W("312"): 2,
            W("321"): 3 * BETA,
            W("4123"): BETA,
            W("4213"): BETA ** 2,
        })

    def test_chain_formula_value(self):
        values = dom_thm_gco(Z("(1,4)"))
        assert values[W("4213").inverse()] == 3
        assert values == gc_values(Z("(1,4)"))

    @pytest.mark.parametrize("n", [3, 4])
    def test_chain_formula_matches_expansion(self, n):
        for z in enumerate_vexillary(n):
            if is_quasi_dominant(z):
                assert dom_thm_gco(z) == gc_values(z), z.render()

    def test_values_are_positive(self):
        for z in enumerate_vexillary(4):
            assert all(g > 0 for g in gc_values(z).values())


class TestShiftable:
    Z4 = "(2,7)(3,8)(4,6)(5,9)"

    def test_shiftable_sets(self):
        data = shiftable_data(Z(self.Z4))
        assert {s.members for s in data.sets} == {
            (), (2,), (4,), (2, 3), (2, 4), (4, 5), (2, 3, 4), (2, 4, 5), (2, 3, 4, 5),
        }

    def test_conjugate_and_weights(self):
        z = Z(self.Z4)
        data = shiftable_data(z)
        entry = next(s for s in data.sets if s.members == (2, 4, 5))
        assert entry.conjugate == Z("(1,7)(2,6)(3,8)(4,9)")
        assert entry.varpi == -(1 + BETA * X(2)) * (2 + BETA * X(3)) * (1 + BETA * X(5))
        empty = varpi(z, frozenset())
        assert empty == (2 + BETA * X(2)) * (2 + BETA * X(3)) * (2 + BETA * X(4)) * (2 + BETA * X(5))

    @pytest.mark.parametrize("n", [3, 4])
    def test_shiftable_sum(self, n):
        for z in enumerate_vexillary(n):
            assert ivex_formula(z) == ortho_groth(z), z.render()

    def test_locally_noncrossing(self):
        assert all(is_locally_noncrossing(z) for z in enumerate_vexillary(4))


class TestIGrassmannian:
    def test_three_terms(self):
        terms = igrass_expansion((3, 2), 4)
        assert [t.lam for t in terms] == [(3, 2), (4, 2), (4, 3)]
        assert [t.beta_pow for t in terms] == [0, 1, 2]

    @pytest.mark.parametrize("mu,n", [((1,), 2), ((2,), 2), ((2, 1), 2), ((1,), 3)])
    def test_formula(self, mu, n):
        assert igrass_formula(mu, n) == ortho_groth(igrassmannian(mu, n))


class TestBinvPlus:
    def test_identity(self):
        data = binv_plus_data(Involution.identity())
        assert data.members == frozenset({Permutation.identity()})

    def test_transposition(self):
        data = binv_plus_data(t_family(4))
        assert data.graph.number_of_nodes() == 8
        assert data.graph.number_of_edges() == 9
        assert data.is_connected()
        assert data.members == predicted_binv_plus("t_n", 4)

    def test_sizes(self):
        assert len(binv_plus_data(g_family(3)).members) == 8
        assert len(binv_plus_data(Z("4321")).members) == 18

    @pytest.mark.parametrize("n", [3, 4])
    def test_support_between_atoms_and_chain_targets(self, n):
        for z in enumerate_vexillary(n):
            data = binv_plus_data(z)
            assert data.atoms <= gco(z).support() <= data.members, z.render()


class TestStable:
    def test_shift_up(self):
        expansion = GrothExpansion({W("21"): 2, W("312"): BETA})
        assert shift_expansion(expansion, "up") == GrothExpansion({W("132"): 2, W("1423"): BETA})

    def test_shift_down_drops_unshiftable(self):
        expansion = GrothExpansion({W("132"): 2, W("231"): BETA})
        assert shift_expansion(expansion, "down") == GrothExpansion({W("21"): 2})

    def test_unknown_direction(self):
        with pytest.raises(UsageError):
            shift_expansion(GrothExpansion(), "sideways")

    def test_shift_invariance(self):
        for z in enumerate_vexillary(3):
            assert shift_invariant(z) == (z(1) == 1), z.render()

    def test_gq_from_expansion(self):
        z = Z("(2,3)")
        assert gq_from_gco(z, 1, 2) == stable_truncation(z, "GQ", 1, 2)

    def test_gq_from_shiftable_sets(self):
        z = Z("(2,3)")
        assert gq_from_shiftable(z, 2, 2) == stable_truncation(z, "GQ", 2, 2)

    def test_stable_limit_is_fixed_point(self):
        z = Z("(1,2)")
        limit, steps = stable_limit(z, "GQ", 2)
        assert stable_truncation(z, "GQ", steps + 1, 2) == limit
        assert stable_truncation(z.one_times(1), "GQ", steps, 2) == limit

    def test_stab_operator(self):
        assert gp_stab_check((1,), 2)

    def test_unknown_family(self):
        with pytest.raises(UsageError):
            stable_truncation(Z("(1,2)"), "GX", 0, 1)


class TestClosedForms:
    def test_transposition_family(self):
        assert closed_form_holds("t_n", 3)
        assert closed_form_holds("t_n", 4)

    @pytest.mark.slow
    def test_pair_family(self):
        assert closed_form_holds("g_2n", 3)

    @pytest.mark.slow
    def test_top_term_parity(self):
        assert g2n_u_max(3) not in gc_values(g_pair_family(2, 3))
        assert gc_values(g_pair_family(2, 4))[g2n_u_max(4)] == 1
