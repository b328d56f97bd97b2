# tests/test_grothendieck.py
# Grothendieck polynomials, basis expansion, transition and Pieri formulas

import pytest

from errors import PreconditionError, UsageError
from grothendieck import (
    GrothExpansion,
    NormalizationError,
    expand,
    grassmannian_pieri,
    groth,
    groth_from_top,
    groth_oracle,
    lenart_transition,
    lensot_product,
    one_row_transition,
    pieri_chain,
    pieri_chains,
    pieri_targets,
    symp_groth,
    two_power_product,
)
from involutions import FpfInvolution, enumerate_fpf
from ortho import two_power_factor
from permgroup import Permutation, all_permutations, grassmannian
from polyring import BETA, MultiPoly, X
from resilience import StepBudgetExceeded


def W(text: str) -> Permutation:
    return Permutation.parse(text)


class TestGroth:
    def test_identity_is_one(self):
        assert groth(Permutation.identity()) == 1

    def test_small_values(self):
        assert groth(W("132")) == X(1) + X(2) + BETA * X(1) * X(2)
        assert groth(W("312")) == X(1) ** 2
        assert groth(W("321")) == X(1) ** 2 * X(2)

    def test_dominant_is_monomial(self):
        # code of 4213 is (3,1)
        assert groth(W("4213")) == X(1) ** 3 * X(2)

    @pytest.mark.parametrize("n", [3, 4])
    def test_agrees_with_top_down_computation(self, n):
        for w in all_permutations(n):
            assert groth(w) == groth_from_top(w, n), w.render()

    @pytest.mark.parametrize("n", [3, 4])
    def test_agrees_with_compatible_sequences(self, n):
        for w in all_permutations(n):
            assert groth(w) == groth_oracle(w), w.render()

    @pytest.mark.slow
    def test_agrees_with_compatible_sequences_on_s5(self):
        for w in all_permutations(5):
            assert groth(w) == groth_oracle(w), w.render()

    def test_stable_under_embedding(self):
        assert groth_from_top(W("132"), 5) == groth(W("132"))

    def test_top_down_rejects_small_group(self):
        with pytest.raises(UsageError):
            groth_from_top(W("4321"), 3)


class TestExpansion:
    def test_expand_small_polynomial(self):
        result = expand(2 * X(1) + BETA * X(1) ** 2)
        assert result == GrothExpansion({W("213"): 2, W("312"): BETA})
        assert result.render() == "2*G[21] + b^1*G[312]"

    def test_expand_basis_element(self):
        w = W("24513")
        assert expand(groth(w)) == GrothExpansion({w: 1})

    def test_expand_zero(self):
        assert not expand(MultiPoly())

    def test_evaluate_inverts_expand(self):
        p = groth(W("132")) * groth(W("231")) + 3 * X(2) ** 2
        assert expand(p).evaluate() == p

    def test_basis_elements_peel_in_one_step(self):
        # 1432 has code (0,2,1) but x1^2 x2 is its x1-first greatest term
        for w in all_permutations(4):
            assert expand(groth(w), budget_override=1) == GrothExpansion({w: 1}), w.render()

    def test_product_of_six_factors_within_default_budget(self):
        assert expand(two_power_factor(6)) == two_power_product(6)

    @pytest.mark.slow
    def test_basis_elements_of_s6(self):
        for w in all_permutations(6):
            assert expand(groth(w)) == GrothExpansion({w: 1}), w.render()

    def test_budget_exhaustion(self):
        with pytest.raises(StepBudgetExceeded):
            expand(X(1) + X(2) + X(3), budget_override=1)

    def test_normalized(self):
        expansion = GrothExpansion({W("213"): 2, W("312"): BETA})
        assert expansion.normalized(1) == {W("213"): 2, W("312"): 1}

    def test_normalized_rejects_wrong_beta_power(self):
        with pytest.raises(NormalizationError):
            GrothExpansion({W("312"): 2}).normalized(1)

    def test_arithmetic_cancels(self):
        a = GrothExpansion({W("21"): 1, W("312"): BETA})
        assert not (a - a)
        assert (a + a) == a.scale(2)

    def test_json_payload(self):
        a = GrothExpansion({W("21"): 2})
        assert GrothExpansion.from_json(a.to_json()) == a


class TestTransition:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_lenart_matches_product(self, k):
        for v in all_permutations(3):
            lhs = expand((1 + BETA * X(k)) * groth(v))
            assert lenart_transition(k, v) == lhs, (k, v.render())

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_one_row_transition(self, n):
        for j in range(n + 1):
            lhs = (1 + BETA * X(n + 1)) * groth(grassmannian((1,) * j, n))
            assert one_row_transition(j, n).evaluate() == lhs

    def test_one_row_transition_range(self):
        with pytest.raises(UsageError):
            one_row_transition(3, 2)

    def test_two_power_product(self):
        assert two_power_product(1).evaluate() == 2 + BETA * X(1)
        assert two_power_product(2) == GrothExpansion({
            Permutation.identity(): 4,
            grassmannian((1,), 2): 2 * BETA,
            grassmannian((1, 1), 2): -(BETA ** 2),
        })

    def test_two_power_product_needs_positive_k(self):
        with pytest.raises(UsageError):
            two_power_product(0)


class TestPieri:
    def test_single_step_chain(self):
        chain, f, p = pieri_chain(Permutation.identity(), W("21"), 1)
        assert chain.steps == ((1, 2),)
        assert (f, p) == (1, 0)

    def test_unreachable_target(self):
        assert pieri_chain(Permutation.identity(), W("321"), 1) is None

    @pytest.mark.parametrize("k", [1, 2])
    def test_lensot_matches_product(self, k):
        for p in range(1, k + 1):
            factor = groth(grassmannian((1,) * p, k))
            for v in all_permutations(3):
                assert lensot_product(p, k, v) == expand(factor * groth(v)), (p, k, v.render())

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [3, 4])
    def test_lensot_matches_product_for_larger_k(self, k):
        for p in range(1, k + 1):
            factor = groth(grassmannian((1,) * p, k))
            for v in all_permutations(4):
                assert lensot_product(p, k, v) == expand(factor * groth(v)), (p, k, v.render())

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_chain_end_points_are_distinct_on_s5(self, k):
        for v in all_permutations(5):
            targets = pieri_targets(v, k)
            assert len(targets) == sum(1 for _ in pieri_chains(v, k)), (k, v.render())

    def test_lensot_p_out_of_range(self):
        with pytest.raises(PreconditionError, match="p out of range"):
            lensot_product(3, 2, W("21"))

    @pytest.mark.parametrize("lam", [(), (1,), (2,), (1, 1), (2, 1)])
    def test_grassmannian_pieri_matches_product(self, lam):
        k = 2
        for p in range(1, k + 1):
            product = groth(grassmannian((1,) * p, k)) * groth(grassmannian(lam, k))
            assert grassmannian_pieri(p, k, lam) == expand(product), (p, lam)

    def test_grassmannian_pieri_too_many_parts(self):
        with pytest.raises(PreconditionError, match="too many parts"):
            grassmannian_pieri(1, 2, (1, 1, 1))


class TestSymplectic:
    def test_smallest_fpf_involution(self):
        poly, expansion = symp_groth(FpfInvolution.parse("(1,2)"))
        assert poly == 1
        assert expansion == GrothExpansion({Permutation.identity(): 1})

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_expansion_resums_to_polynomial(self, n):
        for z in enumerate_fpf(n):
            poly, expansion = symp_groth(z)
            assert expansion.evaluate() == poly
            assert all(c.beta_monomial()[0] == 1 for _, c in expansion.items())
