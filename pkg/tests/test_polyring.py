# tests/test_polyring.py
# Ring arithmetic and divided difference operators

import random

import pytest

from config import settings
from errors import UsageError
from polyring import (
    BETA,
    MultiPoly,
    X,
    act_si,
    arith,
    beta_divdiff,
    divdiff,
    graded_degree,
    is_symmetric_in,
    isobaric,
    oplus,
    shift_down_poly,
    shift_up_poly,
    specialize_beta,
    truncate_vars,
)


def random_poly(rng: random.Random, num_vars: int = 3, terms: int = 5) -> MultiPoly:
    result = MultiPoly()
    for _ in range(terms):
        exps = [rng.randint(0, 3) for _ in range(num_vars)]
        result = result + MultiPoly.monomial(exps, beta_exp=rng.randint(0, 1), coeff=rng.randint(-3, 3))
    return result


@pytest.fixture
def rng():
    return random.Random(20240917)


class TestMultiPoly:
    def test_zero_coefficients_are_dropped(self):
        p = X(1) - X(1)
        assert p.is_zero()
        assert not p
        assert p.render() == "0"

    def test_trailing_zero_exponents_are_trimmed(self):
        assert MultiPoly.monomial((1, 0, 0)) == X(1)

    def test_integer_coercion(self):
        assert 2 + X(1) == X(1) + 2
        assert 1 - X(1) == -(X(1) - 1)
        assert 3 * X(2) == X(2).scale(3)

    def test_binomial_square(self):
        p = (X(1) + X(2)) ** 2
        assert p.coefficient((1, 1)) == 2
        assert p.coefficient((2,)) == 1
        assert p.total_degree() == 2

    def test_beta_constructor(self):
        assert MultiPoly.beta(2, 3).render() == "3*b^2"
        assert MultiPoly.beta(1, 0).is_zero()
        with pytest.raises(ValueError):
            MultiPoly.beta(-1)

    def test_json_preserves_polynomial(self):
        p = X(1) * X(3) + BETA * X(2) ** 2 - 7
        assert MultiPoly.from_json(p.to_json()) == p

    def test_arith_dispatch(self):
        assert arith("add", X(1), X(2)) == X(1) + X(2)
        assert arith("mul", X(1), X(2)) == X(1) * X(2)
        assert arith("scale", X(1), 4) == 4 * X(1)
        with pytest.raises(UsageError):
            arith("div", X(1), X(2))
        with pytest.raises(UsageError):
            arith("scale", X(1), X(2))


class TestDividedDifferences:
    def test_basic_values(self):
        assert divdiff(1, X(1)) == 1
        assert divdiff(1, X(1) ** 2) == X(1) + X(2)
        assert divdiff(1, X(2) ** 2) == -(X(1) + X(2))
        assert divdiff(2, X(1)) == 0

    def test_symmetric_polynomials_are_killed(self):
        assert divdiff(1, X(1) * X(2) + X(1) + X(2)) == 0

    def test_rejects_nonpositive_index(self):
        with pytest.raises(UsageError):
            divdiff(0, X(1))

    def test_quotient_times_divisor_gives_numerator(self, rng):
        for _ in range(20):
            p = random_poly(rng)
            for i in (1, 2):
                assert (X(i) - X(i + 1)) * divdiff(i, p) == p - act_si(i, p)

    def test_verified_division_mode(self, monkeypatch, rng):
        monkeypatch.setattr(settings.engine, "verify_division", True)
        p = random_poly(rng)
        assert divdiff(1, p) == divdiff(1, p)

    def test_braid_relation(self, rng):
        for _ in range(10):
            p = random_poly(rng, num_vars=4)
            left = divdiff(1, divdiff(2, divdiff(1, p)))
            right = divdiff(2, divdiff(1, divdiff(2, p)))
            assert left == right

    def test_far_operators_commute(self, rng):
        p = random_poly(rng, num_vars=4)
        assert divdiff(1, divdiff(3, p)) == divdiff(3, divdiff(1, p))

    def test_nil_square(self, rng):
        p = random_poly(rng)
        assert divdiff(1, divdiff(1, p)) == 0

    def test_leibniz_rule(self, rng):
        for _ in range(10):
            f, g = random_poly(rng), random_poly(rng)
            assert divdiff(1, f * g) == divdiff(1, f) * g + act_si(1, f) * divdiff(1, g)

    def test_beta_divdiff_square(self, rng):
        p = random_poly(rng)
        assert beta_divdiff(2, beta_divdiff(2, p)) == -BETA * beta_divdiff(2, p)

    def test_beta_divdiff_values(self):
        assert beta_divdiff(1, X(1)) == 1
        assert beta_divdiff(1, MultiPoly.constant(1)) == -BETA

    def test_isobaric_of_x1(self):
        assert isobaric(1, X(1)) == X(1) + X(2) + BETA * X(1) * X(2)

    def test_isobaric_of_x2(self):
        assert isobaric(1, X(2)) == -BETA * X(1) * X(2)


class TestRingMaps:
    def test_oplus(self):
        assert oplus(X(1), X(2)) == X(1) + X(2) + BETA * X(1) * X(2)
        assert oplus(X(1), MultiPoly()) == X(1)

    def test_shift_maps(self, rng):
        p = random_poly(rng)
        assert shift_down_poly(shift_up_poly(p)) == p
        assert shift_up_poly(X(1) * X(2)) == X(2) * X(3)
        assert shift_down_poly(X(1) + X(2)) == X(1)

    def test_truncate_vars(self):
        assert truncate_vars(X(1) + X(3) + X(1) * X(3), 2) == X(1)
        assert truncate_vars(X(2), 0) == 0
        with pytest.raises(UsageError):
            truncate_vars(X(1), -1)

    def test_specialize_beta(self):
        p = BETA * X(1) + MultiPoly.beta(2, 3) + 1
        assert specialize_beta(p, 0) == 1
        assert specialize_beta(p, -1) == 4 - X(1)

    def test_graded_degree(self):
        assert graded_degree(X(1) + BETA * X(1) * X(2)) == 1
        assert graded_degree(X(1) + X(1) * X(2)) is None
        assert graded_degree(MultiPoly()) is None

    def test_is_symmetric_in(self):
        e2 = X(1) * X(2) + X(1) * X(3) + X(2) * X(3)
        assert is_symmetric_in(e2, 3)
        assert not is_symmetric_in(X(1), 2)
