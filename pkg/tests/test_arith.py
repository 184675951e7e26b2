"""
Tests for arithmetic functions and factorization types
"""
from math import comb, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from divgraph.arith import (
    big_omega,
    divisor_count,
    divisor_sum_of_counts,
    divisors,
    factor,
    factorization_type,
    instantiate,
    mobius,
    mobius_sum,
    small_omega,
    squarefree_integer,
    types_up_to,
)
from divgraph.domain import FactorizationType
from divgraph.exceptions import InvalidInputError


class TestFactorization:
    """Test factor and factorization_type"""

    def test_factor_orders_primes(self):
        """Test primes come out strictly increasing"""
        assert factor(360).pairs == [(2, 3), (3, 2), (5, 1)]

    def test_factor_of_one_is_empty(self):
        """Test 1 is the empty product"""
        assert factor(1).factors == ()
        assert factorization_type(1).exponents == ()

    @pytest.mark.parametrize("n, expected", [
        (36, (2, 2)),
        (12, (1, 2)),
        (18, (1, 2)),
        (30, (1, 1, 1)),
        (16, (4,)),
        (2 ** 61 - 1, (1,)),
    ])
    def test_factorization_type(self, n, expected):
        """Test types are sorted exponent multisets"""
        assert factorization_type(n).exponents == expected

    @pytest.mark.parametrize("bad", [0, -6, 2 ** 64, 2.5, True])
    def test_invalid_integers_rejected(self, bad):
        """Test nonpositive, oversized and non-integer inputs"""
        with pytest.raises(InvalidInputError):
            factor(bad)

    def test_invalid_input_is_value_error(self):
        """Test InvalidInputError can be caught as ValueError"""
        with pytest.raises(ValueError):
            factorization_type(0)


class TestArithmeticFunctions:
    """Test Omega, omega, Moebius and divisor functions"""

    def test_omegas(self):
        """Test Omega counts multiplicity and omega does not"""
        assert big_omega(360) == 6
        assert small_omega(360) == 3
        assert big_omega(1) == 0

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, -1), (6, 1), (30, -1), (12, 0), (210, 1)])
    def test_mobius(self, n, expected):
        """Test mu on squarefree and non-squarefree n"""
        assert mobius(n) == expected

    def test_mobius_sum(self):
        """Test sum_{d|m} mu(d) vanishes except at 1"""
        assert mobius_sum(1) == 1
        assert all(mobius_sum(m) == 0 for m in range(2, 60))

    def test_divisors_ascending(self):
        """Test divisor enumeration order"""
        assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
        assert divisor_count(36) == 9

    def test_divisor_sum_of_counts(self):
        """Test sum_{b|n} d(b) against direct enumeration"""
        for n in (1, 12, 36, 30, 64):
            direct = sum(divisor_count(b) for b in divisors(n))
            assert divisor_sum_of_counts(n) == direct

    def test_squarefree_integer(self):
        """Test products of the first primes"""
        assert squarefree_integer(3) == 30
        assert squarefree_integer(0) == 1
        assert squarefree_integer(2, primes=[5, 7]) == 35

    @given(st.integers(min_value=1, max_value=10 ** 6))
    def test_divisor_sum_is_binomial_product(self, n):
        """Test sum_{b|n} d(b) = prod C(a_i + 2, 2)"""
        t = factorization_type(n)
        assert divisor_sum_of_counts(n) == prod(comb(a + 2, 2) for a in t.exponents)


class TestInstantiate:
    """Test integers of a given type"""

    def test_smallest_integer_of_type(self):
        """Test the largest exponent goes to the smallest prime"""
        assert instantiate(FactorizationType.of((1, 2))) == 12
        assert instantiate(FactorizationType.of((2, 2))) == 36
        assert instantiate(FactorizationType()) == 1

    def test_explicit_primes(self):
        """Test exponents pair with the given primes in order"""
        assert instantiate(FactorizationType.of((1, 2)), primes=[5, 3]) == 5 * 9

    @pytest.mark.parametrize("primes", [[2], [2, 2], [2, 4]])
    def test_bad_primes_rejected(self, primes):
        """Test wrong count, repeated or composite primes"""
        with pytest.raises(InvalidInputError):
            instantiate(FactorizationType.of((1, 1)), primes=primes)

    @given(st.lists(st.integers(min_value=1, max_value=4), max_size=4))
    def test_instantiate_round_trip(self, parts):
        """Test factorization_type(instantiate(t)) == t"""
        t = FactorizationType.of(parts)
        assert factorization_type(instantiate(t)) == t


class TestFactorizationType:
    """Test the FactorizationType entity"""

    def test_parse(self):
        """Test text forms"""
        assert FactorizationType.parse("2,1").exponents == (1, 2)
        assert FactorizationType.parse("(1,1,1)").exponents == (1, 1, 1)
        assert FactorizationType.parse("").exponents == ()

    def test_validation(self):
        """Test nonpositive and unsorted parts are rejected"""
        with pytest.raises(ValueError):
            FactorizationType(exponents=(0, 1))
        with pytest.raises(ValueError):
            FactorizationType(exponents=(2, 1))

    def test_derived_values(self):
        """Test d, Omega, v and mu"""
        t = FactorizationType.of((2, 2))
        assert (t.d, t.big_omega, t.vertex_count, t.mobius) == (2, 4, 9, 0)
        assert FactorizationType.of((1, 1, 1)).mobius == -1
        assert FactorizationType().mobius == 1

    def test_augmented(self):
        """Test appending fresh primes keeps the type sorted"""
        assert FactorizationType.of((2,)).augmented(1, 1).exponents == (1, 1, 2)
        assert str(FactorizationType.of((1, 2))) == "(1,2)"

    def test_types_up_to(self):
        """Test enumeration of all types with at most v vertices"""
        found = [t.exponents for t in types_up_to(8)]
        assert found[0] == ()
        assert set(found) == {(), (1,), (2,), (3,), (4,), (5,), (6,), (7,), (1, 1), (1, 2), (1, 3), (1, 1, 1)}
        assert all(t.vertex_count <= 8 for t in types_up_to(80))
        assert types_up_to(0) == []
