"""
Tests for characteristic polynomial divisibility and explicit eigenvectors
"""
import numpy as np
import pytest

from divgraph.arith import squarefree_integer, types_up_to
from divgraph.config import DivGraphConfig
from divgraph.exceptions import PreconditionError, SizeGuardError, VerificationError
from divgraph.graph import build
from divgraph.spectra import (
    block_form_npq,
    kernel_block,
    kernel_vector_two_prime_powers,
    minus_one_eigenvector,
    mobius_eigenvector,
    npq_order,
    six_case_identities,
    two_prime_matrix,
    two_prime_order,
    verify_f_divides,
    verify_f_squared_divides,
)
from divgraph.domain import FactorizationType


class TestDivisibility:
    """Test f_n | f_npq and f_n^2 | f_npq"""

    def test_empty_type(self):
        """Test lambda | lambda^4 - 5 lambda^2 - 4 lambda"""
        report = verify_f_divides(())
        assert report.divides
        assert report.lifted_type == [1, 1]
        assert report.divisor == [0, 1]
        assert report.quotient == [-4, -5, 0, 1]

    @pytest.mark.parametrize("t", types_up_to(12))
    def test_f_divides_small_types(self, t):
        """Test the divisibility on every type with at most 12 vertices"""
        assert verify_f_divides(t).divides

    @pytest.mark.parametrize("t", [t for t in types_up_to(12) if 1 in t.exponents])
    def test_f_squared_divides(self, t):
        """Test the squared divisibility when some prime divides n exactly once"""
        report = verify_f_squared_divides(t)
        assert report.squared
        assert report.divides

    def test_squared_needs_a_unit_part(self):
        """Test the precondition on t"""
        with pytest.raises(PreconditionError):
            verify_f_squared_divides((2,))

    def test_guard_on_lifted_graph(self):
        """Test charpoly_max_dim applies to D_npq"""
        config = DivGraphConfig.for_testing(charpoly_max_dim=8)
        with pytest.raises(SizeGuardError):
            verify_f_divides((1, 1), config)

    def test_failed_division_raises(self, mocker):
        """Test a remainder is reported as a verification failure"""
        mocker.patch("divgraph.spectra.theorems.poly_divides", return_value=(False, None))
        with pytest.raises(VerificationError) as exc:
            verify_f_divides((1,))
        assert exc.value.details["type"] == [1]


class TestBlockForm:
    """Test the block decomposition of D_npq"""

    def test_npq_order_is_permutation(self):
        """Test the block order covers every vertex once"""
        lifted, perm = npq_order(FactorizationType.of((1, 2)))
        assert lifted.exponents == (1, 1, 1, 2)
        assert sorted(perm) == list(range(24))

    @pytest.mark.parametrize("t", [(), (1,), (2,), (1, 1), (1, 2)])
    def test_block_form_holds(self, t):
        """Test [[B,C,C,C],[C^T,B,0,C],[C^T,0,B,C],[C^T,C^T,C^T,B]]"""
        report = block_form_npq(t)
        assert report.holds
        assert report.mismatches == []


class TestExplicitEigenvectors:
    """Test the Moebius, {1, n} and two-prime-power witnesses"""

    def test_mobius_vector_of_30(self):
        """Test v = (0, -1, -1, -1, 1, 1, 1, 0) on 1, 2, 3, 5, 6, 10, 15, 30"""
        witness = mobius_eigenvector(30)
        assert witness.eigenvalue == -2
        assert witness.vector == [0, -1, -1, -1, 1, 1, 1, 0]
        assert witness.residual_zero
        assert sorted(witness.permutation) == list(range(8))

    def test_mobius_vector_larger(self):
        """Test omega = 5"""
        witness = mobius_eigenvector(2 * 3 * 5 * 7 * 11)
        assert len(witness.vector) == 32
        assert witness.residual_zero

    @pytest.mark.parametrize("omega", [3, 5, 7, 9])
    def test_mobius_vector_odd_omega(self, omega):
        """Test the -2 witness on the product of the first omega primes"""
        witness = mobius_eigenvector(squarefree_integer(omega))
        assert len(witness.vector) == 2 ** omega
        assert witness.residual_zero

    @pytest.mark.parametrize("n", [6, 12, 7])
    def test_mobius_preconditions(self, n):
        """Test mu(n) != -1 and n prime"""
        with pytest.raises(PreconditionError):
            mobius_eigenvector(n)

    def test_mobius_vector_in_canonical_order(self):
        """Test the permuted vector is a -2 eigenvector of build(type)"""
        witness = mobius_eigenvector(30)
        adjacency = build((1, 1, 1)).adjacency.astype(np.int64)
        canonical = np.zeros(8, dtype=np.int64)
        canonical[witness.permutation] = witness.vector
        assert np.array_equal(adjacency @ canonical, -2 * canonical)

    def test_minus_one_vector(self):
        """Test e_1 - e_n on D_6"""
        witness = minus_one_eigenvector((1, 1))
        assert witness.vector == [1, 0, 0, -1]
        assert witness.eigenvalue == -1

    @pytest.mark.parametrize("t", [t for t in types_up_to(32) if t.exponents])
    def test_minus_one_vector_everywhere(self, t):
        """Test e_1 - e_n for every type with n >= 2"""
        assert minus_one_eigenvector(t).residual_zero

    def test_minus_one_needs_two_vertices(self):
        """Test D_1"""
        with pytest.raises(PreconditionError):
            minus_one_eigenvector(())


class TestTwoPrimePowers:
    """Test the 6-periodic kernel vector of D_{p^u q^v}"""

    def test_two_prime_order(self):
        """Test the order 1, q, p, pq on D_6"""
        assert two_prime_order(1, 1) == [0, 2, 1, 3]

    def test_two_prime_matrix_is_reordered_adjacency(self):
        """Test M_a keeps the graph"""
        m = two_prime_matrix(1, 3)
        assert m.shape == (8, 8)
        assert int(m.sum()) == 2 * build((1, 3)).edge_count
        assert m[0].tolist() == [0] + [1] * 7

    def test_kernel_blocks(self):
        """Test the shifted period s = (0, 1, 1, 0, -1, -1)"""
        assert kernel_block(0, 4) == [0, 1, 1, 0]
        assert kernel_block(1, 4) == [-1, 0, 1, 1]

    def test_kernel_vector_of_pq(self):
        """Test X = (0, 1, -1, 0) on D_pq"""
        witness = kernel_vector_two_prime_powers(1, 1)
        assert witness.vector == [0, 1, -1, 0]
        assert witness.eigenvalue == 0

    @pytest.mark.parametrize("u, v", [(1, 7), (7, 1), (7, 7), (7, 13), (13, 13)])
    def test_kernel_vector_larger(self, u, v):
        """Test u = v = 1 mod 6 beyond the first case"""
        witness = kernel_vector_two_prime_powers(u, v)
        assert witness.residual_zero
        assert len(witness.vector) == (u + 1) * (v + 1)

    @pytest.mark.parametrize("u, v", [(2, 1), (1, 3), (0, 1)])
    def test_kernel_vector_preconditions(self, u, v):
        """Test exponents not congruent to 1 mod 6"""
        with pytest.raises(PreconditionError):
            kernel_vector_two_prime_powers(u, v)

    @pytest.mark.parametrize("v", [1, 7, 13, 19])
    def test_six_case_identities(self, v):
        """Test the block identities behind M X = 0"""
        report = six_case_identities(v)
        assert report.holds
        assert len(report.checked) == 6

    def test_six_case_precondition(self):
        """Test v = 2"""
        with pytest.raises(PreconditionError):
            six_case_identities(2)


class TestBatteriesAtScale:
    """Test the divisibility and eigenvector statements over the full type ranges"""

    @pytest.mark.slow
    @pytest.mark.parametrize("t", types_up_to(80))
    def test_f_divides_up_to_80_vertices(self, acceptance_config, t):
        """Test f_n | f_npq for every type with prod(a_i + 1) <= 80"""
        assert verify_f_divides(t, acceptance_config).divides

    @pytest.mark.slow
    @pytest.mark.parametrize("t", [t for t in types_up_to(80) if 1 in t.exponents])
    def test_f_squared_divides_up_to_80_vertices(self, acceptance_config, t):
        """Test f_n^2 | f_npq for every qualifying type with prod(a_i + 1) <= 80"""
        report = verify_f_squared_divides(t, acceptance_config)
        assert report.squared and report.divides

    @pytest.mark.slow
    def test_minus_one_vector_up_to_1024_vertices(self, acceptance_config):
        """Test e_1 - e_n on every type with 2 <= v <= 1024"""
        for t in types_up_to(1024):
            if t.exponents:
                assert minus_one_eigenvector(t, acceptance_config).residual_zero, t
