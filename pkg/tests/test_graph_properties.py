"""
Tests for cliques, colourings, planarity and DOT export
"""
import pytest

from divgraph.arith import types_up_to
from divgraph.config import DivGraphConfig
from divgraph.exceptions import InvalidInputError, SizeGuardError
from divgraph.graph import (
    PLANAR_TYPES,
    build,
    build_from_integer,
    clique_number,
    divisor_labels,
    field_labels,
    independence_number,
    maximum_clique_size,
    maximum_independent_set_size,
    omega_coloring,
    planarity_class,
    planarity_oracle,
    to_dot,
    universal_vertex_eigenvectors,
    witness_holds,
)
from divgraph.graph.planarity import MINIMAL_WITNESSES


class TestCliques:
    """Test clique and independence numbers"""

    def test_brute_force_helpers(self, k4_minus_edge):
        """Test exhaustive search on K_4 minus an edge"""
        assert maximum_clique_size(k4_minus_edge) == 3
        assert maximum_independent_set_size(k4_minus_edge) == 2

    def test_clique_number_d36(self):
        """Test omega(D_36) = 1 + Omega(36) with a divisor chain"""
        witness = clique_number((2, 2))
        assert witness.size == 5
        assert witness.chain == [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]
        assert witness.brute_force_size == 5

    def test_independence_number_d36(self):
        """Test the middle layer p^2, pq, q^2"""
        witness = independence_number((2, 2))
        assert witness.size == 3
        assert witness.antichain == [(2, 0), (1, 1), (0, 2)]
        assert witness.brute_force_size == 3

    def test_brute_force_skipped_above_limit(self):
        """Test large graphs rely on the formula only"""
        witness = independence_number((1, 1, 1, 1, 1))
        assert witness.size == 10
        assert witness.brute_force_size is None

    @pytest.mark.parametrize("t", [t for t in types_up_to(24) if t.exponents])
    def test_formulas_match_brute_force(self, t):
        """Test clique and independence numbers on every small type"""
        assert clique_number(t).brute_force_size == t.big_omega + 1
        assert independence_number(t).brute_force_size is not None

    def test_omega_coloring(self):
        """Test c(m) = Omega(m) uses 1 + Omega(n) colours"""
        coloring = omega_coloring((2, 2))
        assert coloring.proper
        assert coloring.num_colors == 5
        assert coloring.colors == [0, 1, 2, 1, 2, 3, 2, 3, 4]

    def test_universal_vertex_eigenvectors(self):
        """Test e_1 - e_n for D_6 and two witnesses for K_3"""
        witnesses = universal_vertex_eigenvectors(build((1, 1)))
        assert [w.vector for w in witnesses] == [[1, 0, 0, -1]]
        assert len(universal_vertex_eigenvectors(build((2,)))) == 2
        assert universal_vertex_eigenvectors(build(())) == []


class TestPlanarity:
    """Test the planarity classification and its witnesses"""

    @pytest.mark.parametrize("t", sorted(PLANAR_TYPES))
    def test_planar_types(self, t):
        """Test the six planar types"""
        report = planarity_class(t)
        assert report.planar
        assert report.witness_kind is None

    @pytest.mark.parametrize("t, kind", [
        ((4,), "K5"),
        ((1, 3), "K33"),
        ((2, 2), "K5-subdivision"),
        ((1, 1, 1), "K5-subdivision"),
    ])
    def test_minimal_nonplanar_types(self, t, kind):
        """Test each minimal nonplanar type carries its own witness"""
        report = planarity_class(t)
        assert not report.planar
        assert report.witness_kind == kind
        assert report.offending_subtype == list(t)

    def test_minor_type_witness(self):
        """Test (2,3) is nonplanar through its divisor of type (1,3)"""
        report = planarity_class((2, 3))
        assert not report.planar
        assert report.witness_kind == "minor-type"
        assert report.offending_subtype == [1, 3]
        g = build((2, 3))
        for x in report.witness_vertices:
            g.index(x)

    def test_edge_bound(self):
        """Test the necessary bound e <= 3v - 6 on D_30, D_12 and D_36"""
        assert planarity_class((1, 1, 1)).edge_bound_violated
        assert not planarity_class((1, 2)).edge_bound_violated
        assert planarity_class((2, 2)).edge_bound_violated

    @pytest.mark.parametrize("witness", MINIMAL_WITNESSES, ids=lambda w: f"{w.kind}{w.subtype}")
    def test_witnesses_hold(self, witness):
        """Test every stored witness by divisibility"""
        assert witness_holds(witness)

    def test_witness_vertices_form_subdivision(self):
        """Test the K5 subdivision of D_36 inside the built graph"""
        report = planarity_class((2, 2))
        used = report.witness_vertices + report.subdivision_vertices
        assert len(set(used)) == len(used) == 6

    @pytest.mark.parametrize("t", types_up_to(60))
    def test_classification_matches_oracle(self, t):
        """Test the classification against the left-right planarity test"""
        assert planarity_class(t).planar == planarity_oracle(build(t))

    def test_oracle_guard(self):
        """Test planarity_max_vertices"""
        config = DivGraphConfig.for_testing(planarity_max_vertices=8)
        with pytest.raises(SizeGuardError):
            planarity_oracle(build((2, 2), config), config)


class TestExport:
    """Test DOT export and labels"""

    def test_dot_of_k2(self):
        """Test the full DOT text of D_p"""
        assert to_dot(build((1,))) == 'graph "D_(1)" {\n  0 [label="1"];\n  1 [label="2"];\n  0 -- 1;\n}\n'

    def test_divisor_labels_of_type(self):
        """Test a type graph is labelled by the smallest integer of that type"""
        assert divisor_labels(build((1, 2))) == [1, 3, 2, 6, 4, 12]

    def test_divisor_labels_of_integer(self):
        """Test an integer graph keeps its own divisors"""
        assert divisor_labels(build_from_integer(12)) == [1, 2, 4, 3, 6, 12]

    def test_field_labels(self):
        """Test subfield labels F_{p^m}"""
        assert field_labels(build((1,)), base_prime=3) == ["F_{3^1}", "F_{3^2}"]

    def test_exponent_labels_and_edges(self, d36):
        """Test exponent labels and one edge line per edge"""
        dot = to_dot(d36, labels="exponent", name="D36")
        assert dot.startswith('graph "D36" {')
        assert '4 [label="(1,1)"];' in dot
        assert dot.count(" -- ") == 27

    def test_unknown_label_style(self, d36):
        """Test label style validation"""
        with pytest.raises(InvalidInputError):
            to_dot(d36, labels="roman")
